#include "agdmm/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace agdmm {
namespace {

constexpr std::int64_t kMaxTable = std::int64_t{1} << 24;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
  require(!gens.empty(), Errc::BadGenerators, "generator list is empty");
  for (auto g : gens)
    require(g >= 1, Errc::BadGenerators, "generator " + std::to_string(g) + " must be >= 1");
  std::sort(gens.begin(), gens.end());
  require(std::adjacent_find(gens.begin(), gens.end()) == gens.end(), Errc::DuplicateElement,
          "duplicate generator");
  std::int64_t g = 0;
  for (auto v : gens) g = std::gcd(g, v);
  require(g == 1, Errc::GcdNotOne, "generators have gcd " + std::to_string(g));

  NumericalSemigroup s;
  s.gens_ = std::move(gens);
  s.multiplicity_ = s.gens_.front();

  // Grow the membership table until the first run of multiplicity-many
  // consecutive members: past such a run everything is a member. gcd 1
  // guarantees the run exists.
  const std::int64_t m0 = s.multiplicity_;
  std::vector<char> table;
  std::int64_t run_start = -1;
  for (std::int64_t cap = 4096; run_start < 0; cap *= 2) {
    require(cap <= kMaxTable, Errc::OutOfRange, "conductor too large");
    const std::int64_t old = static_cast<std::int64_t>(table.size());
    table.resize(static_cast<std::size_t>(cap), 0);
    if (old == 0) table[0] = 1;
    for (std::int64_t t = std::max<std::int64_t>(old, 1); t < cap; ++t)
      for (auto gen : s.gens_) {
        if (gen <= t && table[static_cast<std::size_t>(t - gen)]) {
          table[static_cast<std::size_t>(t)] = 1;
          break;
        }
      }
    std::int64_t run = 0;
    for (std::int64_t t = 0; t < cap; ++t) {
      run = table[static_cast<std::size_t>(t)] ? run + 1 : 0;
      if (run == m0) {
        run_start = t - m0 + 1;
        break;
      }
    }
  }

  std::int64_t frobenius = -1;
  for (std::int64_t t = run_start - 1; t >= 0; --t)
    if (!table[static_cast<std::size_t>(t)]) {
      frobenius = t;
      break;
    }
  s.conductor_ = frobenius + 1;
  s.member_.assign(table.begin(), table.begin() + s.conductor_);
  s.genus_ = std::count(s.member_.begin(), s.member_.end(), char{0});
  return s;
}

NumericalSemigroup NumericalSemigroup::hermitian(std::int64_t q) {
  require(q >= 2, Errc::BadGenerators, "hermitian semigroup needs q >= 2");
  return from_generators({q, q + 1});
}

bool NumericalSemigroup::contains(std::int64_t t) const {
  if (t < 0) return false;
  if (t >= conductor_) return true;
  return member_[static_cast<std::size_t>(t)] != 0;
}

bool NumericalSemigroup::is_sparse() const {
  for (std::int64_t t = 0; t + 1 < conductor_; ++t)
    if (member_[static_cast<std::size_t>(t)] && member_[static_cast<std::size_t>(t + 1)])
      return false;
  return true;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t < conductor_; ++t)
    if (!member_[static_cast<std::size_t>(t)]) out.push_back(t);
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::elements_up_to(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t <= bound; ++t)
    if (contains(t)) out.push_back(t);
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t n) const {
  require(n > 0 && contains(n), Errc::NotInSemigroup,
          "apery base " + std::to_string(n) + " is not a nonzero element");
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t t = i;
    while (!contains(t)) t += n;
    w[static_cast<std::size_t>(i)] = t;
  }
  return w;
}

std::int64_t NumericalSemigroup::tail_size(std::int64_t delta) const {
  require(delta >= 0 && delta <= conductor_ && contains(delta), Errc::InvalidDelta,
          "delta " + std::to_string(delta) + " is not in S cap [0, c]");
  std::int64_t count = 0;
  for (std::int64_t t = std::max<std::int64_t>(delta, 0); t < conductor_; ++t)
    if (member_[static_cast<std::size_t>(t)]) ++count;
  return count;
}

DeltaProfile NumericalSemigroup::delta_profile() const {
  DeltaProfile prof;
  prof.domain = elements_up_to(conductor_);
  prof.values.reserve(prof.domain.size());
  for (auto d : prof.domain) prof.values.push_back(d + 2 * tail_size(d));
  prof.max_value = *std::max_element(prof.values.begin(), prof.values.end());
  for (std::size_t i = 0; i < prof.domain.size(); ++i) {
    if (prof.values[i] == prof.max_value) {
      prof.argmax = prof.domain[i];
      if (2 * prof.domain[i] >= conductor_) prof.argmax_upper_half = prof.domain[i];
    }
  }
  return prof;
}

std::int64_t NumericalSemigroup::phi(std::int64_t x) const {
  require(conductor_ >= 1, Errc::OutOfRange, "phi undefined when the conductor is 0");
  require(x >= 0 && x < conductor_, Errc::OutOfRange,
          "phi argument " + std::to_string(x) + " outside [0, c)");
  return conductor_ - 1 - x;
}

}  // namespace agdmm
