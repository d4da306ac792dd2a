#include "agdmm/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace agdmm {
namespace {

constexpr std::int64_t kSearchGuard = 10'000'000;

std::vector<std::int64_t> canonical_set(std::vector<std::int64_t> v, const char* what) {
  std::sort(v.begin(), v.end());
  require(std::adjacent_find(v.begin(), v.end()) == v.end(), Errc::DuplicateElement,
          std::string("duplicate element in ") + what);
  require(!v.empty(), Errc::BadInput, std::string(what) + " is empty");
  return v;
}

void require_members(const NumericalSemigroup& s, const std::vector<std::int64_t>& v,
                     const char* what) {
  for (auto t : v)
    require(s.contains(t), Errc::NotInSemigroup,
            std::string(what) + " element " + std::to_string(t) + " is not in S");
}

std::int64_t threshold_of(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return a.back() + b.back() + 1;
}

SolutionPair finish_poly(NumericalSemigroup s, std::string method, std::int64_t m, std::int64_t n,
                         std::vector<std::int64_t> da, std::vector<std::int64_t> db) {
  require(validate_poly(s, da, db), Errc::InvalidSolution,
          method + " produced colliding pairwise sums");
  const std::int64_t threshold = threshold_of(da, db);
  return SolutionPair{ProblemKind::Poly, std::move(method), m,         n,
                      std::move(da),     std::move(db),     std::nullopt, threshold,
                      std::move(s)};
}

SolutionPair finish_matdot(NumericalSemigroup s, std::string method, std::int64_t m,
                           std::vector<std::int64_t> da, std::vector<std::int64_t> db,
                           std::int64_t d) {
  const auto found = validate_matdot(s, da, db);
  require(found.has_value(), Errc::InvalidSolution, method + " produced no valid pairing");
  // The intended d must qualify; validate_matdot reports the smallest.
  std::int64_t pairs = 0;
  for (auto a : da)
    if (std::binary_search(db.begin(), db.end(), d - a)) ++pairs;
  require(pairs == static_cast<std::int64_t>(da.size()), Errc::InvalidSolution,
          method + " pairing does not reach m at its own d");
  const std::int64_t threshold = threshold_of(da, db);
  return SolutionPair{ProblemKind::Matdot, std::move(method), m,       m,
                      std::move(da),       std::move(db),     d,       threshold,
                      std::move(s)};
}

NumericalSemigroup naturals() { return NumericalSemigroup::from_generators({1}); }

// min{t in S : t >= x}
std::int64_t next_member(const NumericalSemigroup& s, std::int64_t x) {
  std::int64_t t = std::max<std::int64_t>(x, 0);
  while (!s.contains(t)) ++t;
  return t;
}

// Lexicographic subset iteration: idx holds positions into pool.
bool next_combination(std::vector<std::size_t>& idx, std::size_t pool_size) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] + (k - i) < pool_size) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double combinations(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (out > 1e18) return out;
  }
  return out;
}

}  // namespace

bool validate_poly(const NumericalSemigroup& s, const std::vector<std::int64_t>& deg_a,
                   const std::vector<std::int64_t>& deg_b) {
  const auto da = canonical_set(deg_a, "deg_a");
  const auto db = canonical_set(deg_b, "deg_b");
  require_members(s, da, "deg_a");
  require_members(s, db, "deg_b");

  auto diffs = [](const std::vector<std::int64_t>& v) {
    std::set<std::int64_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) out.insert(v[j] - v[i]);
    return out;
  };
  const auto ea = diffs(da);
  const auto eb = diffs(db);
  bool disjoint = true;
  for (auto e : ea)
    if (eb.count(e)) {
      disjoint = false;
      break;
    }

  std::set<std::int64_t> sums;
  bool distinct = true;
  for (auto a : da)
    for (auto b : db)
      if (!sums.insert(a + b).second) distinct = false;
  assert(disjoint == distinct);
  return distinct;
}

std::optional<std::int64_t> validate_matdot(const NumericalSemigroup& s,
                                            const std::vector<std::int64_t>& deg_a,
                                            const std::vector<std::int64_t>& deg_b) {
  const auto da = canonical_set(deg_a, "deg_a");
  const auto db = canonical_set(deg_b, "deg_b");
  require_members(s, da, "deg_a");
  require_members(s, db, "deg_b");
  require(da.size() == db.size(), Errc::BadInput, "deg_a and deg_b differ in size");
  const auto m = static_cast<std::int64_t>(da.size());
  std::set<std::int64_t> candidates;
  for (auto a : da)
    for (auto b : db) candidates.insert(a + b);
  for (auto d : candidates) {
    std::int64_t pairs = 0;
    for (auto a : da)
      if (std::binary_search(db.begin(), db.end(), d - a)) ++pairs;
    if (pairs == m) return d;
  }
  return std::nullopt;
}

SolutionPair poly_classical(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, Errc::BadInput, "m, n must be >= 1");
  std::vector<std::int64_t> da, db;
  for (std::int64_t i = 0; i < m; ++i) da.push_back(i);
  for (std::int64_t j = 0; j < n; ++j) db.push_back(j * m);
  return finish_poly(naturals(), "classical", m, n, std::move(da), std::move(db));
}

SolutionPair poly_trivial(const NumericalSemigroup& s, std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, Errc::BadInput, "m, n must be >= 1");
  const std::int64_t c = s.conductor();
  std::vector<std::int64_t> da, db;
  for (std::int64_t i = 0; i < m; ++i) da.push_back(c + i);
  for (std::int64_t j = 0; j < n; ++j) db.push_back(c + j * m);
  return finish_poly(s, "trivial", m, n, std::move(da), std::move(db));
}

SolutionPair poly_apery(const NumericalSemigroup& s, std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, Errc::BadInput, "m, n must be >= 1");
  const std::int64_t mp = next_member(s, m);
  auto ap = s.apery(mp);
  std::sort(ap.begin(), ap.end());
  require(static_cast<std::int64_t>(ap.size()) >= m, Errc::ApInsufficiency,
          "apery set smaller than m");  // |Ap| = m' >= m by construction
  std::vector<std::int64_t> da(ap.begin(), ap.begin() + m);
  std::vector<std::int64_t> db;
  for (std::int64_t j = 0; j < n; ++j) db.push_back(j * mp);
  return finish_poly(s, "apery", m, n, std::move(da), std::move(db));
}

SolutionPair poly_recursive(const NumericalSemigroup& s, std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, Errc::BadInput, "m, n must be >= 1");
  const std::int64_t c = s.conductor();
  std::vector<std::int64_t> da, db;
  for (std::int64_t i = 0; i < m; ++i) da.push_back(c + i);
  std::int64_t prev = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t mj = j == 0 ? 0 : next_member(s, prev + m);
    db.push_back(mj);
    prev = mj;
  }
  return finish_poly(s, "recursive", m, n, std::move(da), std::move(db));
}

SolutionPair poly_zero_variant(const NumericalSemigroup& s, std::int64_t m, std::int64_t n) {
  require(s.contains(m), Errc::MNotInSemigroup,
          "m = " + std::to_string(m) + " must be a semigroup element");
  auto base = poly_recursive(s, m, n);
  std::vector<std::int64_t> multiples;
  for (auto a : base.deg_a)
    if (a % m == 0) multiples.push_back(a);
  require(multiples.size() == 1, Errc::NoUniqueMultiple,
          "expected exactly one multiple of m in [c, c+m-1]");
  std::vector<std::int64_t> da;
  da.push_back(0);
  for (auto a : base.deg_a)
    if (a != multiples.front()) da.push_back(a);
  std::sort(da.begin(), da.end());
  return finish_poly(s, "zero", m, n, std::move(da), base.deg_b);
}

SolutionPair matdot_classical(std::int64_t m) {
  require(m >= 1, Errc::BadInput, "m must be >= 1");
  std::vector<std::int64_t> d;
  for (std::int64_t i = 0; i < m; ++i) d.push_back(i);
  auto db = d;
  return finish_matdot(naturals(), "classical", m, std::move(d), std::move(db), m - 1);
}

SolutionPair matdot_trivial(const NumericalSemigroup& s, std::int64_t m) {
  require(m >= 1, Errc::BadInput, "m must be >= 1");
  const std::int64_t c = s.conductor();
  std::vector<std::int64_t> d;
  for (std::int64_t i = 0; i < m; ++i) d.push_back(c + i);
  auto db = d;
  return finish_matdot(s, "trivial", m, std::move(d), std::move(db), 2 * c + m - 1);
}

SolutionPair matdot_optimal(const NumericalSemigroup& s, std::int64_t m) {
  const std::int64_t c = s.conductor();
  require(m >= 2 * c, Errc::MTooSmall,
          "optimal construction needs m >= 2c = " + std::to_string(2 * c));
  const auto prof = s.delta_profile();
  const std::int64_t delta = prof.argmax;
  const std::int64_t nd = s.tail_size(delta);
  const std::int64_t d = m - 1 + 2 * c - 2 * nd;
  std::vector<std::int64_t> da;
  for (std::int64_t t = delta; t < c; ++t)
    if (s.contains(t)) da.push_back(t);
  const auto tail = da;
  for (std::int64_t t = c; t <= d - c; ++t) da.push_back(t);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) da.push_back(d - *it);
  require(static_cast<std::int64_t>(da.size()) == m, Errc::InvalidSolution,
          "optimal set size mismatch");
  auto db = da;
  auto out = finish_matdot(s, "optimal", m, std::move(da), std::move(db), d);
  require(out.threshold == 2 * (d - delta) + 1, Errc::InvalidSolution,
          "optimal threshold formula mismatch");
  return out;
}

std::optional<std::int64_t> poly_lower_bound(const NumericalSemigroup& s, std::int64_t m,
                                             std::int64_t n) {
  if (m * n < s.left_part_size()) return std::nullopt;
  return s.genus() + m * n;
}

std::int64_t default_search_bound(const NumericalSemigroup& s, std::int64_t m, std::int64_t n) {
  return 2 * s.conductor() + 2 * (m + n);
}

SolutionPair brute_force_optimal(const NumericalSemigroup& s, ProblemKind kind, std::int64_t m,
                                 std::int64_t n, std::int64_t bound) {
  require(m >= 1, Errc::BadInput, "m must be >= 1");
  const auto pool = s.elements_up_to(bound);
  const auto pool_size = static_cast<std::int64_t>(pool.size());

  std::optional<SolutionPair> best;
  auto better = [&](const std::vector<std::int64_t>& da, const std::vector<std::int64_t>& db) {
    if (!best) return true;
    const std::int64_t t = threshold_of(da, db);
    if (t != best->threshold) return t < best->threshold;
    if (da != best->deg_a) return da < best->deg_a;
    return db < best->deg_b;
  };

  if (kind == ProblemKind::Poly) {
    require(n >= 1, Errc::BadInput, "n must be >= 1");
    require(combinations(pool_size, m) * combinations(pool_size, n) <=
                static_cast<double>(kSearchGuard),
            Errc::SearchSpaceTooLarge, "poly search space exceeds the guard");
    // Cheap distinct-sums filter; the kept candidate is fully re-validated
    // by finish_poly.
    std::vector<std::int64_t> stamp(static_cast<std::size_t>(2 * bound + 1), -1);
    std::int64_t epoch = 0;
    auto distinct_sums = [&](const std::vector<std::int64_t>& da,
                             const std::vector<std::int64_t>& db) {
      ++epoch;
      for (auto a : da)
        for (auto b : db) {
          auto& cell = stamp[static_cast<std::size_t>(a + b)];
          if (cell == epoch) return false;
          cell = epoch;
        }
      return true;
    };
    if (pool_size >= m && pool_size >= n) {
      std::vector<std::size_t> ia(static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = i;
      do {
        std::vector<std::int64_t> da;
        for (auto i : ia) da.push_back(pool[i]);
        std::vector<std::size_t> ib(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < ib.size(); ++i) ib[i] = i;
        do {
          std::vector<std::int64_t> db;
          for (auto i : ib) db.push_back(pool[i]);
          if (distinct_sums(da, db) && better(da, db))
            best = finish_poly(s, "search", m, n, da, db);
        } while (next_combination(ib, static_cast<std::size_t>(pool_size)));
      } while (next_combination(ia, static_cast<std::size_t>(pool_size)));
    }
  } else {
    // A matdot solution is determined by (min, max, d): deg_b = d - deg_a
    // forces deg_a to be m elements of X = {t in S cap [min,max] : d-t in S},
    // and min, max, d-min, d-max must all lie in S cap [0, bound].
    require(pool_size * pool_size * (2 * bound + 1) <= kSearchGuard, Errc::SearchSpaceTooLarge,
            "matdot search space exceeds the guard");
    for (auto lo : pool) {
      for (auto hi : pool) {
        if (hi < lo) continue;
        if (m == 1 && hi != lo) continue;
        for (std::int64_t d = hi; d <= lo + bound; ++d) {
          if (!s.contains(d - lo) || !s.contains(d - hi)) continue;
          std::vector<std::int64_t> x;
          for (std::int64_t t = lo; t <= hi; ++t)
            if (s.contains(t) && s.contains(d - t)) x.push_back(t);
          if (static_cast<std::int64_t>(x.size()) < m) continue;
          if (x.front() != lo || x.back() != hi) continue;
          // lexicographically smallest m-subset of X containing lo and hi:
          // the m-1 smallest elements plus hi (hi cannot be among them since
          // |X| >= m puts it strictly later).
          std::vector<std::int64_t> da(x.begin(), x.begin() + (m - 1));
          da.push_back(hi);
          std::vector<std::int64_t> db;
          for (auto it = da.rbegin(); it != da.rend(); ++it) db.push_back(d - *it);
          if (better(da, db)) best = finish_matdot(s, "search", m, da, db, d);
        }
      }
    }
  }

  require(best.has_value(), Errc::NoSolutionInBound,
          "no valid solution within bound " + std::to_string(bound));
  return *best;
}

SolutionPair build_by_method(const NumericalSemigroup& s, ProblemKind kind,
                             const std::string& method, std::int64_t m, std::int64_t n) {
  if (kind == ProblemKind::Poly) {
    if (method == "classical") {
      require(s == naturals(), Errc::BadInput, "classical method requires S = N (gens 1)");
      return poly_classical(m, n);
    }
    if (method == "trivial") return poly_trivial(s, m, n);
    if (method == "apery") return poly_apery(s, m, n);
    if (method == "recursive") return poly_recursive(s, m, n);
    if (method == "zero") return poly_zero_variant(s, m, n);
    fail(Errc::BadInput, "unknown poly method: " + method);
  }
  if (method == "classical") {
    require(s == naturals(), Errc::BadInput, "classical method requires S = N (gens 1)");
    return matdot_classical(m);
  }
  if (method == "trivial") return matdot_trivial(s, m);
  if (method == "optimal") return matdot_optimal(s, m);
  fail(Errc::BadInput, "unknown matdot method: " + method);
}

}  // namespace agdmm
