#include "agdmm/field.hpp"

#include <algorithm>

namespace agdmm {
namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 26;

std::vector<std::int64_t> to_digits(std::uint32_t code, std::int64_t p, std::int64_t k) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(k), 0);
  std::int64_t c = code;
  for (std::int64_t i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = c % p;
    c /= p;
  }
  return d;
}

std::uint32_t from_digits(const std::vector<std::int64_t>& d, std::int64_t p, std::int64_t k) {
  std::int64_t code = 0;
  for (std::int64_t i = k - 1; i >= 0; --i) code = code * p + d[static_cast<std::size_t>(i)];
  return static_cast<std::uint32_t>(code);
}

// Remainder of a by b over Z_p, both little-endian, b monic nonconstant.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
  const std::int64_t db = static_cast<std::int64_t>(b.size()) - 1;
  for (std::int64_t i = static_cast<std::int64_t>(a.size()) - 1; i >= db; --i) {
    const std::int64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    a[static_cast<std::size_t>(i)] = 0;
    for (std::int64_t j = 0; j < db; ++j) {
      auto& slot = a[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - c * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(db));
  return a;
}

bool is_zero_poly(const std::vector<std::int64_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2 over Z_p.
bool is_irreducible(const std::vector<std::int64_t>& modulus, std::int64_t p) {
  const std::int64_t k = static_cast<std::int64_t>(modulus.size()) - 1;
  for (std::int64_t deg = 1; deg <= k / 2; ++deg) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < deg; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<std::int64_t> div(static_cast<std::size_t>(deg) + 1, 0);
      std::int64_t t = idx;
      for (std::int64_t i = 0; i < deg; ++i) {
        div[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      div[static_cast<std::size_t>(deg)] = 1;
      if (is_zero_poly(poly_mod(modulus, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> default_modulus(std::int64_t p, std::int64_t k) {
  if (k == 1) return {0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  if (p == 5 && k == 2) return {2, 1, 1};
  return {};
}

Field::Field(std::int64_t p, std::int64_t k) : p_(p), k_(k), modulus_(default_modulus(p, k)) {
  require(!modulus_.empty(), Errc::NoDefaultModulus,
          "no default modulus for p=" + std::to_string(p) + " k=" + std::to_string(k) +
              "; pass one explicitly");
  check_and_finish();
}

Field::Field(std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  check_and_finish();
}

void Field::check_and_finish() {
  require(is_prime(p_), Errc::NotPrime, "characteristic " + std::to_string(p_) + " is not prime");
  require(k_ >= 1, Errc::BadModulus, "extension degree must be >= 1");
  require(static_cast<std::int64_t>(modulus_.size()) == k_ + 1, Errc::BadModulus,
          "modulus must have degree k = " + std::to_string(k_));
  for (auto& c : modulus_) c = ((c % p_) + p_) % p_;
  require(modulus_.back() == 1, Errc::BadModulus, "modulus must be monic");
  require(k_ == 1 || is_irreducible(modulus_, p_), Errc::ReducibleModulus,
          "modulus is reducible over gf(" + std::to_string(p_) + ")");
  q_ = 1;
  for (std::int64_t i = 0; i < k_; ++i) {
    q_ *= p_;
    require(q_ <= kMaxOrder, Errc::OutOfRange, "field order too large");
  }
}

std::string Field::name() const { return "gf(" + std::to_string(q_) + ")"; }

Gf Field::element(std::int64_t code) const {
  require(code >= 0 && code < q_, Errc::OutOfRange,
          "element code " + std::to_string(code) + " outside [0, " + std::to_string(q_) + ")");
  return Gf{static_cast<std::uint32_t>(code)};
}

Gf Field::from_int(std::int64_t n) const {
  return Gf{static_cast<std::uint32_t>(((n % p_) + p_) % p_)};
}

std::vector<Gf> Field::elements() const {
  std::vector<Gf> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (std::int64_t c = 0; c < q_; ++c) out.push_back(Gf{static_cast<std::uint32_t>(c)});
  return out;
}

Gf Field::add(Gf a, Gf b) const {
  if (k_ == 1) return Gf{static_cast<std::uint32_t>((a.code + b.code) % p_)};
  auto da = to_digits(a.code, p_, k_);
  const auto db = to_digits(b.code, p_, k_);
  for (std::int64_t i = 0; i < k_; ++i)
    da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
  return Gf{from_digits(da, p_, k_)};
}

Gf Field::neg(Gf a) const {
  if (k_ == 1) return Gf{static_cast<std::uint32_t>((p_ - a.code) % p_)};
  auto d = to_digits(a.code, p_, k_);
  for (auto& c : d) c = (p_ - c) % p_;
  return Gf{from_digits(d, p_, k_)};
}

Gf Field::sub(Gf a, Gf b) const { return add(a, neg(b)); }

Gf Field::mul(Gf a, Gf b) const {
  if (k_ == 1) return Gf{static_cast<std::uint32_t>((std::int64_t{a.code} * b.code) % p_)};
  const auto da = to_digits(a.code, p_, k_);
  const auto db = to_digits(b.code, p_, k_);
  std::vector<std::int64_t> conv(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (std::int64_t i = 0; i < k_; ++i)
    for (std::int64_t j = 0; j < k_; ++j)
      conv[static_cast<std::size_t>(i + j)] +=
          da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
  for (auto& c : conv) c %= p_;
  return Gf{from_digits(poly_mod(std::move(conv), modulus_, p_), p_, k_)};
}

Gf Field::pow(Gf a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  Gf acc = one();
  Gf base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Gf Field::inv(Gf a) const {
  require(a.code != 0, Errc::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

Gf Field::div(Gf a, Gf b) const { return mul(a, inv(b)); }

}  // namespace agdmm
