#include "agdmm/funcfield.hpp"

#include <algorithm>
#include <string>

namespace agdmm {
namespace {

// q0 = p^e for prime p, returns (p, e); BadInput otherwise.
std::pair<std::int64_t, std::int64_t> prime_power(std::int64_t n) {
  require(n >= 2, Errc::BadInput, "not a prime power: " + std::to_string(n));
  std::int64_t p = n;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::int64_t e = 0;
  std::int64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  require(m == 1, Errc::BadInput, "not a prime power: " + std::to_string(n));
  return {p, e};
}

std::vector<std::int64_t> canonical_set(std::vector<std::int64_t> v, const char* what) {
  std::sort(v.begin(), v.end());
  require(std::adjacent_find(v.begin(), v.end()) == v.end(), Errc::DuplicateElement,
          std::string("duplicate element in ") + what);
  return v;
}

}  // namespace

Curve Curve::rational(const Field& field) { return Curve(CurveKind::Rational, field, 1); }

Curve Curve::hermitian(std::int64_t q0) {
  const auto [p, e] = prime_power(q0);
  return Curve(CurveKind::Hermitian, Field(p, 2 * e), q0);
}

NumericalSemigroup Curve::weierstrass() const {
  if (kind_ == CurveKind::Rational) return NumericalSemigroup::from_generators({1});
  return NumericalSemigroup::from_generators({q0_, q0_ + 1});
}

std::int64_t Curve::place_count() const {
  return kind_ == CurveKind::Rational ? field_.order() : q0_ * q0_ * q0_;
}

std::vector<Place> Curve::places() const {
  std::vector<Place> out;
  if (kind_ == CurveKind::Rational) {
    for (auto x : field_.elements()) out.push_back(Place{x, field_.zero()});
    return out;
  }
  for (auto x : field_.elements()) {
    const Gf rhs = field_.pow(x, q0_ + 1);
    for (auto y : field_.elements())
      if (field_.add(field_.pow(y, q0_), y) == rhs) out.push_back(Place{x, y});
  }
  return out;
}

std::int64_t Curve::pole_order(std::int64_t i, std::int64_t j) const {
  return i * q0_ + j * (q0_ + 1);
}

std::pair<std::int64_t, std::int64_t> Curve::monomial_of(std::int64_t order) const {
  if (order >= 0) {
    const std::int64_t j = order % q0_;
    const std::int64_t rest = order - j * (q0_ + 1);
    if (rest >= 0) return {rest / q0_, j};
  }
  fail(Errc::NotRealizable, "pole order " + std::to_string(order) + " is a gap");
}

bool Curve::realizable(std::int64_t order) const {
  if (order < 0) return false;
  return order - (order % q0_) * (q0_ + 1) >= 0;
}

Gf FunctionElement::coeff_at(std::int64_t order) const {
  auto it = terms_.find(order);
  return it == terms_.end() ? Gf{0} : it->second;
}

Gf FunctionElement::leading_coeff() const {
  return terms_.empty() ? Gf{0} : terms_.rbegin()->second;
}

void FunctionElement::set_term(std::int64_t order, Gf c) {
  if (c == Gf{0})
    terms_.erase(order);
  else
    terms_[order] = c;
}

FunctionElement fe_monomial(const Curve& curve, std::int64_t order, Gf c) {
  curve.monomial_of(order);  // NotRealizable on gaps
  FunctionElement f;
  f.set_term(order, c);
  return f;
}

FunctionElement fe_add(const Curve& curve, const FunctionElement& a, const FunctionElement& b) {
  const Field& gf = curve.field();
  FunctionElement out = a;
  for (const auto& [s, c] : b.terms()) out.set_term(s, gf.add(out.coeff_at(s), c));
  return out;
}

FunctionElement fe_sub(const Curve& curve, const FunctionElement& a, const FunctionElement& b) {
  return fe_add(curve, a, fe_scale(curve, curve.field().from_int(-1), b));
}

FunctionElement fe_scale(const Curve& curve, Gf c, const FunctionElement& a) {
  const Field& gf = curve.field();
  FunctionElement out;
  for (const auto& [s, v] : a.terms()) out.set_term(s, gf.mul(c, v));
  return out;
}

FunctionElement fe_mul(const Curve& curve, const FunctionElement& a, const FunctionElement& b) {
  const Field& gf = curve.field();
  const std::int64_t q0 = curve.sub_order();
  FunctionElement out;
  auto accumulate = [&](std::int64_t i, std::int64_t j, Gf c) {
    const std::int64_t s = curve.pole_order(i, j);
    out.set_term(s, gf.add(out.coeff_at(s), c));
  };
  for (const auto& [sa, ca] : a.terms()) {
    const auto [ia, ja] = curve.monomial_of(sa);
    for (const auto& [sb, cb] : b.terms()) {
      const auto [ib, jb] = curve.monomial_of(sb);
      const Gf c = gf.mul(ca, cb);
      const std::int64_t i = ia + ib;
      const std::int64_t j = ja + jb;
      if (j < q0) {
        accumulate(i, j, c);
      } else {
        // y^q0 = x^(q0+1) - y
        accumulate(i + q0 + 1, j - q0, c);
        accumulate(i, j - q0 + 1, gf.neg(c));
      }
    }
  }
  return out;
}

Gf fe_evaluate(const Curve& curve, const FunctionElement& f, const Place& at) {
  const Field& gf = curve.field();
  Gf acc = gf.zero();
  for (const auto& [s, c] : f.terms()) {
    const auto [i, j] = curve.monomial_of(s);
    Gf term = gf.mul(c, gf.pow(at.x, i));
    if (j > 0) term = gf.mul(term, gf.pow(at.y, j));
    acc = gf.add(acc, term);
  }
  return acc;
}

BasisRegistry::BasisRegistry(const Curve& curve, std::int64_t bound)
    : curve_(curve), bound_(bound) {
  require(bound >= 0, Errc::OutOfRange, "registry bound must be >= 0");
  for (auto s : curve.weierstrass().elements_up_to(bound))
    entries_.emplace(s, fe_monomial(curve, s, curve.field().one()));
}

const FunctionElement& BasisRegistry::entry(std::int64_t order) const {
  auto it = entries_.find(order);
  if (it == entries_.end()) {
    require(curve_.realizable(order), Errc::NotRealizable,
            "pole order " + std::to_string(order) + " is a gap");
    fail(Errc::OutOfRange, "pole order " + std::to_string(order) + " exceeds registry bound " +
                               std::to_string(bound_));
  }
  return it->second;
}

std::vector<std::int64_t> BasisRegistry::orders_up_to(std::int64_t k) const {
  std::vector<std::int64_t> out;
  for (const auto& [s, f] : entries_) {
    if (s > k) break;
    out.push_back(s);
  }
  return out;
}

std::map<std::int64_t, Gf> BasisRegistry::expand(const FunctionElement& f) const {
  const Field& gf = curve_.field();
  std::map<std::int64_t, Gf> coords;
  FunctionElement rest = f;
  while (!rest.is_zero()) {
    const std::int64_t s = rest.pole_order();
    require(has_entry(s), Errc::NotInSpan,
            "pole order " + std::to_string(s) + " outside the registry");
    const FunctionElement& e = entry(s);
    const Gf lambda = gf.div(rest.leading_coeff(), e.leading_coeff());
    coords[s] = lambda;
    rest = fe_sub(curve_, rest, fe_scale(curve_, lambda, e));
    require(rest.pole_order() < s, Errc::RankDeficient, "basis entry lost triangularity");
  }
  return coords;
}

Gf BasisRegistry::project(const FunctionElement& f, std::int64_t order) const {
  auto coords = expand(f);
  auto it = coords.find(order);
  return it == coords.end() ? Gf{0} : it->second;
}

void BasisRegistry::replace(std::int64_t order, FunctionElement f) {
  require(!frozen_, Errc::RegistryFrozen, "basis registry is frozen");
  require(f.pole_order() == order, Errc::InvalidSolution,
          "replacement entry changes pole order " + std::to_string(order));
  entries_[order] = std::move(f);
}

void BasisRegistry::apply_poly_products(const std::vector<std::int64_t>& deg_a,
                                        const std::vector<std::int64_t>& deg_b) {
  const auto da = canonical_set(deg_a, "deg_a");
  const auto db = canonical_set(deg_b, "deg_b");
  struct Pair {
    std::int64_t sum, a, b;
  };
  std::vector<Pair> pairs;
  for (auto a : da)
    for (auto b : db) pairs.push_back({a + b, a, b});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) { return l.sum < r.sum; });
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    require(pairs[i].sum != pairs[i + 1].sum, Errc::InvalidSolution,
            "pairwise sums collide at " + std::to_string(pairs[i].sum));
  for (const auto& pr : pairs) replace(pr.sum, fe_mul(curve_, entry(pr.a), entry(pr.b)));
}

void BasisRegistry::apply_matdot_indicator(const std::vector<std::int64_t>& deg_a,
                                           const std::vector<std::int64_t>& deg_b,
                                           std::int64_t d) {
  const Field& gf = curve_.field();
  const auto da = canonical_set(deg_a, "deg_a");
  const auto db = canonical_set(deg_b, "deg_b");
  require(da.size() == db.size(), Errc::InvalidSolution, "deg_a and deg_b differ in size");
  for (auto a : da)
    require(std::binary_search(db.begin(), db.end(), d - a), Errc::InvalidSolution,
            "deg_b is not d - deg_a");

  // Monomial products are exact on the rational curve; nothing to adjust.
  if (curve_.kind() == CurveKind::Rational) return;

  require(!std::binary_search(da.begin(), da.end(), d) &&
              !std::binary_search(db.begin(), db.end(), d),
          Errc::DInSets, "d = " + std::to_string(d) + " lies in deg_a or deg_b");

  std::vector<std::int64_t> all = da;
  all.insert(all.end(), db.begin(), db.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  const auto in = [](const std::vector<std::int64_t>& v, std::int64_t x) {
    return std::binary_search(v.begin(), v.end(), x);
  };

  if (d % 2 == 0 && in(da, d / 2) && in(db, d / 2)) {
    FunctionElement sq = fe_mul(curve_, entry(d / 2), entry(d / 2));
    if (!(project(sq, d) == gf.one())) replace(d, std::move(sq));
  }

  for (auto di : all) {
    if (2 * di < d) continue;
    const bool in_a = in(da, di);
    const bool in_b = in(db, di);
    const std::vector<std::int64_t>& source = (in_a && in_b) ? all : (in_a ? db : da);
    FunctionElement f = entry(di);
    for (auto b : source) {
      if (b >= di || b + di < d) continue;
      if (b + di == d) {
        const Gf kappa = project(fe_mul(curve_, f, entry(b)), d);
        require(!(kappa == gf.zero()), Errc::InvalidSolution, "vanishing normalization scalar");
        f = fe_scale(curve_, gf.inv(kappa), f);
      } else {
        const Gf alpha = project(fe_mul(curve_, f, entry(b)), d);
        if (alpha == gf.zero()) continue;
        const Gf beta = project(fe_mul(curve_, entry(d - b), entry(b)), d);
        require(!(beta == gf.zero()), Errc::InvalidSolution, "vanishing correction scalar");
        f = fe_sub(curve_, f, fe_scale(curve_, gf.div(alpha, beta), entry(d - b)));
      }
    }
    replace(di, f);
    if (in_a && in_b && 2 * di > d) {
      // The pair (di, di) sums above d; its product may still hit f_d. The
      // square becomes the basis entry at 2*di exactly when it does.
      FunctionElement sq = fe_mul(curve_, entry(di), entry(di));
      if (!(project(sq, d) == gf.zero())) replace(2 * di, std::move(sq));
    }
  }
}

}  // namespace agdmm
