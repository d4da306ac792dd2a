#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "agdmm/field.hpp"
#include "agdmm/semigroup.hpp"

namespace agdmm {

enum class CurveKind { Rational, Hermitian };

// Affine rational place. y is unused (zero) on the rational curve.
struct Place {
  Gf x;
  Gf y;
  friend bool operator==(const Place&, const Place&) = default;
};

// A curve together with the function space L(infinity * Q) at its place at
// infinity. Rational: the projective line over GF(q), functions are
// polynomials in x, pole order of x^i is i. Hermitian: y^q0 + y = x^(q0+1)
// over GF(q0^2), functions have a basis of reduced monomials x^i y^j with
// j < q0 and pole order i*q0 + j*(q0+1). The rational case is handled as
// q0 = 1 so j is always 0.
class Curve {
 public:
  static Curve rational(const Field& field);
  static Curve hermitian(std::int64_t q0);

  CurveKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  std::int64_t sub_order() const { return q0_; }

  NumericalSemigroup weierstrass() const;
  std::int64_t place_count() const;
  // All affine rational places, ordered by (x.code, y.code).
  std::vector<Place> places() const;

  std::int64_t pole_order(std::int64_t i, std::int64_t j) const;
  // Inverse of pole_order on reduced monomials; NotRealizable for gaps.
  std::pair<std::int64_t, std::int64_t> monomial_of(std::int64_t order) const;
  bool realizable(std::int64_t order) const;

  bool operator==(const Curve& other) const {
    return kind_ == other.kind_ && field_ == other.field_ && q0_ == other.q0_;
  }

 private:
  Curve(CurveKind kind, Field field, std::int64_t q0)
      : kind_(kind), field_(std::move(field)), q0_(q0) {}

  CurveKind kind_;
  Field field_;
  std::int64_t q0_;
};

// Element of L(infinity * Q) in reduced-monomial coordinates, stored sparsely
// keyed by pole order. Invariant: no zero coefficients.
class FunctionElement {
 public:
  FunctionElement() = default;

  bool is_zero() const { return terms_.empty(); }
  std::int64_t pole_order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Gf coeff_at(std::int64_t order) const;
  Gf leading_coeff() const;
  const std::map<std::int64_t, Gf>& terms() const { return terms_; }
  void set_term(std::int64_t order, Gf c);  // erases on zero

  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;

 private:
  std::map<std::int64_t, Gf> terms_;
};

FunctionElement fe_monomial(const Curve& curve, std::int64_t order, Gf c);
FunctionElement fe_add(const Curve& curve, const FunctionElement& a, const FunctionElement& b);
FunctionElement fe_sub(const Curve& curve, const FunctionElement& a, const FunctionElement& b);
FunctionElement fe_scale(const Curve& curve, Gf c, const FunctionElement& a);
FunctionElement fe_mul(const Curve& curve, const FunctionElement& a, const FunctionElement& b);
Gf fe_evaluate(const Curve& curve, const FunctionElement& f, const Place& at);

// Triangular basis f_s of L(k_max * Q), one entry per pole order s in the
// Weierstrass semigroup with s <= k_max, initially the reduced monomials.
// The poly and matdot code constructions replace selected entries by products
// of other entries; pole orders (hence triangularity) are preserved.
class BasisRegistry {
 public:
  BasisRegistry(const Curve& curve, std::int64_t bound);

  const Curve& curve() const { return curve_; }
  std::int64_t bound() const { return bound_; }
  bool has_entry(std::int64_t order) const { return entries_.count(order) != 0; }
  const FunctionElement& entry(std::int64_t order) const;
  std::vector<std::int64_t> orders_up_to(std::int64_t k) const;

  // Coordinates of f in the current basis (triangular elimination).
  std::map<std::int64_t, Gf> expand(const FunctionElement& f) const;
  // Coefficient of basis entry `order` in the expansion of f.
  Gf project(const FunctionElement& f, std::int64_t order) const;

  // Redefines f_{a+b} := f_a * f_b for every a in deg_a, b in deg_b, in
  // ascending order of the (pairwise distinct) sums.
  void apply_poly_products(const std::vector<std::int64_t>& deg_a,
                           const std::vector<std::int64_t>& deg_b);
  // Rebuilds the entries so that the expansion of f_a * f_b has coefficient
  // [a + b == d] at order d, for all a in deg_a, b in deg_b. Requires the
  // matdot pairing deg_b = d - deg_a and bound >= max(2*max(deg), d).
  void apply_matdot_indicator(const std::vector<std::int64_t>& deg_a,
                              const std::vector<std::int64_t>& deg_b, std::int64_t d);

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  void replace(std::int64_t order, FunctionElement f);

  Curve curve_;
  std::int64_t bound_;
  bool frozen_ = false;
  std::map<std::int64_t, FunctionElement> entries_;
};

}  // namespace agdmm
