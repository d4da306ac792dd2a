#pragma once

#include <cstdint>
#include <vector>

#include "agdmm/error.hpp"

namespace agdmm {

// Delta(delta) = delta + 2*|[delta, c-1] cap S| evaluated over S cap [0, c].
// Ties in the maximum are broken toward the largest argument.
struct DeltaProfile {
  std::vector<std::int64_t> domain;  // S cap [0, c], ascending
  std::vector<std::int64_t> values;  // Delta at each domain point
  std::int64_t max_value = 0;
  std::int64_t argmax = 0;            // largest maximizer
  std::int64_t argmax_upper_half = 0; // largest maximizer with 2*delta >= c
};

// Numerical semigroup <g1, ..., gr> with gcd 1: cofinite submonoid of the
// nonnegative integers. Membership below the conductor is cached in a table.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<std::int64_t> gens);
  static NumericalSemigroup hermitian(std::int64_t q);  // <q, q+1>

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t conductor() const { return conductor_; }
  std::int64_t genus() const { return genus_; }
  std::int64_t multiplicity() const { return multiplicity_; }
  // n(S) = |S cap [0, c-1]|; equals the conductor minus the genus.
  std::int64_t left_part_size() const { return conductor_ - genus_; }

  bool contains(std::int64_t t) const;
  // Partial order on S: a <= b iff b - a is in S.
  bool leq(std::int64_t a, std::int64_t b) const { return contains(b - a); }
  // No two consecutive elements below the conductor.
  bool is_sparse() const;

  std::vector<std::int64_t> gaps() const;
  std::vector<std::int64_t> elements_up_to(std::int64_t bound) const;

  // Apery set of n (n in S, n > 0), indexed by residue mod n:
  // result[i] = min{t in S : t = i mod n}.
  std::vector<std::int64_t> apery(std::int64_t n) const;

  // n(delta) = |[delta, c-1] cap S| for delta >= 0.
  std::int64_t tail_size(std::int64_t delta) const;
  DeltaProfile delta_profile() const;

  // phi(x) = c - 1 - x, an involution of [0, c-1] that swaps gaps and
  // non-gaps and reverses the partial order. Requires c >= 1.
  std::int64_t phi(std::int64_t x) const;

  bool operator==(const NumericalSemigroup& other) const {
    return conductor_ == other.conductor_ && member_ == other.member_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> gens_;
  std::vector<char> member_;  // membership on [0, conductor)
  std::int64_t conductor_ = 0;
  std::int64_t genus_ = 0;
  std::int64_t multiplicity_ = 0;
};

}  // namespace agdmm
