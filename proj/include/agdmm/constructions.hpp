#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agdmm/semigroup.hpp"

namespace agdmm {

enum class ProblemKind { Poly, Matdot };

// Degree sets of a distributed-multiplication scheme. For Poly, every
// pairwise sum a+b is distinct and identifies one block product; for Matdot,
// deg_b = d - deg_a and the coordinate at pole order d carries the full
// product. threshold = max(deg_a) + max(deg_b) + 1 always.
struct SolutionPair {
  ProblemKind kind;
  std::string method;
  std::int64_t m = 0;
  std::int64_t n = 0;  // equals m for Matdot
  std::vector<std::int64_t> deg_a;
  std::vector<std::int64_t> deg_b;
  std::optional<std::int64_t> d;
  std::int64_t threshold = 0;
  NumericalSemigroup semigroup;
};

// True iff the positive difference sets of deg_a and deg_b are disjoint;
// cross-checked internally against all-pairs-distinct-sums.
bool validate_poly(const NumericalSemigroup& s, const std::vector<std::int64_t>& deg_a,
                   const std::vector<std::int64_t>& deg_b);
// Smallest d such that exactly m = |deg_a| pairs sum to d, or nullopt.
std::optional<std::int64_t> validate_matdot(const NumericalSemigroup& s,
                                            const std::vector<std::int64_t>& deg_a,
                                            const std::vector<std::int64_t>& deg_b);

SolutionPair poly_classical(std::int64_t m, std::int64_t n);
SolutionPair poly_trivial(const NumericalSemigroup& s, std::int64_t m, std::int64_t n);
SolutionPair poly_apery(const NumericalSemigroup& s, std::int64_t m, std::int64_t n);
SolutionPair poly_recursive(const NumericalSemigroup& s, std::int64_t m, std::int64_t n);
SolutionPair poly_zero_variant(const NumericalSemigroup& s, std::int64_t m, std::int64_t n);

SolutionPair matdot_classical(std::int64_t m);
SolutionPair matdot_trivial(const NumericalSemigroup& s, std::int64_t m);
SolutionPair matdot_optimal(const NumericalSemigroup& s, std::int64_t m);

// g(S) + mn when mn >= n(S); nullopt when the hypothesis fails.
std::optional<std::int64_t> poly_lower_bound(const NumericalSemigroup& s, std::int64_t m,
                                             std::int64_t n);

// Exhaustive minimum-threshold search over S cap [0, bound]; deterministic
// lexicographic tie-break on (deg_a, deg_b). n is ignored for Matdot.
SolutionPair brute_force_optimal(const NumericalSemigroup& s, ProblemKind kind, std::int64_t m,
                                 std::int64_t n, std::int64_t bound);
std::int64_t default_search_bound(const NumericalSemigroup& s, std::int64_t m, std::int64_t n);

// Dispatch by method name: poly classical|trivial|apery|recursive|zero,
// matdot classical|trivial|optimal. classical requires S to be the naturals.
SolutionPair build_by_method(const NumericalSemigroup& s, ProblemKind kind,
                             const std::string& method, std::int64_t m, std::int64_t n);

}  // namespace agdmm
