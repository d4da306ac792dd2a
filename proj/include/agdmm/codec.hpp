#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agdmm/constructions.hpp"
#include "agdmm/funcfield.hpp"
#include "agdmm/matrix.hpp"

namespace agdmm {

// Executable scheme: degree sets + tweaked frozen basis + chosen places,
// with every basis function pre-evaluated at every place.
struct CodeScheme {
  ProblemKind kind;
  Curve curve;
  SolutionPair solution;
  BasisRegistry registry;
  std::vector<Place> places;                // N workers, worker i holds places[i]
  std::int64_t degree_bound = 0;            // k = max(deg_a) + max(deg_b)
  std::vector<std::int64_t> basis_orders;   // [0, k] cap S, ascending
  std::vector<std::vector<Gf>> basis_eval;  // [order index][place index]

  std::int64_t threshold() const { return solution.threshold; }
  std::int64_t workers() const { return static_cast<std::int64_t>(places.size()); }
};

struct EncodedShare {
  std::int32_t place_index = 0;
  Matrix a_part;
  Matrix b_part;
};

struct WorkerResult {
  std::int32_t place_index = 0;
  Matrix product;
  std::uint64_t mults = 0;
};

struct DecodeReport {
  std::int64_t threshold = 0;
  std::vector<std::int32_t> responders_used;
  std::uint64_t worker_mults = 0;  // per-worker product cost
  std::uint64_t decode_mults = 0;
  bool ok = true;
};

struct DecodeOutcome {
  Matrix product;
  DecodeReport report;
};

CodeScheme scheme_build(ProblemKind kind, const Curve& curve, const NumericalSemigroup& s,
                        const std::string& method, std::int64_t m, std::optional<std::int64_t> n,
                        std::int64_t workers);

std::vector<EncodedShare> encode(const CodeScheme& scheme, const Matrix& a, const Matrix& b);
WorkerResult worker_multiply(const CodeScheme& scheme, const EncodedShare& share);

// G[l][i] = f_{s_l}(P_{responders[i]}), rows over basis orders <= k.
Matrix build_interpolation_matrix(const CodeScheme& scheme,
                                  const std::vector<std::int32_t>& responders);
// R with G * R = identity; Gaussian elimination with an augmented transform.
Matrix right_inverse(const Field& gf, const Matrix& g, std::uint64_t* mults = nullptr);

// Uses the first `threshold` results in arrival order.
DecodeOutcome decode(const CodeScheme& scheme, const std::vector<WorkerResult>& results);

}  // namespace agdmm
