#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agdmm/error.hpp"

namespace agdmm {

struct SeriesPoint {
  std::int64_t workers;  // N_i
  std::int64_t conductor;  // c_i
};

// Threshold excess over the classical baseline, per supplied series point:
// c_i/N_i for poly schemes, 2c_i/N_i for matdot. epsilon = 1/(sqrt(q)-1) is
// the limiting excess of the optimal curve family over GF(q); the matdot
// limit is twice that.
struct AsymptoticReport {
  std::int64_t q = 0;
  std::string mode;  // "poly" | "matdot"
  double epsilon = 0.0;
  double matdot_limit = 0.0;
  std::vector<double> excess;
};

// Exact integer square root; NotSquare when q is not a perfect square >= 4.
std::int64_t exact_sqrt(std::int64_t q);

AsymptoticReport asymptotic_report(std::int64_t q, const std::string& mode,
                                   const std::vector<SeriesPoint>& series);

}  // namespace agdmm
