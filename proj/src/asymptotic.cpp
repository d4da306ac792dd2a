#include "agdmm/asymptotic.hpp"

#include <cmath>

namespace agdmm {

std::int64_t exact_sqrt(std::int64_t q) {
  require(q >= 4, Errc::NotSquare, "q must be a perfect square of a prime power, q >= 4");
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  require(root * root == q, Errc::NotSquare, std::to_string(q) + " is not a perfect square");
  return root;
}

AsymptoticReport asymptotic_report(std::int64_t q, const std::string& mode,
                                   const std::vector<SeriesPoint>& series) {
  require(mode == "poly" || mode == "matdot", Errc::BadInput, "mode must be poly or matdot");
  const std::int64_t root = exact_sqrt(q);

  AsymptoticReport out;
  out.q = q;
  out.mode = mode;
  out.epsilon = 1.0 / static_cast<double>(root - 1);
  out.matdot_limit = 2.0 * out.epsilon;
  for (const auto& pt : series) {
    require(pt.workers > 0, Errc::BadInput, "series N must be positive");
    require(pt.conductor >= 0, Errc::BadInput, "series c must be nonnegative");
    const double ratio = static_cast<double>(pt.conductor) / static_cast<double>(pt.workers);
    out.excess.push_back(mode == "poly" ? ratio : 2.0 * ratio);
  }
  return out;
}

}  // namespace agdmm
