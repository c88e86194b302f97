#include "disbessel/transform.hpp"

#include "disbessel/reference.hpp"

#include <cmath>
#include <cstdio>

namespace disbessel {

double diag_product_estimate(int j) {
  if (j < 0) throw UsageError("diag_product_estimate: j must be >= 0");
  double sum = 0.0;
  for (int n = 0; n <= 2 * j; ++n) sum += std::log10(std::abs(j_bessel(n, n)));
  return sum;
}

std::string format_report(const ConditioningReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "N=%d log10|det|=%.6f sign=%d diag_product_log10=%.6f residual_CB=%.3e "
                "min_pivot=%.3e rcond=%.3e precision=%s",
                2 * r.j + 1, r.log10_abs_det, r.det_sign, r.diag_product_estimate, r.residual_cb,
                r.min_pivot, r.rcond, std::string(to_string(r.precision_used)).c_str());
  return buf;
}

}  // namespace disbessel
