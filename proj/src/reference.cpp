#include "disbessel/reference.hpp"

#include "disbessel/core.hpp"
#include "disbessel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace disbessel {

namespace detail {

bool j_bessel_uses_series(int n, double ax) {
  // Σ|terms| / |J_n| ~ I_n(x)/J_n(x) ~ exp(x^2 / (2(n+1))), kept below ~e^4.
  return ax <= 6.0 || ax * ax <= 8.0 * (n + 1);
}

double j_bessel_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  if (term == 0.0) return 0.0;
  const double q = -half * half;
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > half) break;
  }
  return sum;
}

double j_bessel_miller(int n, double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return n == 0 ? 1.0 : 0.0;
  // Start far enough beyond the turning point that J_start/Y_start is negligible.
  const double reach = std::max<double>(n, ax) + 30.0 + 10.0 * std::cbrt(ax);
  int start = static_cast<int>(std::ceil(reach));
  if (start % 2 != 0) ++start;

  constexpr double big = 1e250;
  constexpr double rescale = 1e-250;
  double above = 0.0;   // f_{k+1}
  double current = 1e-30;  // f_k
  double target = 0.0;
  double norm = 0.0;
  const double two_over_x = 2.0 / ax;
  for (int k = start; k > 0; --k) {
    const double below = k * two_over_x * current - above;  // f_{k-1}
    above = current;
    current = below;
    const int order = k - 1;
    if (order == n) target = current;
    if (order > 0 && order % 2 == 0) norm += 2.0 * current;
    if (std::abs(current) > big) {
      current *= rescale;
      above *= rescale;
      target *= rescale;
      norm *= rescale;
    }
  }
  norm += current;  // f_0
  double value = target / norm;
  if (x < 0.0 && n % 2 != 0) value = -value;
  return value;
}

}  // namespace detail

double j_bessel(int n, double x) {
  if (n < 0) throw UsageError("j_bessel: order must be >= 0 (use J_{-n} = (-1)^n J_n)");
  if (!std::isfinite(x)) throw DomainError("j_bessel: argument must be finite");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double ax = std::abs(x);
  double value = detail::j_bessel_uses_series(n, ax) ? detail::j_bessel_series(n, ax)
                                                     : detail::j_bessel_miller(n, ax);
  if (x < 0.0 && n % 2 != 0) value = -value;
  return value;
}

double error_delta(const CircleGrid<double>& grid, int n) {
  if (n < 0 || n > 2 * grid.j())
    throw UsageError("error_delta: order must lie in [0, 2j], got " + std::to_string(n));
  const int size = grid.size();
  double sum = 0.0;
  for (int m = 0; m < size; ++m) {
    const double d = j_bessel(n, m) - eval_discrete_bessel(grid, n, static_cast<double>(m));
    sum += d * d;
  }
  return sum / size;
}

ErrorReport error_report(const CircleGrid<double>& grid, int max_order) {
  if (max_order < 0 || max_order > 2 * grid.j())
    throw UsageError("error_report: max_order must lie in [0, 2j]");
  const int size = grid.size();
  ErrorReport report{grid.j(), {}, 0.0,
                     "n in [0," + std::to_string(max_order) + "], m in [0," +
                         std::to_string(size - 1) + "]"};
  std::vector<double> sums(static_cast<std::size_t>(max_order + 1), 0.0);
  for (int m = 0; m < size; ++m) {
    const FixedArgument<double> b(grid, m);
    for (int n = 0; n <= max_order; ++n) {
      const double d = j_bessel(n, m) - b(n);
      sums[static_cast<std::size_t>(n)] += d * d;
      report.max_abs_diff = std::max(report.max_abs_diff, std::abs(d));
    }
  }
  for (int n = 0; n <= max_order; ++n)
    report.per_order.push_back({n, sums[static_cast<std::size_t>(n)] / size});
  return report;
}

std::vector<PointDiff> pointwise_diff_region(const CircleGrid<double>& grid,
                                             const RegionPredicate& region) {
  const int j = grid.j();
  std::vector<PointDiff> out;
  for (int m = 0; m <= 4 * j; ++m) {
    bool any = false;
    for (int n = 0; n <= 2 * j && !any; ++n) any = region(n, m);
    if (!any) continue;
    const FixedArgument<double> b(grid, m);
    for (int n = 0; n <= 2 * j; ++n)
      if (region(n, m)) out.push_back({n, m, j_bessel(n, m) - b(n)});
  }
  std::sort(out.begin(), out.end(),
            [](const PointDiff& a, const PointDiff& b) { return a.n != b.n ? a.n < b.n : a.m < b.m; });
  return out;
}

}  // namespace disbessel
