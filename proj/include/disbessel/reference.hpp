#pragma once

#include "disbessel/circle_grid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace disbessel {

/// Bessel function of the first kind J_n(x) for integer n >= 0.
///
/// Absolute error <= 1e-13 for n <= 200, |x| <= 400. Small arguments use the
/// ascending series; the rest use Miller's downward recurrence normalized by
/// J_0 + 2 Σ J_2k = 1. Negative orders: J_{-n} = (-1)^n J_n.
double j_bessel(int n, double x);

namespace detail {

/// Regime predicate used by j_bessel.
bool j_bessel_uses_series(int n, double ax);

/// Both regimes, exposed so they can be compared on an overlap band.
double j_bessel_series(int n, double x);
double j_bessel_miller(int n, double x);

}  // namespace detail

struct OrderError {
  int n;
  double delta;
};

/// Mean quadratic discrete-vs-continuous error per order.
struct ErrorReport {
  int j;
  std::vector<OrderError> per_order;
  double max_abs_diff;
  std::string region;
};

/// Δ_n = (1/N) Σ_{m=0}^{N-1} (J_n(m) - B_n(m))^2, for 0 <= n <= 2j.
double error_delta(const CircleGrid<double>& grid, int n);

/// Δ_n for n = 0..max_order over the full range m = 0..N-1.
ErrorReport error_report(const CircleGrid<double>& grid, int max_order);

struct PointDiff {
  int n;
  int m;
  double diff;  // J_n(m) - B_n(m)
};

using RegionPredicate = std::function<bool(int n, int m)>;

/// J_n(m) - B_n(m) on every (n, m) in {0..2j} x {0..4j} accepted by `region`,
/// ordered by n then m.
std::vector<PointDiff> pointwise_diff_region(const CircleGrid<double>& grid,
                                             const RegionPredicate& region);

}  // namespace disbessel
