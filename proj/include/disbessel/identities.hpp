#pragma once

#include "disbessel/circle_grid.hpp"
#include "disbessel/core.hpp"
#include "disbessel/scalar.hpp"
#include "disbessel/summation.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace disbessel {

/// Outcome of one identity check. residual is a maximum absolute deviation
/// over the parameters listed in `params` (mean square only for the
/// approximation sweeps).
struct CheckResult {
  std::string name;
  int j = 0;
  std::vector<std::pair<std::string, std::int64_t>> params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline CheckResult make_check(std::string name, int j,
                              std::vector<std::pair<std::string, std::int64_t>> params,
                              double residual, double tolerance) {
  return {std::move(name), j, std::move(params), residual, tolerance, residual <= tolerance};
}

std::string format_check(const CheckResult& result);

/// Anything that hands out B_n(x) for a grid. `at(x)` returns a callable
/// mapping an integer order to B_n(x).
template <typename E>
concept BesselEvaluator = requires(const E& e, const typename E::scalar_type& x, std::int64_t n) {
  { e.grid() } -> std::same_as<const CircleGrid<typename E::scalar_type>&>;
  { e.at(x)(n) } -> std::convertible_to<typename E::scalar_type>;
};

/// The evaluator backed by core. The grid must outlive it.
template <typename Scalar>
class GridEvaluator {
 public:
  using scalar_type = Scalar;
  explicit GridEvaluator(const CircleGrid<Scalar>& grid) : grid_(&grid) {}
  const CircleGrid<Scalar>& grid() const { return *grid_; }
  FixedArgument<Scalar> at(const Scalar& x) const { return FixedArgument<Scalar>(*grid_, x); }

 private:
  const CircleGrid<Scalar>* grid_;
};

namespace detail {

template <typename Scalar>
Scalar sum_terms(const std::vector<Scalar>& terms) {
  return pairwise_sum(std::span<const Scalar>(terms));
}

template <BesselEvaluator E>
Vector<typename E::scalar_type> canonical_row(const E& eval, std::int64_t m) {
  using Scalar = typename E::scalar_type;
  const int size = eval.grid().size();
  const auto b = eval.at(Scalar(m));
  Vector<Scalar> row(size);
  for (int n = 0; n < size; ++n) row(n) = b(n);
  return row;
}

template <typename Scalar>
Scalar canonical_value(const Vector<Scalar>& row_at_abs_m, int j, std::int64_t n,
                       std::int64_t m) {
  const CanonicalOrder c = canonicalize_order(j, n, m);
  if (c.sign == 0) return Scalar(0);
  const Scalar& v = row_at_abs_m(c.order);
  return c.sign > 0 ? v : Scalar(-v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact identities

/// B_0(m) + 2 Σ_{n=1}^{j} B_2n(m) = 1.
template <BesselEvaluator E>
CheckResult check_even_order_sum(const E& eval, std::int64_t m) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const int j = eval.grid().j();
  const auto b = eval.at(Scalar(m));
  std::vector<Scalar> terms;
  for (int n = 0; n <= j; ++n) terms.push_back(Scalar(neumann_factor(n)) * b(2 * n));
  const Scalar residual = abs(detail::sum_terms(terms) - Scalar(1));
  const double n_points = eval.grid().size();
  return make_check("even_order_sum", j, {{"m", m}}, to_double(residual), 1e-13 * n_points);
}

/// Σ_{n=0}^{j} ε_n B_2n(m) cos(2nφ_k) = cos(m sin φ_k).
template <BesselEvaluator E>
CheckResult check_linear_cos(const E& eval, std::int64_t m, int k) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  using std::cos;
  const auto& grid = eval.grid();
  const int j = grid.j();
  if (k < -j || k > j) throw UsageError("check_linear_cos: k must lie in [-j, j]");
  const auto b = eval.at(Scalar(m));
  std::vector<Scalar> terms;
  for (int n = 0; n <= j; ++n)
    terms.push_back(Scalar(neumann_factor(n)) * b(2 * n) *
                    grid.cos_of_multiple(2 * static_cast<std::int64_t>(n) * k));
  const Scalar rhs = cos(Scalar(m) * grid.sin_phi(k));
  const Scalar residual = abs(detail::sum_terms(terms) - rhs);
  return make_check("linear_cos", j, {{"m", m}, {"k", k}}, to_double(residual),
                    1e-12 * grid.size());
}

/// Σ_{n=0}^{j} B_{2n+1}(m) sin((2n+1)φ_k) = ½ sin(m sin φ_k).
template <BesselEvaluator E>
CheckResult check_linear_sin(const E& eval, std::int64_t m, int k) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  using std::sin;
  const auto& grid = eval.grid();
  const int j = grid.j();
  if (k < -j || k > j) throw UsageError("check_linear_sin: k must lie in [-j, j]");
  const auto b = eval.at(Scalar(m));
  std::vector<Scalar> terms;
  for (int n = 0; n <= j; ++n) {
    const std::int64_t order = 2 * static_cast<std::int64_t>(n) + 1;
    terms.push_back(b(order) * grid.sin_of_multiple(order * k));
  }
  const Scalar rhs = sin(Scalar(m) * grid.sin_phi(k)) / Scalar(2);
  const Scalar residual = abs(detail::sum_terms(terms) - rhs);
  return make_check("linear_sin", j, {{"m", m}, {"k", k}}, to_double(residual),
                    1e-12 * grid.size());
}

/// Left side of the discrete addition theorem,
/// Σ_{n=-2j}^{2j} B_n(m) B_{n'-n}(m'), with every order outside [0, 2j]
/// reduced through canonicalize_order onto rows evaluated at |m| and |m'|.
template <BesselEvaluator E>
typename E::scalar_type graf_sum(const E& eval, std::int64_t n_prime, std::int64_t m,
                                 std::int64_t m_prime) {
  using Scalar = typename E::scalar_type;
  const int j = eval.grid().j();
  const auto row_m = detail::canonical_row(eval, m < 0 ? -m : m);
  const auto row_mp = detail::canonical_row(eval, m_prime < 0 ? -m_prime : m_prime);
  std::vector<Scalar> terms;
  terms.reserve(static_cast<std::size_t>(4 * j + 1));
  for (std::int64_t n = -2 * j; n <= 2 * j; ++n)
    terms.push_back(detail::canonical_value(row_m, j, n, m) *
                    detail::canonical_value(row_mp, j, n_prime - n, m_prime));
  return detail::sum_terms(terms);
}

/// Same sum with every factor evaluated directly at its own order and argument.
template <BesselEvaluator E>
typename E::scalar_type graf_sum_direct(const E& eval, std::int64_t n_prime, std::int64_t m,
                                        std::int64_t m_prime) {
  using Scalar = typename E::scalar_type;
  const int j = eval.grid().j();
  const auto b = eval.at(Scalar(m));
  const auto bp = eval.at(Scalar(m_prime));
  std::vector<Scalar> terms;
  for (std::int64_t n = -2 * j; n <= 2 * j; ++n) terms.push_back(b(n) * bp(n_prime - n));
  return detail::sum_terms(terms);
}

/// Σ_{n=-2j}^{2j} B_n(m) B_{n'-n}(m') = B_{n'}(m+m').
template <BesselEvaluator E>
CheckResult check_graf(const E& eval, std::int64_t n_prime, std::int64_t m,
                       std::int64_t m_prime) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const auto& grid = eval.grid();
  const Scalar lhs = graf_sum(eval, n_prime, m, m_prime);
  const Scalar rhs = eval.at(Scalar(m + m_prime))(n_prime);
  const double n_points = grid.size();
  return make_check("graf", grid.j(), {{"n'", n_prime}, {"m", m}, {"m'", m_prime}},
                    to_double(abs(lhs - rhs)), 1e-11 * n_points * n_points);
}

template <BesselEvaluator E>
typename E::scalar_type quadratic_norm(const E& eval, std::int64_t m) {
  using Scalar = typename E::scalar_type;
  const auto b = eval.at(Scalar(m));
  const Scalar b0 = b(0);
  std::vector<Scalar> squares;
  for (int n = 1; n < eval.grid().size(); ++n) {
    const Scalar v = b(n);
    squares.push_back(v * v);
  }
  return b0 * b0 + Scalar(2) * detail::sum_terms(squares);
}

/// [B_0(m)]^2 + 2 Σ_{n=1}^{2j} [B_n(m)]^2 = 1.
template <BesselEvaluator E>
CheckResult check_quadratic_norm(const E& eval, std::int64_t m) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const Scalar residual = abs(quadratic_norm(eval, m) - Scalar(1));
  return make_check("quadratic_norm", eval.grid().j(), {{"m", m}}, to_double(residual),
                    1e-13 * eval.grid().size());
}

// ---------------------------------------------------------------------------
// Symmetry checks

/// max |B_n(m) - (-1)^n B_{-n}(m)| over n, m in [-range, range].
template <BesselEvaluator E>
CheckResult check_order_symmetry(const E& eval, int range, double tolerance = 1e-14) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  double worst = 0.0;
  for (int m = -range; m <= range; ++m) {
    const auto b = eval.at(Scalar(m));
    for (int n = -range; n <= range; ++n) {
      const Scalar d = b(n) - Scalar(parity_sign(n)) * b(-n);
      worst = std::max(worst, to_double(abs(d)));
    }
  }
  return make_check("order_symmetry", eval.grid().j(), {{"range", range}}, worst, tolerance);
}

/// max |B_n(m) - (-1)^n B_n(-m)| over n, m in [-range, range].
template <BesselEvaluator E>
CheckResult check_argument_symmetry(const E& eval, int range, double tolerance = 1e-14) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  double worst = 0.0;
  for (int m = 0; m <= range; ++m) {
    const auto plus = eval.at(Scalar(m));
    const auto minus = eval.at(Scalar(-m));
    for (int n = -range; n <= range; ++n) {
      const Scalar d = plus(n) - Scalar(parity_sign(n)) * minus(n);
      worst = std::max(worst, to_double(abs(d)));
    }
  }
  return make_check("argument_symmetry", eval.grid().j(), {{"range", range}}, worst, tolerance);
}

/// max |B_n(0) - δ_{n,0}| over n in [-range, range].
template <BesselEvaluator E>
CheckResult check_origin_delta(const E& eval, int range, double tolerance = 1e-15) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const auto b = eval.at(Scalar(0));
  double worst = 0.0;
  for (int n = -range; n <= range; ++n)
    worst = std::max(worst, to_double(abs(b(n) - Scalar(n == 0 ? 1 : 0))));
  return make_check("origin_delta", eval.grid().j(), {{"range", range}}, worst, tolerance);
}

/// The addition theorem at n' = 0, m' = -m and the quadratic norm compute the
/// same number two ways; residual is the gap between them.
template <BesselEvaluator E>
CheckResult check_graf_quadratic_agreement(const E& eval, std::int64_t m) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const Scalar gap = graf_sum(eval, 0, m, -m) - quadratic_norm(eval, m);
  return make_check("graf_vs_quadratic", eval.grid().j(), {{"m", m}}, to_double(abs(gap)),
                    2.0 * to_double(epsilon<Scalar>()));
}

/// B_{n'}(m+m') is symmetric in m <-> m', so both orderings of the sum must agree.
template <BesselEvaluator E>
CheckResult check_graf_swap(const E& eval, std::int64_t n_prime, std::int64_t m,
                            std::int64_t m_prime) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const Scalar gap = graf_sum(eval, n_prime, m, m_prime) - graf_sum(eval, n_prime, m_prime, m);
  const double n_points = eval.grid().size();
  return make_check("graf_swap", eval.grid().j(), {{"n'", n_prime}, {"m", m}, {"m'", m_prime}},
                    to_double(abs(gap)), 1e-11 * n_points * n_points);
}

// ---------------------------------------------------------------------------
// Approximations (not identities)

/// 2 Σ_{n=0}^{j} (-1)^n B_{2n+1}(m) ≈ sin m.
template <BesselEvaluator E>
typename E::scalar_type approx_sin(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  const auto b = eval.at(m);
  std::vector<Scalar> terms;
  for (int n = 0; n <= eval.grid().j(); ++n)
    terms.push_back(Scalar(2 * parity_sign(n)) * b(2 * n + 1));
  return detail::sum_terms(terms);
}

/// Σ_{n=0}^{j} ε_n (-1)^n B_2n(m) ≈ cos m.
template <BesselEvaluator E>
typename E::scalar_type approx_cos(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  const auto b = eval.at(m);
  std::vector<Scalar> terms;
  for (int n = 0; n <= eval.grid().j(); ++n)
    terms.push_back(Scalar(neumann_factor(n) * parity_sign(n)) * b(2 * n));
  return detail::sum_terms(terms);
}

/// (π/N) Σ'_{k=0}^{j} B_0(m |cos φ_k|) |cos φ_k|, the k = 0 term halved.
///
/// Trapezoidal form of ∫_0^{π/2} J_0(m cos θ) cos θ dθ = sin(m)/m with the
/// grid's own angles; even in m.
template <BesselEvaluator E>
typename E::scalar_type approx_sinc(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const auto& grid = eval.grid();
  std::vector<Scalar> terms;
  for (int k = 0; k <= grid.j(); ++k) {
    const Scalar c = abs(grid.cos_phi(k));
    const Scalar weight = k == 0 ? Scalar(1) / Scalar(2) : Scalar(1);
    terms.push_back(weight * eval.at(m * c)(0) * c);
  }
  return pi<Scalar>() / Scalar(grid.size()) * detail::sum_terms(terms);
}

/// (π/N) Σ'_{k=0}^{j} B_1(m |cos φ_k|), the k = 0 term halved.
///
/// Trapezoidal form of ∫_0^{π/2} J_1(m cos θ) dθ = (1 - cos m)/m; odd in m.
template <BesselEvaluator E>
typename E::scalar_type approx_cosc(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  using std::abs;
  const auto& grid = eval.grid();
  std::vector<Scalar> terms;
  for (int k = 0; k <= grid.j(); ++k) {
    const Scalar c = abs(grid.cos_phi(k));
    const Scalar weight = k == 0 ? Scalar(1) / Scalar(2) : Scalar(1);
    terms.push_back(weight * eval.at(m * c)(1));
  }
  return pi<Scalar>() / Scalar(grid.size()) * detail::sum_terms(terms);
}

/// Unweighted Σ_{k=0}^{j} B_1(m cos φ_k) cos φ_k. Not a quadrature of any
/// sinc integral; reported next to approx_sinc for comparison only.
template <BesselEvaluator E>
typename E::scalar_type half_circle_sum_sinc(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  const auto& grid = eval.grid();
  std::vector<Scalar> terms;
  for (int k = 0; k <= grid.j(); ++k) {
    const Scalar& c = grid.cos_phi(k);
    terms.push_back(eval.at(m * c)(1) * c);
  }
  return detail::sum_terms(terms);
}

/// Unweighted Σ_{k=0}^{j} B_1(m cos φ_k); comparison only, like half_circle_sum_sinc.
template <BesselEvaluator E>
typename E::scalar_type half_circle_sum_cosc(const E& eval, const typename E::scalar_type& m) {
  using Scalar = typename E::scalar_type;
  const auto& grid = eval.grid();
  std::vector<Scalar> terms;
  for (int k = 0; k <= grid.j(); ++k) terms.push_back(eval.at(m * grid.cos_phi(k))(1));
  return detail::sum_terms(terms);
}

/// sin(x)/x with the removable singularity filled in.
template <typename Scalar>
Scalar sinc(const Scalar& x) {
  using std::sin;
  return x == Scalar(0) ? Scalar(1) : Scalar(sin(x) / x);
}

/// (1 - cos x)/x, 0 at the origin.
template <typename Scalar>
Scalar cosc(const Scalar& x) {
  using std::cos;
  return x == Scalar(0) ? Scalar(0) : Scalar((Scalar(1) - cos(x)) / x);
}

/// Mean of (approx(m) - target(m))^2 over the given integer arguments.
template <typename Scalar, typename Approx, typename Target>
double mean_square_error(const std::vector<std::int64_t>& arguments, Approx&& approx,
                         Target&& target) {
  Scalar sum(0);
  for (std::int64_t m : arguments) {
    const Scalar x(m);
    const Scalar d = approx(x) - target(x);
    sum += d * d;
  }
  return to_double(sum / Scalar(static_cast<double>(arguments.size())));
}

// Grid-taking overloads.

template <typename Scalar>
CheckResult check_even_order_sum(const CircleGrid<Scalar>& grid, std::int64_t m) {
  return check_even_order_sum(GridEvaluator<Scalar>(grid), m);
}
template <typename Scalar>
CheckResult check_linear_cos(const CircleGrid<Scalar>& grid, std::int64_t m, int k) {
  return check_linear_cos(GridEvaluator<Scalar>(grid), m, k);
}
template <typename Scalar>
CheckResult check_linear_sin(const CircleGrid<Scalar>& grid, std::int64_t m, int k) {
  return check_linear_sin(GridEvaluator<Scalar>(grid), m, k);
}
template <typename Scalar>
CheckResult check_graf(const CircleGrid<Scalar>& grid, std::int64_t n_prime, std::int64_t m,
                       std::int64_t m_prime) {
  return check_graf(GridEvaluator<Scalar>(grid), n_prime, m, m_prime);
}
template <typename Scalar>
CheckResult check_quadratic_norm(const CircleGrid<Scalar>& grid, std::int64_t m) {
  return check_quadratic_norm(GridEvaluator<Scalar>(grid), m);
}
template <typename Scalar>
Scalar approx_sin(const CircleGrid<Scalar>& grid, const Scalar& m) {
  return approx_sin(GridEvaluator<Scalar>(grid), m);
}
template <typename Scalar>
Scalar approx_cos(const CircleGrid<Scalar>& grid, const Scalar& m) {
  return approx_cos(GridEvaluator<Scalar>(grid), m);
}
template <typename Scalar>
Scalar approx_sinc(const CircleGrid<Scalar>& grid, const Scalar& m) {
  return approx_sinc(GridEvaluator<Scalar>(grid), m);
}
template <typename Scalar>
Scalar approx_cosc(const CircleGrid<Scalar>& grid, const Scalar& m) {
  return approx_cosc(GridEvaluator<Scalar>(grid), m);
}

}  // namespace disbessel
