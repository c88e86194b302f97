#pragma once

#include "disbessel/core.hpp"
#include "disbessel/errors.hpp"
#include "disbessel/scalar.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace disbessel {

enum class Pivoting { partial, full };

/// Triangular factors P B Q = L U, stored in Eigen's packed form.
template <typename Scalar>
struct LuFactors {
  Matrix<Scalar> packed;
  Eigen::PermutationMatrix<Eigen::Dynamic> row_permutation;
  Eigen::PermutationMatrix<Eigen::Dynamic> column_permutation;
  Pivoting pivoting = Pivoting::partial;

  Scalar min_abs_pivot() const {
    using std::abs;
    Scalar best = abs(packed(0, 0));
    for (Eigen::Index i = 1; i < packed.rows(); ++i) best = std::min<Scalar>(best, abs(packed(i, i)));
    return best;
  }
};

/// N x N table of B_n(m) for n, m in 0..2j (row = order, column = position).
template <typename Scalar>
struct BesselMatrix {
  int j = 0;
  Matrix<Scalar> entries;
  Precision precision = scalar_traits<Scalar>::precision;
  std::optional<LuFactors<Scalar>> factorization;

  Eigen::Index size() const { return entries.rows(); }
};

template <typename Scalar>
BesselMatrix<Scalar> build_matrix(int j) {
  const auto grid = make_grid<Scalar>(j);
  BesselMatrix<Scalar> out;
  out.j = j;
  out.entries.resize(grid.size(), grid.size());
  for (int m = 0; m < grid.size(); ++m) out.entries.col(m) = discrete_bessel_row(grid, Scalar(m));
  return out;
}

template <typename Scalar>
LuFactors<Scalar> lu_factors(const Matrix<Scalar>& a, Pivoting pivoting) {
  LuFactors<Scalar> f;
  f.pivoting = pivoting;
  if (pivoting == Pivoting::partial) {
    Eigen::PartialPivLU<Matrix<Scalar>> lu(a);
    f.packed = lu.matrixLU();
    f.row_permutation = lu.permutationP();
    f.column_permutation.setIdentity(a.cols());
  } else {
    Eigen::FullPivLU<Matrix<Scalar>> lu(a);
    f.packed = lu.matrixLU();
    f.row_permutation = lu.permutationP();
    f.column_permutation = lu.permutationQ();
  }
  return f;
}

template <typename Scalar>
void factorize(BesselMatrix<Scalar>& matrix, Pivoting pivoting = Pivoting::partial) {
  matrix.factorization = lu_factors(matrix.entries, pivoting);
}

struct LogDeterminant {
  int sign = 0;
  double log10_abs = -std::numeric_limits<double>::infinity();
  bool singular = true;
};

template <typename Scalar>
Scalar one_norm(const Matrix<Scalar>& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

/// sign(det) and log10|det| accumulated pivot by pivot from the LU diagonal.
/// An exact zero pivot gives sign 0, -inf and the singular flag.
template <typename Scalar>
LogDeterminant log_determinant(const LuFactors<Scalar>& f) {
  using std::abs;
  using std::log10;
  LogDeterminant out;
  int sign = f.row_permutation.determinant() * f.column_permutation.determinant();
  Scalar log_sum(0);
  for (Eigen::Index i = 0; i < f.packed.rows(); ++i) {
    const Scalar& u = f.packed(i, i);
    if (u == Scalar(0)) return out;
    if (u < Scalar(0)) sign = -sign;
    log_sum += log10(abs(u));
  }
  out.sign = sign;
  out.log10_abs = to_double(log_sum);
  out.singular = false;
  return out;
}

template <typename Scalar>
LogDeterminant log_determinant(const BesselMatrix<Scalar>& matrix) {
  if (matrix.factorization) return log_determinant(*matrix.factorization);
  return log_determinant(lu_factors(matrix.entries, Pivoting::partial));
}

/// log10 Π_{n=0}^{N-1} J_n(n), the near-diagonal estimate of det B.
double diag_product_estimate(int j);

struct ConditioningReport {
  int j = 0;
  double log10_abs_det = 0.0;
  int det_sign = 0;
  double diag_product_estimate = 0.0;  // log10
  double residual_cb = std::numeric_limits<double>::quiet_NaN();  // max |C B - I|
  Precision precision_used = Precision::working;
  double min_pivot = 0.0;
  double rcond = 0.0;
};

std::string format_report(const ConditioningReport& report);

/// The matrix cannot be inverted at the requested precision.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, ConditioningReport report)
      : std::runtime_error(what), report_(report) {}
  const ConditioningReport& report() const { return report_; }
  double min_pivot() const { return report_.min_pivot; }

 private:
  ConditioningReport report_;
};

template <typename Scalar>
struct Inversion {
  Matrix<Scalar> inverse;
  ConditioningReport report;
};

/// C = B^{-1} by pivoted LU, with residual max|C B - I| measured afterwards.
///
/// Throws SingularMatrixError when a pivot is exactly zero or the reciprocal
/// 1-norm condition number of B and the computed C falls below the scalar's epsilon. The report in the
/// exception carries the smallest pivot and, when a candidate inverse exists,
/// its residual.
template <typename Scalar>
Inversion<Scalar> invert(const BesselMatrix<Scalar>& matrix, Pivoting pivoting = Pivoting::partial) {
  using std::abs;
  const Matrix<Scalar>& b = matrix.entries;
  const Eigen::Index n = b.rows();
  ConditioningReport report;
  report.j = matrix.j;
  report.precision_used = matrix.precision;
  report.diag_product_estimate = diag_product_estimate(matrix.j);

  const LuFactors<Scalar> factors =
      matrix.factorization && matrix.factorization->pivoting == pivoting ? *matrix.factorization
                                                                         : lu_factors(b, pivoting);
  const LogDeterminant det = log_determinant(factors);
  report.log10_abs_det = det.log10_abs;
  report.det_sign = det.sign;
  report.min_pivot = to_double(factors.min_abs_pivot());
  if (det.singular) {
    throw SingularMatrixError("discrete Bessel matrix has an exact zero pivot", report);
  }

  // C is formed as a left inverse, (B^T)^{-1} transposed, since C B is what
  // the transform pair uses.
  const Matrix<Scalar> bt = b.transpose();
  Matrix<Scalar> c;
  if (pivoting == Pivoting::partial)
    c = Eigen::PartialPivLU<Matrix<Scalar>>(bt).inverse().transpose();
  else
    c = Eigen::FullPivLU<Matrix<Scalar>>(bt).inverse().transpose();
  // 1 / (||B||_1 ||C||_1) from the computed inverse.
  const Scalar rcond = Scalar(1) / (one_norm(b) * one_norm(c));
  report.rcond = to_double(rcond);
  const Matrix<Scalar> residual = c * b - Matrix<Scalar>::Identity(n, n);
  report.residual_cb = to_double(residual.cwiseAbs().maxCoeff());
  if (!(rcond >= epsilon<Scalar>())) {
    throw SingularMatrixError("discrete Bessel matrix is singular to " +
                                  std::string(to_string(matrix.precision)) + " precision (rcond " +
                                  std::to_string(report.rcond) + ")",
                              report);
  }
  return {std::move(c), report};
}

/// Position-space samples f_m, m = 0..N-1.
template <typename Scalar>
struct Signal {
  Vector<Scalar> values;
};

/// Mode-space coefficients f~_n, n = 0..N-1.
template <typename Scalar>
struct ModeVector {
  Vector<Scalar> values;
};

/// f~_n = Σ_m B_{n,m} f_m.
template <typename Scalar>
ModeVector<Scalar> forward(const BesselMatrix<Scalar>& matrix, const Signal<Scalar>& f) {
  if (f.values.size() != matrix.size())
    throw UsageError("forward: signal has " + std::to_string(f.values.size()) +
                     " samples, expected " + std::to_string(matrix.size()));
  return {matrix.entries * f.values};
}

/// f_m = Σ_n C_{m,n} f~_n.
template <typename Scalar>
Signal<Scalar> inverse(const Matrix<Scalar>& c, const ModeVector<Scalar>& modes) {
  if (modes.values.size() != c.cols())
    throw UsageError("inverse: mode vector has " + std::to_string(modes.values.size()) +
                     " entries, expected " + std::to_string(c.cols()));
  return {c * modes.values};
}

}  // namespace disbessel
