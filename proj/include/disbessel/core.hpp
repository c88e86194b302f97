#pragma once

#include "disbessel/circle_grid.hpp"
#include "disbessel/errors.hpp"
#include "disbessel/scalar.hpp"
#include "disbessel/summation.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <vector>

namespace disbessel {

/// Indicator pair (C_n, S_n): exactly one is set, C for even n and S for odd n.
struct ParityMask {
  int c;
  int s;
};

constexpr ParityMask parity_mask(std::int64_t n) {
  return (n % 2 == 0) ? ParityMask{1, 0} : ParityMask{0, 1};
}

/// ε_n: 1 for n = 0, 2 otherwise.
constexpr int neumann_factor(std::int64_t n) { return n == 0 ? 1 : 2; }

constexpr int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

/// Result of reducing (n, m) so that B_n(m) = sign * B_order(argument).
///
/// order lies in [0, 2j] and argument >= 0. sign is 0 when n is an odd
/// multiple of N: those orders vanish identically and have no representative.
struct CanonicalOrder {
  int order;
  std::int64_t argument;
  int sign;

  friend bool operator==(const CanonicalOrder&, const CanonicalOrder&) = default;
};

/// Uses B_{n+2N} = B_n, B_{N+t} = (-1)^{N+t} B_{N-t} and
/// B_n(m) = (-1)^n B_{-n}(m) = (-1)^n B_n(-m).
inline CanonicalOrder canonicalize_order(int j, std::int64_t n, std::int64_t m) {
  if (j < 0) throw UsageError("canonicalize_order: j must be >= 0");
  const std::int64_t size = 2 * static_cast<std::int64_t>(j) + 1;
  const std::int64_t period = 2 * size;
  std::int64_t r = n % period;
  if (r < 0) r += period;
  int sign = 1;
  if (r == size) {
    sign = 0;
    r = 0;
  } else if (r > size) {
    sign = parity_sign(r);
    r = period - r;
  }
  std::int64_t arg = m;
  if (m < 0) {
    arg = -m;
    sign *= parity_sign(r);
  }
  return {static_cast<int>(r), arg, sign};
}

/// All discrete Bessel values B_n(x) at one argument x, for any integer order.
///
/// Caches cos(x sin φ_k) and sin(x sin φ_k); each order then costs N products
/// and one pairwise sum. The grid must outlive this object.
template <typename Scalar>
class FixedArgument {
 public:
  FixedArgument(const CircleGrid<Scalar>& grid, const Scalar& x) : grid_(&grid), x_(x) {
    using std::cos;
    using std::sin;
    if (!is_finite(x)) throw DomainError("discrete Bessel: argument must be finite");
    const int j = grid.j();
    cos_.reserve(static_cast<std::size_t>(grid.size()));
    sin_.reserve(static_cast<std::size_t>(grid.size()));
    for (int k = -j; k <= j; ++k) {
      const Scalar phase = x * grid.sin_phi(k);
      cos_.push_back(cos(phase));
      sin_.push_back(sin(phase));
    }
  }

  const CircleGrid<Scalar>& grid() const { return *grid_; }
  const Scalar& argument() const { return x_; }

  /// B_n(x) via the real reduction of the complex quadrature sum:
  /// even n: (1/N) Σ cos(x sin φ_k) cos(nφ_k); odd n: (1/N) Σ sin(x sin φ_k) sin(nφ_k).
  Scalar operator()(std::int64_t n) const {
    const CircleGrid<Scalar>& g = *grid_;
    const int j = g.j();
    std::vector<Scalar> terms(static_cast<std::size_t>(g.size()));
    if (n % 2 == 0) {
      for (int k = -j; k <= j; ++k) {
        const auto i = static_cast<std::size_t>(k + j);
        terms[i] = cos_[i] * g.cos_of_multiple(n * k);
      }
    } else {
      for (int k = -j; k <= j; ++k) {
        const auto i = static_cast<std::size_t>(k + j);
        terms[i] = sin_[i] * g.sin_of_multiple(n * k);
      }
    }
    return pairwise_sum(std::span<const Scalar>(terms)) / Scalar(g.size());
  }

  /// Orders 0..2j.
  Vector<Scalar> row() const {
    Vector<Scalar> out(grid_->size());
    for (int n = 0; n < grid_->size(); ++n) out(n) = (*this)(n);
    return out;
  }

 private:
  const CircleGrid<Scalar>* grid_;
  Scalar x_;
  std::vector<Scalar> cos_;
  std::vector<Scalar> sin_;
};

template <typename Scalar>
Scalar eval_discrete_bessel(const CircleGrid<Scalar>& grid, std::int64_t n, const Scalar& x) {
  return FixedArgument<Scalar>(grid, x)(n);
}

/// B_0(x)..B_{2j}(x).
template <typename Scalar>
Vector<Scalar> discrete_bessel_row(const CircleGrid<Scalar>& grid, const Scalar& x) {
  return FixedArgument<Scalar>(grid, x).row();
}

/// Literal complex quadrature sum (1/N) Σ exp(i x sin φ_k)[C_n cos nφ_k - i S_n sin nφ_k].
///
/// Used as an oracle for the real reduction. Throws VerificationError when the
/// imaginary part exceeds 1e-12 (1 + |real part|), which would mean the grid
/// is not symmetric under k -> -k.
template <typename Scalar>
Scalar eval_discrete_bessel_complex_ref(const CircleGrid<Scalar>& grid, std::int64_t n,
                                        const Scalar& x) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (!is_finite(x)) throw DomainError("discrete Bessel: argument must be finite");
  const ParityMask mask = parity_mask(n);
  const int j = grid.j();
  std::vector<Scalar> re(static_cast<std::size_t>(grid.size()));
  std::vector<Scalar> im(re.size());
  for (int k = -j; k <= j; ++k) {
    const Scalar phase = x * grid.sin_phi(k);
    const Scalar a = cos(phase);
    const Scalar b = sin(phase);
    const Scalar c = Scalar(mask.c) * grid.cos_of_multiple(n * k);
    const Scalar d = -Scalar(mask.s) * grid.sin_of_multiple(n * k);
    const auto i = static_cast<std::size_t>(k + j);
    re[i] = a * c - b * d;
    im[i] = a * d + b * c;
  }
  const Scalar count(grid.size());
  const Scalar real_part = pairwise_sum(std::span<const Scalar>(re)) / count;
  const Scalar imag_part = pairwise_sum(std::span<const Scalar>(im)) / count;
  if (abs(imag_part) > Scalar(1e-12) * (Scalar(1) + abs(real_part))) {
    std::ostringstream msg;
    msg << "complex discrete Bessel sum has imaginary part " << to_double(imag_part)
        << " (j=" << j << ", n=" << n << ", x=" << to_double(x) << ")";
    throw VerificationError(msg.str());
  }
  return real_part;
}

}  // namespace disbessel
