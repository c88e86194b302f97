#pragma once

#include "disbessel/errors.hpp"
#include "disbessel/scalar.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace disbessel {

/// Equidistant points φ_k = 2πk/(2j+1), k = -j..j, on the circle.
///
/// Besides the angles themselves the grid tabulates sin and cos of every
/// multiple 2πr/N for r = 0..N-1. Each entry is computed from its own exact
/// rational multiple of 2π (reduced to |r| <= j), never by accumulating
/// increments, so sin(nφ_k) can be read off at residue nk mod N without phase
/// drift, and the table is exactly odd/even under r -> -r.
template <typename Scalar>
class CircleGrid {
 public:
  int j() const { return j_; }
  int size() const { return 2 * j_ + 1; }

  /// Angles ordered k = -j..j; phi()[k + j] = φ_k.
  std::span<const Scalar> phi() const { return phi_; }
  const Scalar& angle(int k) const { return phi_[static_cast<std::size_t>(k + j_)]; }

  /// sin(2πr/N) and cos(2πr/N) for any integer r.
  const Scalar& sin_of_multiple(std::int64_t r) const { return sin_table_[residue(r)]; }
  const Scalar& cos_of_multiple(std::int64_t r) const { return cos_table_[residue(r)]; }

  const Scalar& sin_phi(int k) const { return sin_of_multiple(k); }
  const Scalar& cos_phi(int k) const { return cos_of_multiple(k); }

  std::size_t residue(std::int64_t r) const {
    const std::int64_t n = size();
    std::int64_t q = r % n;
    if (q < 0) q += n;
    return static_cast<std::size_t>(q);
  }

 private:
  template <typename S>
  friend CircleGrid<S> make_grid(int j);

  explicit CircleGrid(int j) : j_(j) {
    using std::cos;
    using std::sin;
    const int n = size();
    const Scalar two_pi = Scalar(2) * pi<Scalar>();
    phi_.reserve(static_cast<std::size_t>(n));
    for (int k = -j; k <= j; ++k) phi_.push_back(two_pi * Scalar(k) / Scalar(n));
    sin_table_.resize(static_cast<std::size_t>(n));
    cos_table_.resize(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      const int symmetric = r <= j ? r : r - n;
      const int t = symmetric < 0 ? -symmetric : symmetric;
      Scalar s(0);
      Scalar c(1);
      if (4 * t <= n) {
        const Scalar a = two_pi * Scalar(t) / Scalar(n);
        s = sin(a);
        c = cos(a);
      } else {
        // 2πt/N = π - π(N-2t)/N, with N-2t an exact integer.
        const Scalar b = pi<Scalar>() * Scalar(n - 2 * t) / Scalar(n);
        s = sin(b);
        c = -cos(b);
      }
      if (t == 0) {
        s = Scalar(0);
        c = Scalar(1);
      }
      sin_table_[static_cast<std::size_t>(r)] = symmetric < 0 ? Scalar(-s) : s;
      cos_table_[static_cast<std::size_t>(r)] = c;
    }
  }

  int j_;
  std::vector<Scalar> phi_;
  std::vector<Scalar> sin_table_;
  std::vector<Scalar> cos_table_;
};

/// Grid with N = 2j+1 points. j = 0 gives the single point φ_0 = 0.
template <typename Scalar = double>
CircleGrid<Scalar> make_grid(int j) {
  if (j < 0) throw UsageError("make_grid: half-size j must be >= 0, got " + std::to_string(j));
  return CircleGrid<Scalar>(j);
}

}  // namespace disbessel
