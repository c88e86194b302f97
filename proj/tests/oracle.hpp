#pragma once

// Independent 50-digit oracles for the tests. Nothing here goes through the
// library's grid tables, summation or Bessel code.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>

namespace oracle {

using Big = boost::multiprecision::cpp_dec_float_50;

/// (1/N) Σ_k exp(i x sin φ_k) [C_n cos nφ_k - i S_n sin nφ_k], straight from
/// the definition, returned as (real, imag).
struct Complex {
  Big re;
  Big im;
};

inline Complex discrete_bessel_complex(int j, std::int64_t n, const Big& x) {
  const int size = 2 * j + 1;
  const Big two_pi = 2 * boost::math::constants::pi<Big>();
  const bool even = n % 2 == 0;
  Big re = 0;
  Big im = 0;
  for (int k = -j; k <= j; ++k) {
    const Big phi = two_pi * k / size;
    const Big a = cos(x * sin(phi));
    const Big b = sin(x * sin(phi));
    const Big c = even ? Big(cos(Big(n) * phi)) : Big(0);
    const Big d = even ? Big(0) : Big(-sin(Big(n) * phi));
    re += a * c - b * d;
    im += a * d + b * c;
  }
  return {re / size, im / size};
}

inline Big discrete_bessel(int j, std::int64_t n, const Big& x) {
  return discrete_bessel_complex(j, n, x).re;
}

/// Σ_{n=-2j}^{2j} B_n(m) B_{n'-n}(m'), every term from the definition.
inline Big graf_sum(int j, std::int64_t n_prime, std::int64_t m, std::int64_t m_prime) {
  Big sum = 0;
  for (std::int64_t n = -2 * j; n <= 2 * j; ++n)
    sum += discrete_bessel(j, n, Big(m)) * discrete_bessel(j, n_prime - n, Big(m_prime));
  return sum;
}

/// J_n(x) from Boost.Math at 50 digits.
inline Big bessel_j(int n, const Big& x) { return boost::math::cyl_bessel_j(Big(n), x); }

/// Σ_k (-1)^k (x/2)^{2k+n} / (k! (n+k)!) until terms drop below 1e-60.
inline Big bessel_j_series(int n, const Big& x) {
  const Big half = x / 2;
  Big term = 1;
  for (int i = 1; i <= n; ++i) term *= half / i;
  Big sum = term;
  const Big tiny("1e-60");
  for (int k = 1; k < 10000; ++k) {
    term *= -half * half / (Big(k) * Big(n + k));
    sum += term;
    if (abs(term) < tiny) break;
  }
  return sum;
}

}  // namespace oracle
