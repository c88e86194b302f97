#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <limits>
#include <string_view>

namespace disbessel {

/// Software float with 50 significant decimal digits. Expression templates are
/// off so that `auto` and Eigen expressions behave like they do for double.
using Extended = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

enum class Precision { working, extended };

constexpr std::string_view to_string(Precision p) {
  return p == Precision::working ? "working" : "extended";
}

template <typename Scalar>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr Precision precision = Precision::working;
};

template <>
struct scalar_traits<Extended> {
  static constexpr Precision precision = Precision::extended;
};

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
inline Scalar pi() {
  return boost::math::constants::pi<Scalar>();
}

template <typename Scalar>
inline Scalar epsilon() {
  return std::numeric_limits<Scalar>::epsilon();
}

template <typename Scalar>
inline bool is_finite(const Scalar& x) {
  return (boost::math::isfinite)(x);
}

template <typename Scalar>
inline double to_double(const Scalar& x) {
  return static_cast<double>(x);
}

}  // namespace disbessel
