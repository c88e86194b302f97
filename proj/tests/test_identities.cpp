#include "disbessel/identities.hpp"
#include "disbessel/suite.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace disbessel;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi, bool skip_zero = false) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = lo; m <= hi; ++m)
    if (!(skip_zero && m == 0)) out.push_back(m);
  return out;
}

template <typename Scalar>
struct Mse {
  double sin, cos, sinc, cosc;
};

template <typename Scalar>
Mse<Scalar> approximation_mse(int j) {
  const auto g = make_grid<Scalar>(j);
  const GridEvaluator<Scalar> e(g);
  using std::cos;
  using std::sin;
  Mse<Scalar> out{};
  out.sin = mean_square_error<Scalar>(
      range(0, 2 * j), [&](const Scalar& x) { return approx_sin(e, x); },
      [](const Scalar& x) { return Scalar(sin(x)); });
  out.cos = mean_square_error<Scalar>(
      range(0, 2 * j), [&](const Scalar& x) { return approx_cos(e, x); },
      [](const Scalar& x) { return Scalar(cos(x)); });
  out.sinc = mean_square_error<Scalar>(
      range(-j, j, true), [&](const Scalar& x) { return approx_sinc(e, x); },
      [](const Scalar& x) { return sinc(x); });
  out.cosc = mean_square_error<Scalar>(
      range(-j, j, true), [&](const Scalar& x) { return approx_cosc(e, x); },
      [](const Scalar& x) { return cosc(x); });
  return out;
}

}  // namespace

TEST(EvenOrderSum, Examples) {
  const auto c0 = check_even_order_sum(make_grid(5), 0);
  EXPECT_LE(c0.residual, 1e-15);
  EXPECT_TRUE(check_even_order_sum(make_grid(10), 3).passed);
  const auto c = check_even_order_sum(make_grid(50), 77);
  EXPECT_TRUE(c.passed);
  EXPECT_DOUBLE_EQ(c.tolerance, 1e-13 * 101);
}

TEST(LinearCos, Examples) {
  for (int j : {3, 8})
    for (int m : {0, 4, -9})
      EXPECT_NEAR(check_linear_cos(make_grid(j), m, 0).residual,
                  check_even_order_sum(make_grid(j), m).residual, 1e-15);
  EXPECT_LE(check_linear_cos(make_grid(5), 0, 2).residual, 1e-15);
  const auto c = check_linear_cos(make_grid(30), 11, -7);
  EXPECT_TRUE(c.passed);
  EXPECT_DOUBLE_EQ(c.tolerance, 1e-12 * 61);
}

TEST(LinearSin, Examples) {
  for (int k = -5; k <= 5; ++k) EXPECT_EQ(check_linear_sin(make_grid(5), 0, k).residual, 0.0);
  for (int m = -10; m <= 10; ++m) EXPECT_LE(check_linear_sin(make_grid(5), m, 0).residual, 1e-15);
  EXPECT_TRUE(check_linear_sin(make_grid(30), 9, 4).passed);
}

TEST(LinearIdentities, RejectOutOfRangeK) {
  const auto g = make_grid(4);
  EXPECT_THROW(check_linear_cos(g, 1, 5), UsageError);
  EXPECT_THROW(check_linear_sin(g, 1, -5), UsageError);
}

TEST(Graf, OriginArguments) {
  for (int j : {2, 6})
    for (int np = -3 * j; np <= 3 * j; ++np)
      EXPECT_LE(check_graf(make_grid(j), np, 0, 0).residual, 1e-15);
}

TEST(Graf, ReducesToQuadraticNorm) {
  const auto g = make_grid(9);
  const GridEvaluator<double> e(g);
  for (int m = -30; m <= 30; m += 7) {
    EXPECT_NEAR(graf_sum(e, 0, m, -m), 1.0, 1e-13 * 19);
    EXPECT_TRUE(check_graf_quadratic_agreement(e, m).passed);
  }
}

TEST(Graf, FiftyDigitOracle) {
  const auto g = make_grid(5);
  const auto c = check_graf(g, 3, 2, 4);
  EXPECT_TRUE(c.passed);
  EXPECT_DOUBLE_EQ(c.tolerance, 1e-11 * 121);
  const oracle::Big lhs = oracle::graf_sum(5, 3, 2, 4);
  const oracle::Big rhs = oracle::discrete_bessel(5, 3, oracle::Big(6));
  EXPECT_LT(abs(lhs - rhs), oracle::Big("1e-40"));
  EXPECT_NEAR(graf_sum(GridEvaluator<double>(g), 3, 2, 4), static_cast<double>(lhs), 1e-15);
}

TEST(Graf, CanonicalAndDirectPathsAgree) {
  for (int j : {1, 4, 11}) {
    const auto g = make_grid(j);
    const GridEvaluator<double> e(g);
    for (const IdentityTuple& t : sample_identity_tuples(j, 7, 40))
      EXPECT_NEAR(graf_sum(e, t.n_prime, t.m, t.m_prime), graf_sum_direct(e, t.n_prime, t.m, t.m_prime),
                  1e-14);
  }
}

TEST(Graf, SwapSymmetry) {
  for (int j : {3, 20})
    for (const IdentityTuple& t : sample_identity_tuples(j, 3, 30))
      EXPECT_TRUE(check_graf_swap(GridEvaluator<double>(make_grid(j)), t.n_prime, t.m, t.m_prime).passed);
}

TEST(QuadraticNorm, Examples) {
  for (int j : {0, 4, 25}) EXPECT_LE(check_quadratic_norm(make_grid(j), 0).residual, 1e-15);
  EXPECT_TRUE(check_quadratic_norm(make_grid(10), 5).passed);
  const auto c = check_quadratic_norm(make_grid(50), -33);
  EXPECT_TRUE(c.passed);
  EXPECT_NEAR(graf_sum(GridEvaluator<double>(make_grid(50)), 0, -33, 33), 1.0, 1e-13 * 101);
}

TEST(CheckResult, PassedIffWithinTolerance) {
  for (int j : {2, 7})
    for (const CheckResult& r : run_identity_suite(GridEvaluator<double>(make_grid(j)), 11, 20)) {
      EXPECT_EQ(r.passed, r.residual <= r.tolerance);
      EXPECT_GE(r.residual, 0.0);
      EXPECT_EQ(r.j, j);
    }
  EXPECT_FALSE(make_check("x", 1, {}, 2.0, 1.0).passed);
  EXPECT_TRUE(make_check("x", 1, {}, 1.0, 1.0).passed);
}

TEST(CheckResult, Format) {
  const auto line = format_check(make_check("graf", 5, {{"n'", 3}, {"m", 2}}, 1.5e-16, 1.21e-9));
  EXPECT_EQ(line.rfind("PASS graf j=5 n'=3 m=2", 0), 0u) << line;
  EXPECT_EQ(format_check(make_check("graf", 5, {}, 1.0, 0.5)).rfind("FAIL", 0), 0u);
}

TEST(Suite, DeterministicSample) {
  const auto a = sample_identity_tuples(10, 42, 100);
  const auto b = sample_identity_tuples(10, 42, 100);
  const auto c = sample_identity_tuples(10, 43, 100);
  ASSERT_EQ(a.size(), 100u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].m, b[i].m);
    EXPECT_EQ(a[i].n_prime, b[i].n_prime);
    EXPECT_GE(a[i].k, -10);
    EXPECT_LE(a[i].k, 10);
    differs |= a[i].m != c[i].m;
  }
  EXPECT_TRUE(differs);
}

TEST(Suite, AllPassAcrossGrids) {
  for (int j : {0, 1, 5, 10, 30})
    for (const CheckResult& r : run_identity_suite(GridEvaluator<double>(make_grid(j)), 1, 100))
      EXPECT_TRUE(r.passed) << format_check(r);
}

TEST(Identities, ExtendedPrecisionShrinksResiduals) {
  const int j = 10;
  const auto gd = make_grid<double>(j);
  const auto ge = make_grid<Extended>(j);
  const auto rd = run_identity_suite(GridEvaluator<double>(gd), 5, 20);
  const auto re = run_identity_suite(GridEvaluator<Extended>(ge), 5, 20);
  ASSERT_EQ(rd.size(), re.size());
  double worst_d = 0.0;
  double worst_e = 0.0;
  for (std::size_t i = 0; i < rd.size(); ++i) {
    worst_d = std::max(worst_d, rd[i].residual);
    worst_e = std::max(worst_e, re[i].residual);
  }
  EXPECT_GT(worst_d, 0.0);
  EXPECT_LE(worst_e * 1e4, worst_d);
}

TEST(Approximations, AtOrigin) {
  for (int j : {0, 3, 20}) {
    const auto g = make_grid(j);
    EXPECT_NEAR(approx_sin(g, 0.0), 0.0, 1e-13);
    EXPECT_NEAR(approx_cos(g, 0.0), 1.0, 1e-13);
  }
  EXPECT_EQ(sinc(0.0), 1.0);
  EXPECT_EQ(cosc(0.0), 0.0);
}

TEST(Approximations, SinCosAgainstFiftyDigitSums) {
  const int j = 10;
  const auto g = make_grid(j);
  oracle::Big s = 0;
  oracle::Big c = 0;
  for (int n = 0; n <= j; ++n) {
    const int sign = n % 2 ? -1 : 1;
    s += 2 * sign * oracle::discrete_bessel(j, 2 * n + 1, oracle::Big(3));
    c += (n == 0 ? 1 : 2) * sign * oracle::discrete_bessel(j, 2 * n, oracle::Big(3));
  }
  EXPECT_NEAR(approx_sin(g, 3.0), static_cast<double>(s), 4e-16);
  EXPECT_NEAR(approx_cos(g, 3.0), static_cast<double>(c), 4e-16);
}

TEST(Approximations, SincCoscAgainstFiftyDigitSums) {
  for (int j : {5, 12}) {
    const auto g = make_grid(j);
    const oracle::Big two_pi = 2 * boost::math::constants::pi<oracle::Big>();
    oracle::Big sc = 0;
    oracle::Big cc = 0;
    for (int k = 0; k <= j; ++k) {
      const oracle::Big c = abs(cos(two_pi * k / (2 * j + 1)));
      const oracle::Big w = k == 0 ? oracle::Big("0.5") : oracle::Big(1);
      sc += w * oracle::discrete_bessel(j, 0, c) * c;
      cc += w * oracle::discrete_bessel(j, 1, c);
    }
    const oracle::Big scale = boost::math::constants::pi<oracle::Big>() / (2 * j + 1);
    const double want_s = static_cast<double>(scale * sc);
    const double want_c = static_cast<double>(scale * cc);
    EXPECT_TRUE(std::isfinite(approx_sinc(g, 1.0)));
    EXPECT_NEAR(approx_sinc(g, 1.0), want_s, 1e-15);
    EXPECT_NEAR(approx_cosc(g, 1.0), want_c, 1e-15);
  }
}

TEST(Approximations, SincEvenCoscOdd) {
  const auto g = make_grid(5);
  for (int m = 1; m <= 5; ++m) {
    EXPECT_NEAR(approx_sinc(g, double(m)), approx_sinc(g, double(-m)), 1e-15);
    EXPECT_NEAR(approx_cosc(g, double(m)), -approx_cosc(g, double(-m)), 1e-15);
  }
}

TEST(Approximations, SincCoscBelowOneInAMillionAtJ50) {
  const auto mse = approximation_mse<double>(50);
  EXPECT_LT(mse.sinc, 1e-6);
  EXPECT_LT(mse.cosc, 1e-6);
}

TEST(Approximations, HalfCircleSumsAreFarOff) {
  const auto g = make_grid(50);
  const GridEvaluator<double> e(g);
  const double literal = mean_square_error<double>(
      range(-50, 50, true), [&](double x) { return half_circle_sum_sinc(e, x); },
      [](double x) { return sinc(x); });
  EXPECT_GT(literal, 1.0);
}

TEST(Approximations, ErrorShrinksWithGridSize) {
  const auto a = approximation_mse<double>(10);
  const auto b = approximation_mse<double>(30);
  const auto c = approximation_mse<double>(50);
  EXPECT_GT(a.sin, b.sin);
  EXPECT_GT(b.sin, c.sin);
  EXPECT_GT(a.cos, b.cos);
  EXPECT_GT(b.cos, c.cos);
  EXPECT_GT(a.sinc, b.sinc);
  EXPECT_GT(b.sinc, c.sinc);
  EXPECT_GT(a.cosc, b.cosc);
  EXPECT_GT(b.cosc, c.cosc);
}

TEST(Approximations, MethodErrorDoesNotShrinkWithPrecision) {
  const auto d = approximation_mse<double>(20);
  const auto e = approximation_mse<Extended>(20);
  EXPECT_NEAR(e.sin / d.sin, 1.0, 1e-2);
  EXPECT_NEAR(e.cos / d.cos, 1.0, 1e-2);
  EXPECT_NEAR(e.sinc / d.sinc, 1.0, 1e-2);
  EXPECT_NEAR(e.cosc / d.cosc, 1.0, 1e-2);
}
