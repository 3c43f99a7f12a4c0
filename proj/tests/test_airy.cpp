#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "airyconv/airy.hpp"
#include "airyconv/errors.hpp"
#include "oracles.hpp"

using namespace airyconv;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// RK4 for y'' = x y, seeded by the series oracle; reaches arguments the
// ascending series cannot (cancellation), independent of the library.
void airy_ode_march(double from, double to, double h, double* y_out, double* yp_out) {
  long double y = oracles::airy_series(from);
  long double yp = oracles::airy_series_deriv(from);
  const int n = static_cast<int>(std::ceil(std::fabs(to - from) / h));
  const long double hs = static_cast<long double>(to - from) / n;
  double x = from;
  for (int i = 0; i < n; ++i) {
    const long double f1 = yp, g1 = (long double)x * y;
    const long double f2 = yp + 0.5L * hs * g1,
                      g2 = (x + 0.5L * (double)hs) * (y + 0.5L * hs * f1);
    const long double f3 = yp + 0.5L * hs * g2,
                      g3 = (x + 0.5L * (double)hs) * (y + 0.5L * hs * f2);
    const long double f4 = yp + hs * g3, g4 = (x + (double)hs) * (y + hs * f3);
    y += hs / 6.0L * (f1 + 2.0L * f2 + 2.0L * f3 + f4);
    yp += hs / 6.0L * (g1 + 2.0L * g2 + 2.0L * g3 + g4);
    x = from + static_cast<double>((i + 1) * hs);
  }
  *y_out = static_cast<double>(y);
  *yp_out = static_cast<double>(yp);
}

// n-th coefficient of the large-|x| expansions, Gamma(3n+1/2)/(9^n (2n)!),
// built from tgamma so the test does not share the library's recurrence.
double series_coeff(int n) {
  double fact2n = 1.0;
  for (int k = 2; k <= 2 * n; ++k) fact2n *= k;
  return std::tgamma(3.0 * n + 0.5) / (std::pow(9.0, n) * fact2n);
}

}  // namespace

TEST_CASE("closed-form anchors at zero") {
  const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  const double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  CHECK(std::fabs(ai(0.0) - ai0) <= 1e-12);
  CHECK(std::fabs(ai_deriv(0.0, 1) - aip0) <= 1e-12);
  CHECK(ai(0.0) == doctest::Approx(0.35502805388781724).epsilon(1e-14));
}

TEST_CASE("values against the series oracle") {
  // frozen oracle outputs
  CHECK((double)oracles::airy_series(1.0L) == doctest::Approx(0.13529241631288141).epsilon(1e-14));
  CHECK((double)oracles::airy_series(2.0L) == doctest::Approx(0.034924130423274378).epsilon(1e-13));
  CHECK(std::fabs(ai(1.0) - 0.13529241631288141) <= 1e-12);

  double worst = 0.0;
  for (int i = 0; i <= 300; ++i) {
    const double x = -10.0 + 15.0 * i / 300.0;
    worst = std::max(worst, std::fabs(ai(x) - (double)oracles::airy_series((long double)x)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("first negative zero") {
  const double z = oracles::bisect(
      [](double x) { return (double)oracles::airy_series((long double)x); }, -2.4, -2.3);
  CHECK(z == doctest::Approx(-2.3381074104597674).epsilon(1e-13));
  CHECK(std::fabs(ai(z)) <= 1e-13);
}

TEST_CASE("deep oscillatory values against the ODE oracle") {
  double y, yp;
  airy_ode_march(-11.0, -20.0, 1e-4, &y, &yp);
  CHECK(std::fabs(ai(-20.0) - y) <= 1e-9);
  airy_ode_march(-11.0, -15.0, 1e-4, &y, &yp);
  CHECK(std::fabs(ai(-15.0) - y) <= 1e-9);
}

TEST_CASE("pathway agreement around the switch radius") {
  AiryEvalConfig cfg;
  AiryEvalConfig force_series = cfg;
  force_series.series_switch_radius = 1e6;
  AiryEvalConfig force_asymp = cfg;
  force_asymp.series_switch_radius = 0.5;
  const double r = cfg.series_switch_radius;
  double worst = 0.0;
  for (double x = r - 1.0; x <= r + 1.0; x += 0.05) {
    worst = std::max(worst, std::fabs(ai(x, force_series) - ai(x, force_asymp)));
    worst = std::max(worst, std::fabs(ai(-x, force_series) - ai(-x, force_asymp)));
  }
  CHECK(worst <= 10.0 * cfg.abs_tol);
}

TEST_CASE("derivatives: recurrence and ODE residual") {
  // Ai'' = x Ai on a grid
  for (double x = -10.0; x <= 5.0; x += 0.5)
    CHECK(std::fabs(ai_deriv(x, 2) - x * ai(x)) <= 1e-9);
  // recurrence identities at fixed points
  CHECK(ai_deriv(2.0, 3) == doctest::Approx(2.0 * ai_deriv(2.0, 1) + ai(2.0)).epsilon(1e-14));
  CHECK(std::fabs(ai_deriv(1.0, 1) - (double)oracles::airy_series_deriv(1.0L)) <= 1e-12);
  CHECK(ai_deriv(-3.0, 0) == ai(-3.0));
  // error paths
  CHECK_THROWS_AS((void)ai_deriv(1.0, 13), UnsupportedError);
  CHECK_THROWS_AS((void)ai(std::nan("")), DomainError);
  AiryEvalConfig bad;
  bad.abs_tol = -1.0;
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS((void)ai(1.0, bad), DomainError);
}

TEST_CASE("asymptotic partial sums: plus side") {
  CHECK_THROWS_AS((void)ai_asymp_plus(0.5, 3), UnsupportedError);
  // one-term sum is the classical leading order (coefficient Gamma(1/2))
  for (double x : {2.0, 8.0, 25.0}) {
    const double lead = std::exp(-2.0 / 3.0 * x * std::sqrt(x)) /
                        (2.0 * std::sqrt(kPi) * std::pow(x, 0.25));
    CHECK(ai_asymp_plus(x, 1) == doctest::Approx(lead).epsilon(1e-13));
  }
  // truncation error below the first omitted term at x = 8, 4 terms
  {
    const double x = 8.0;
    const double ref = (double)oracles::airy_series((long double)x);
    const double pref =
        std::exp(-2.0 / 3.0 * x * std::sqrt(x)) / (2.0 * kPi * std::pow(x, 0.25));
    for (int nt = 1; nt <= 6; ++nt) {
      const double omitted = pref * series_coeff(nt) * std::pow(x, -1.5 * nt);
      CHECK(std::fabs(ai_asymp_plus(x, nt) - ref) <= omitted);
    }
  }
  CHECK(std::fabs(ai_asymp_plus(25.0, 2) / ai(25.0) - 1.0) < 1e-4);
}

TEST_CASE("asymptotic partial sums: minus side") {
  CHECK_THROWS_AS((void)ai_asymp_minus(-1.0, 3), UnsupportedError);
  // one-term closed form
  for (double x : {-3.0, -8.0, -20.0}) {
    const double z = -x;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double lead = std::sin(zeta + kPi / 4.0) / (std::sqrt(kPi) * std::pow(z, 0.25));
    CHECK(ai_asymp_minus(x, 1) == doctest::Approx(lead).epsilon(1e-13));
  }
  // phase zero of the one-term sum: 2/3 z^{3/2} + pi/4 = 3 pi
  {
    const double z = std::pow(1.5 * (3.0 * kPi - kPi / 4.0), 2.0 / 3.0);
    CHECK(std::fabs(ai_asymp_minus(-z, 1)) <= 1e-14);
  }
  // truncation error below the first omitted term at x = -20 (ODE oracle)
  {
    double ref, refp;
    airy_ode_march(-11.0, -20.0, 1e-4, &ref, &refp);
    const double z = 20.0;
    for (int nt = 1; nt <= 5; ++nt) {
      const double omitted =
          series_coeff(nt) * std::pow(z, -0.25 - 1.5 * nt) / kPi;
      CHECK(std::fabs(ai_asymp_minus(-20.0, nt) - ref) <= omitted + 1e-9);
    }
  }
  // the phase-form partial sum and the internal evaluation pathway are two
  // routes to the same expansion
  {
    AiryEvalConfig force_asymp;
    force_asymp.series_switch_radius = 0.5;
    for (double x : {-10.0, -15.0, -25.0})
      CHECK(ai(x, force_asymp) ==
            doctest::Approx(ai_asymp_minus(x, force_asymp.max_series_terms))
                .epsilon(1e-11));
  }
}

TEST_CASE("integral complement F") {
  CHECK(std::fabs(ai_integral_complement(0.0) - 1.0 / 3.0) <= 1e-10);
  CHECK(std::fabs(ai_integral_complement(10.0)) <= 1e-9);
  CHECK(ai_integral_complement(-30.0) == doctest::Approx(1.0410487022075969).epsilon(1e-7));
  // left-tail envelope: |F(-T) - 1| = O(T^{-3/4}), constant ~1/sqrt(pi)
  for (double T : {10.0, 20.0, 40.0, 80.0})
    CHECK(std::fabs(ai_integral_complement(-T) - 1.0) <= 0.7 * std::pow(T, -0.75));
  // asymptotic phase of the left tail
  for (double T : {25.0, 30.0, 35.0})
    CHECK(std::fabs(ai_integral_complement(-T) - 1.0 + oracles::airy_cdf_left_asym(T)) <=
          2e-3);
  // monotone decreasing from the first Airy zero rightward; strict where
  // the differences dominate the quadrature floor
  double prev = ai_integral_complement(-2.33);
  for (double x = -2.23; x <= 8.0; x += 0.1) {
    const double cur = ai_integral_complement(x);
    CHECK(cur < prev);
    prev = cur;
  }
  for (double x = 8.1; x <= 16.0; x += 0.1) {
    const double cur = ai_integral_complement(x);
    CHECK(cur <= prev + 1e-11);
    prev = cur;
  }
}

TEST_CASE("leading profile W") {
  CHECK(std::fabs(leading_profile_w(0.0) - 1.0 / 6.0) <= 1e-10);
  CHECK(std::fabs(leading_profile_w(10.0) - 0.5) <= 1e-9);
  CHECK(std::fabs(leading_profile_w(-10.0) + 0.5) <= 0.12);  // oscillatory approach
  for (double eta = -10.0; eta <= 10.0; eta += 0.5)
    CHECK(leading_profile_w(eta) + ai_integral_complement(eta) ==
          doctest::Approx(0.5).epsilon(1e-15));
}
