#ifndef AIRYCONV_AIRY_HPP
#define AIRYCONV_AIRY_HPP

#include <vector>

namespace airyconv {

// Evaluation policy for Ai and derived quantities.
//
// Two pathways cover the real line: the convergent Maclaurin pair for
// |x| <= series_switch_radius, and the large-|x| asymptotic series beyond.
// They must agree to within 10*abs_tol on a band of width 2 around the
// switch radius (tested).
struct AiryEvalConfig {
  double series_switch_radius = 9.0;
  int max_series_terms = 24;   // cap for the asymptotic sums
  double abs_tol = 1e-10;
  int max_deriv_order = 12;    // cap for ai_deriv's public surface

  bool valid() const {
    return series_switch_radius > 0.0 && abs_tol > 0.0 && max_series_terms >= 1;
  }
};

// Ai(x). Maclaurin pair (long double accumulation) inside the switch
// radius, asymptotic series outside. Absolute error <= abs_tol.
double ai(double x, const AiryEvalConfig& cfg = {});

// n-th derivative of Ai. n = 0,1 from the series/asymptotics, n >= 2 via
// Ai^(n+2) = x Ai^(n) + n Ai^(n-1). n above cfg.max_deriv_order throws.
double ai_deriv(double x, int n, const AiryEvalConfig& cfg = {});

// Partial sum, n_terms terms, of the exponential expansion of Ai on the
// positive axis:
//   Ai(x) ~ x^{-1/4}/(2 pi) exp(-2/3 x^{3/2})
//           sum_n (-1)^n g_n x^{-3n/2},   g_n = Gamma(3n+1/2)/(9^n (2n)!).
// Requires x >= 1.
double ai_asymp_plus(double x, int n_terms);

// Partial sum of the oscillatory expansion on the negative axis:
//   Ai(x) ~ |x|^{-1/4}/pi sum_n (-1)^[n/2] g_n
//           sin(2/3 |x|^{3/2} + pi/4 (-1)^n) |x|^{-3n/2}.
// Requires x <= -2.
double ai_asymp_minus(double x, int n_terms);

// F(eta) = int_eta^inf Ai. Decreasing from 1 to 0 for eta above the first
// Airy zero; oscillates about 1 with O(|eta|^{-3/4}) envelope below it.
double ai_integral_complement(double eta, const AiryEvalConfig& cfg = {});

// W(eta) = 1/2 - F(eta) = (1/pi) int_0^inf sin(theta^3/3 + eta theta)/theta dtheta.
// The transition profile of the leading large-time term; W(-inf) = -1/2,
// W(0) = 1/6, W(+inf) = 1/2.
double leading_profile_w(double eta, const AiryEvalConfig& cfg = {});

namespace detail {

// Derivatives Ai^(0..n_max) at x in one recurrence sweep; no order cap.
// Internal use (Taylor kernels need orders beyond the public limit).
std::vector<double> ai_deriv_table(double x, int n_max, const AiryEvalConfig& cfg);

// Negative zeros of Ai: returns z_k > 0 with Ai(-z_k) = 0, k = 1..count,
// ascending, refined to machine precision.
std::vector<double> airy_negative_zeros(int count);

}  // namespace detail

}  // namespace airyconv

#endif  // AIRYCONV_AIRY_HPP
