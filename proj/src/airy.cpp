#include "airyconv/airy.hpp"

#include <cmath>
#include <limits>

#include "airyconv/detail/quadrature.hpp"
#include "airyconv/errors.hpp"

namespace airyconv {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
// Long double: these multiply series values up to ~1e9 before the final
// cancellation, so double-precision seeds would cost ~8 digits at x ~ 10.
constexpr long double kAi0 = 0.35502805388781723926006318600418317640L;
constexpr long double kAip0 = -0.25881940379280679840518356018920396348L;

// Maclaurin pair: Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with
//   f = sum a_k x^{3k},   a_0 = 1, a_k = a_{k-1}/((3k)(3k-1)),
//   g = sum b_k x^{3k+1}, b_0 = 1, b_k = b_{k-1}/((3k+1)(3k)).
// Accumulated in long double: the series alternates strongly for x < 0
// and the largest term reaches ~1e8 near x = -10.
void maclaurin_pair(double x, double* ai_out, double* aip_out) {
  const long double xl = x;
  const long double x3 = xl * xl * xl;
  const long double xinv = (x == 0.0) ? 0.0L : 1.0L / xl;
  long double f = 1.0L, fp = 0.0L;   // f and f'
  long double g = xl, gp = 1.0L;     // g and g'
  long double ta = 1.0L;             // a_k x^{3k}
  long double tb = xl;               // b_k x^{3k+1}
  for (int k = 1; k <= 200; ++k) {
    ta *= x3 / static_cast<long double>((3 * k) * (3 * k - 1));
    tb *= x3 / static_cast<long double>((3 * k + 1) * (3 * k));
    f += ta;
    g += tb;
    fp += ta * (3 * k) * xinv;
    gp += tb * (3 * k + 1) * xinv;
    if (std::fabs(static_cast<double>(ta)) < 1e-25 &&
        std::fabs(static_cast<double>(tb)) < 1e-25 && k > 4)
      break;
  }
  if (ai_out) *ai_out = static_cast<double>(kAi0 * f + kAip0 * g);
  if (aip_out) {
    if (x == 0.0) {
      *aip_out = static_cast<double>(kAip0);
    } else {
      *aip_out = static_cast<double>(kAi0 * fp + kAip0 * gp);
    }
  }
}

// g_n = Gamma(3n+1/2)/(9^n (2n)!) and the derivative analogue
// gv_n = g_n (6n+1)/(1-6n); both generated by term ratios.
struct AsympTerms {
  std::vector<double> g, gv;
  explicit AsympTerms(int n) {
    g.resize(n);
    gv.resize(n);
    g[0] = std::sqrt(kPi);
    gv[0] = g[0];
    for (int k = 0; k + 1 < n; ++k) {
      const double r = (3 * k + 0.5) * (3 * k + 1.5) * (3 * k + 2.5) /
                       (9.0 * (2 * k + 1) * (2 * k + 2));
      g[k + 1] = g[k] * r;
      gv[k + 1] = g[k + 1] * (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1));
    }
  }
};

// Exponential-side asymptotics, x > 0 large; truncated at the smallest
// term or at n_cap, whichever comes first.
void asymp_plus(double x, int n_cap, double* ai_out, double* aip_out) {
  const AsympTerms t(n_cap + 1);
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double s = 1.0 / (x * std::sqrt(x));  // x^{-3/2}
  double suma = 0.0, sumap = 0.0;
  double pw = 1.0;
  double prev = std::numeric_limits<double>::max();
  for (int n = 0; n < n_cap; ++n) {
    const double term = t.g[n] * pw;
    if (std::fabs(term) > prev) break;  // divergence onset
    prev = std::fabs(term);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    suma += sgn * term;
    sumap += sgn * t.gv[n] * pw;
    pw *= s;
  }
  const double pref = std::exp(-zeta) / (2.0 * kPi);
  if (ai_out) *ai_out = pref * suma / std::pow(x, 0.25);
  if (aip_out) *aip_out = -pref * sumap * std::pow(x, 0.25);
}

// Oscillatory-side asymptotics, x < 0, |x| large. DLMF 9.7.9/9.7.10 form:
// even/odd terms carry the two phases zeta -+ pi/4.
void asymp_minus(double x, int n_cap, double* ai_out, double* aip_out) {
  const AsympTerms t(n_cap + 1);
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double s = 1.0 / (z * std::sqrt(z));
  const double w = zeta - kPi / 4.0;
  const double cw = std::cos(w), sw = std::sin(w);
  // P = sum (-1)^k u_{2k} zeta^{-2k}, Q = sum (-1)^k u_{2k+1} zeta^{-2k-1}
  // expressed through g_n |x|^{-3n/2}; same for the v-series.
  double P = 0.0, Q = 0.0, Pv = 0.0, Qv = 0.0;
  double pw = 1.0;
  double prev = std::numeric_limits<double>::max();
  for (int n = 0; n < n_cap; ++n) {
    const double term = t.g[n] * pw;
    if (std::fabs(term) > prev) break;
    prev = std::fabs(term);
    const double sgn = (n / 2 % 2 == 0) ? 1.0 : -1.0;
    if (n % 2 == 0) {
      P += sgn * term;
      Pv += sgn * t.gv[n] * pw;
    } else {
      Q += sgn * term;
      Qv += sgn * t.gv[n] * pw;
    }
    pw *= s;
  }
  const double zq = std::pow(z, 0.25);
  if (ai_out) *ai_out = (cw * P + sw * Q) / (kPi * zq);
  if (aip_out) *aip_out = (sw * Pv - cw * Qv) * zq / kPi;
}

void ai_and_deriv(double x, const AiryEvalConfig& cfg, double* a, double* ap) {
  if (!std::isfinite(x)) throw DomainError("airy: non-finite argument");
  if (!cfg.valid()) throw DomainError("airy: invalid evaluation config");
  // The Maclaurin pair is absolutely accurate but loses relative accuracy
  // where Ai decays (its terms reach ~e^{2 zeta} before cancelling), so the
  // positive side hands over to the exponential expansion a few units
  // early; the oscillatory side keeps the full radius.
  const double r = cfg.series_switch_radius;
  const double pos_switch = std::min(r, std::max(6.0, r - 3.0));
  if (x >= 0.0 ? (x <= pos_switch) : (-x <= r)) {
    maclaurin_pair(x, a, ap);
  } else if (x > 0.0) {
    asymp_plus(x, cfg.max_series_terms, a, ap);
  } else {
    asymp_minus(x, cfg.max_series_terms, a, ap);
  }
}

}  // namespace

double ai(double x, const AiryEvalConfig& cfg) {
  double v;
  ai_and_deriv(x, cfg, &v, nullptr);
  return v;
}

double ai_deriv(double x, int n, const AiryEvalConfig& cfg) {
  if (n < 0) throw DomainError("ai_deriv: negative order");
  if (n > cfg.max_deriv_order)
    throw UnsupportedError("ai_deriv: order above configured maximum");
  if (n == 0) return ai(x, cfg);
  if (n == 1) {
    double d;
    ai_and_deriv(x, cfg, nullptr, &d);
    return d;
  }
  return detail::ai_deriv_table(x, n, cfg)[static_cast<size_t>(n)];
}

double ai_asymp_plus(double x, int n_terms) {
  if (!std::isfinite(x) || n_terms < 1)
    throw DomainError("ai_asymp_plus: bad argument");
  if (x < 1.0)
    throw UnsupportedError("ai_asymp_plus: x < 1 is outside the asymptotic range");
  const AsympTerms t(n_terms);
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double s = 1.0 / (x * std::sqrt(x));
  double sum = 0.0, pw = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += ((n % 2 == 0) ? 1.0 : -1.0) * t.g[n] * pw;
    pw *= s;
  }
  return std::exp(-zeta) / (2.0 * kPi * std::pow(x, 0.25)) * sum;
}

double ai_asymp_minus(double x, int n_terms) {
  if (!std::isfinite(x) || n_terms < 1)
    throw DomainError("ai_asymp_minus: bad argument");
  if (x > -2.0)
    throw UnsupportedError("ai_asymp_minus: x > -2 is outside the asymptotic range");
  const AsympTerms t(n_terms);
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double s = 1.0 / (z * std::sqrt(z));
  double sum = 0.0, pw = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    const double sgn = (n / 2 % 2 == 0) ? 1.0 : -1.0;
    const double phase = zeta + kPi / 4.0 * ((n % 2 == 0) ? 1.0 : -1.0);
    sum += sgn * t.g[n] * std::sin(phase) * pw;
    pw *= s;
  }
  return sum / (kPi * std::pow(z, 0.25));
}

double ai_integral_complement(double eta, const AiryEvalConfig& cfg) {
  if (!std::isfinite(eta)) throw DomainError("ai_integral_complement: non-finite argument");
  // Beyond x_hi the whole tail is below ~1e-13; the one-term exponential
  // asymptotic of int_x^inf Ai covers it.
  const double x_hi = 12.0;
  if (eta >= x_hi) {
    const double zeta = 2.0 / 3.0 * eta * std::sqrt(eta);
    return std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(eta, 0.75));
  }
  const double tail = std::exp(-2.0 / 3.0 * x_hi * std::sqrt(x_hi)) /
                      (2.0 * std::sqrt(kPi) * std::pow(x_hi, 0.75));
  std::vector<double> cuts;
  for (double c = std::ceil(eta) + 1.0; c < x_hi; c += 2.0) cuts.push_back(c);
  auto r = detail::integrate([&cfg](double s) { return ai(s, cfg); }, eta, x_hi,
                             0.1 * cfg.abs_tol, 0.0, 4000, cuts);
  if (!r.converged)
    throw AccuracyError("ai_integral_complement: quadrature did not converge",
                        r.value + tail, r.error);
  return r.value + tail;
}

double leading_profile_w(double eta, const AiryEvalConfig& cfg) {
  return 0.5 - ai_integral_complement(eta, cfg);
}

namespace detail {

std::vector<double> ai_deriv_table(double x, int n_max, const AiryEvalConfig& cfg) {
  std::vector<double> d(static_cast<size_t>(n_max) + 1);
  double a, ap;
  ai_and_deriv(x, cfg, &a, &ap);
  d[0] = a;
  if (n_max >= 1) d[1] = ap;
  for (int n = 0; n + 2 <= n_max; ++n)
    d[static_cast<size_t>(n) + 2] = x * d[static_cast<size_t>(n)] +
                                    n * (n > 0 ? d[static_cast<size_t>(n) - 1] : 0.0);
  return d;
}

std::vector<double> airy_negative_zeros(int count) {
  std::vector<double> z;
  z.reserve(static_cast<size_t>(count));
  const AiryEvalConfig cfg;
  for (int k = 1; k <= count; ++k) {
    // A&S 10.4.105 seed, then Newton on Ai(-z).
    const double u = 3.0 * kPi * (4.0 * k - 1.0) / 8.0;
    const double u2 = 1.0 / (u * u);
    double zk = std::pow(u, 2.0 / 3.0) *
                (1.0 + u2 * (5.0 / 48.0 + u2 * (-5.0 / 36.0 + u2 * (77125.0 / 82944.0))));
    for (int it = 0; it < 3; ++it) {
      double a, ap;
      ai_and_deriv(-zk, cfg, &a, &ap);
      zk += a / ap;  // d/dz Ai(-z) = -Ai'(-z)
    }
    z.push_back(zk);
  }
  return z;
}

}  // namespace detail

}  // namespace airyconv
