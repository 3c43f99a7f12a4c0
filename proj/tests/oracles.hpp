// Test-side reference implementations, independent of the library paths
// they are used to check. Deliberately plain: fixed-step rules, explicit
// series, no shared code with src/.
#ifndef AIRYCONV_TESTS_ORACLES_HPP
#define AIRYCONV_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracles {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

// Exact decimal -> wide conversion; keeps the seed constants at full
// extended precision (a plain literal would round to double/long double
// and cost ~6 digits after the series' 1e6-sized cancellation).
inline wide wide_from_digits(const char* s) {
  wide v = 0;
  int frac = 0;
  bool seen_dot = false;
  for (; *s; ++s) {
    if (*s == '.') {
      seen_dot = true;
      continue;
    }
    v = v * 10 + (*s - '0');
    if (seen_dot) ++frac;
  }
  for (int i = 0; i < frac; ++i) v /= 10;
  return v;
}

inline wide airy_c1() {  // Ai(0)
  static const wide v = wide_from_digits("0.3550280538878172392600631860041831763980");
  return v;
}
inline wide airy_c2() {  // -Ai'(0)
  static const wide v = wide_from_digits("0.2588194037928067984051835601892039634793");
  return v;
}

// High-precision Ai via the ascending series in wide arithmetic. The
// largest intermediate term is ~1e6 at |x| = 8 and ~1e8 at |x| = 10, so
// quad precision leaves ~25 accurate digits at the edge of the range.
inline wide airy_series(wide x) {
  wide f = 0, g = 0;
  wide num_f = 1;  // x^{3k} prod 1/((3j)(3j-1))
  wide num_g = x;  // x^{3k+1} prod 1/((3j+1)(3j))
  for (int k = 0; k < 400; ++k) {
    f += num_f;
    g += num_g;
    const wide x3 = x * x * x;
    num_f *= x3 / ((3.0 * (k + 1)) * (3.0 * (k + 1) - 1.0));
    num_g *= x3 / ((3.0 * (k + 1) + 1.0) * (3.0 * (k + 1)));
    const double anf = std::fabs((double)num_f), ang = std::fabs((double)num_g);
    if (anf < 1e-40 && ang < 1e-40 && k > 5) break;
  }
  return airy_c1() * f - airy_c2() * g;
}

inline wide airy_series_deriv(wide x) {
  if (x == 0) return -airy_c2();
  wide fp = 0, gp = 1;
  wide num_f = 1;
  wide num_g = x;
  for (int k = 1; k < 400; ++k) {
    const wide x3 = x * x * x;
    num_f *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
    num_g *= x3 / ((3.0 * k + 1.0) * (3.0 * k));
    fp += num_f * (3.0 * k) / x;
    gp += num_g * (3.0 * k + 1.0) / x;
    const double anf = std::fabs((double)num_f), ang = std::fabs((double)num_g);
    if (anf < 1e-40 && ang < 1e-40 && k > 5) break;
  }
  return airy_c1() * fp - airy_c2() * gp;
}

// Composite Simpson with n intervals (n made even).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Asymptotic amplitude of int_{-inf}^{-Z} Ai: cos(2/3 Z^{3/2} + pi/4)/(sqrt(pi) Z^{3/4}).
inline double airy_cdf_left_asym(double Z) {
  const double zeta = 2.0 / 3.0 * Z * std::sqrt(Z);
  return std::cos(zeta + 3.141592653589793 / 4.0) /
         (std::sqrt(3.141592653589793) * std::pow(Z, 0.75));
}

// Bisection root of a monotone-bracketed function.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracles

#endif  // AIRYCONV_TESTS_ORACLES_HPP
