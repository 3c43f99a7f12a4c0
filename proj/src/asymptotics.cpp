#include "airyconv/asymptotics.hpp"

#include <cmath>

#include "airyconv/detail/quadrature.hpp"
#include "airyconv/errors.hpp"

namespace airyconv {

bool classify(double x, double t, const Region& region) {
  if (!(t > 0.0)) throw DomainError("classify: t must be positive");
  const double bound = std::pow(std::fabs(x), region.alpha);
  switch (region.kind) {
    case Region::Kind::T_alpha:
      return t >= bound;
    case Region::Kind::X_plus_alpha:
      return x > 0.0 && t < bound;
    case Region::Kind::X_minus_alpha:
      return x < 0.0 && t < bound;
  }
  return false;
}

double LeadingTerm::value(double x, double t, const AiryEvalConfig& cfg) const {
  if (!(t > 0.0)) throw DomainError("leading term: t must be positive");
  const double eta = x / std::cbrt(3.0 * t);
  return (f0_plus - f0_minus) * leading_profile_w(eta, cfg) +
         0.5 * (f0_plus + f0_minus);
}

double leading(const PowerTailFunction& f, double x, double t,
               const AiryEvalConfig& cfg) {
  if (f.tail_coeffs_plus.empty() || f.tail_coeffs_minus.empty())
    throw DomainError("leading: datum lacks order-0 tail coefficients");
  LeadingTerm lt{f.tail_coeffs_plus[0], f.tail_coeffs_minus[0]};
  return lt.value(x, t, cfg);
}

double psi_n(int n, double theta, double eta, const AiryEvalConfig& cfg) {
  if (n < 1) throw DomainError("psi_n: n must be >= 1");
  if (n > cfg.max_deriv_order)
    throw UnsupportedError("psi_n: order above configured maximum");

  // Small theta: the subtracted form loses ~n*log10(1/theta) digits, so
  // switch to the Taylor remainder series
  //   Psi_n = sum_{r>=n} (-1)^r theta^{r-n} Ai^(r)(eta)/r!
  // which starts at the continuous-extension value.
  if (std::fabs(theta) < 0.02) {
    const int extra = 20;
    const auto d = detail::ai_deriv_table(eta, n + extra, cfg);
    double sum = 0.0;
    double pw = 1.0;  // theta^{r-n}
    double rfact = 1.0;
    for (int r = 0; r < n; ++r) rfact *= r + 1;  // n!
    for (int r = n; r <= n + extra; ++r) {
      const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
      sum += sgn * pw * d[static_cast<size_t>(r)] / rfact;
      pw *= theta;
      rfact *= r + 1;
    }
    return sum;
  }

  const auto d = detail::ai_deriv_table(eta, n - 1, cfg);
  double taylor = 0.0;
  double pw = 1.0;  // (-theta)^r
  double rfact = 1.0;
  for (int r = 0; r < n; ++r) {
    taylor += pw * d[static_cast<size_t>(r)] / rfact;
    pw *= -theta;
    rfact *= r + 1;
  }
  double thn = 1.0;
  for (int r = 0; r < n; ++r) thn *= theta;
  return (ai(eta - theta, cfg) - taylor) / thn;
}

double b_n(int n, double eta, Side side, const AiryEvalConfig& cfg) {
  if (n < 1) throw DomainError("b_n: n must be >= 1");
  double sum = 0.0;
  if (n >= 2) {
    const auto d = detail::ai_deriv_table(eta, n - 2, cfg);
    double rfact = 1.0;
    for (int r = 0; r <= n - 2; ++r) {
      sum += d[static_cast<size_t>(r)] / (rfact * (r - n + 1));
      rfact *= r + 1;
    }
  }
  const double lo = (side == Side::minus) ? -1.0 : 0.0;
  const double hi = (side == Side::minus) ? 0.0 : 1.0;
  auto r = detail::integrate(
      [n, eta, &cfg](double th) { return psi_n(n, th, eta, cfg); }, lo, hi,
      0.1 * cfg.abs_tol, 1e-12, 400);
  if (!r.converged)
    throw AccuracyError("b_n: unit-interval quadrature did not converge",
                        sum + r.value, r.error);
  return sum + r.value;
}

}  // namespace airyconv
