#ifndef AIRYCONV_SOLVER_HPP
#define AIRYCONV_SOLVER_HPP

#include <string>
#include <vector>

#include "airyconv/airy.hpp"
#include "airyconv/asymptotics.hpp"
#include "airyconv/initial_data.hpp"

namespace airyconv {

// Artificial central/tail split of the convolution integral.
// The split exponent p in (0,1) fixes sigma = (|x|^3 + t)^{p/3}; the
// computed u must not depend on p (tested).
struct SplitConfig {
  double p = 0.6;

  double sigma(double x, double t) const;
  double eta(double x, double t) const;  // x (3t)^{-1/3}
  double mu(double x, double t) const;   // sigma (3t)^{-1/3}
};

// Tolerances and truncation for all solver integrations.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  int tail_terms = 4;       // Poincare orders used in the tails
  double osc_window = 10.0; // oscillatory closure beyond osc_window*max(1,sqrt|eta|)
};

// One evaluation of the solution.
struct SolutionSample {
  double x = 0.0;
  double t = 0.0;
  double eta = 0.0;
  double u = 0.0;
  double u_leading = 0.0;
  double residual = 0.0;       // u - u_leading, exactly
  double error_estimate = 0.0; // quadrature + first omitted tail term
  bool ok = true;
  std::string message;         // failure description when !ok
};

struct EvalResult {
  double u = 0.0;
  double error_estimate = 0.0;
};

// u(x,t) = (3t)^{-1/3} int f(y) Ai((x-y)/(3t)^{1/3}) dy, evaluated as the
// four-way split: exact quadrature on [-sigma, sigma] (sigma clamped up to
// f.tail_radius so the expansion is only used where declared), plus
// Poincare-expanded tails with the order-0 term closed through F and
// higher orders by oscillation-damped quadrature. Throws DomainError for
// t <= 0 and AccuracyError when a quadrature fails to converge.
EvalResult eval_u(const PowerTailFunction& f, double x, double t,
                  const SplitConfig& sc = {}, const QuadratureConfig& qc = {},
                  const AiryEvalConfig& acfg = {});

// Cartesian grid evaluation with the leading term and residual attached.
// Per-cell failures are marked (ok = false) instead of thrown.
std::vector<SolutionSample> eval_grid(const PowerTailFunction& f,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& ts,
                                      const SplitConfig& sc = {},
                                      const QuadratureConfig& qc = {},
                                      const AiryEvalConfig& acfg = {});

// Tail moment M_n = int theta^{-n} Ai(eta - theta) dtheta over (mu, inf)
// for side plus, (-inf, -mu) for side minus. n = 0 in closed form via F.
double tail_moment(int n, double eta, double mu, Side side,
                   const QuadratureConfig& qc = {},
                   const AiryEvalConfig& acfg = {});

}  // namespace airyconv

#endif  // AIRYCONV_SOLVER_HPP
