#ifndef AIRYCONV_VERIFY_HPP
#define AIRYCONV_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "airyconv/initial_data.hpp"
#include "airyconv/solver.hpp"

namespace airyconv {

// Decay-rate study of |eval_u - leading| over a time ladder.
struct ConvergenceReport {
  std::vector<double> t_ladder;
  std::vector<double> residual_sup;        // per t, sup over the eta window
  double fitted_slope = 0.0;               // OLS slope of log res vs log t
  double fitted_log_coeff = 0.0;           // coefficient of ln(ln t) regressor
  double fitted_slope_with_log = 0.0;      // slope when the regressor is included
  std::pair<double, double> slope_ci{0.0, 0.0};
  std::pair<double, double> eta_window{0.0, 0.0};
  bool signal_too_small = false;           // residuals at the solver error floor

  std::string to_json() const;
};

struct OracleResult {
  double u = 0.0;
  double error_estimate = 0.0;
  bool reliable = true;
};

struct FourierOracleResult {
  double u = 0.0;
  double imag_part = 0.0;   // must be ~0 for real data; asserted in tests
  double error_estimate = 0.0;
};

// Direct discretization of the convolution: composite Simpson on [-R, R]
// with steps h and h/2, Richardson-extrapolated, plus the f0 tail closure
// through F. reliable is cleared when h does not resolve the kernel
// oscillation at the window edges or R does not dominate the split scale.
OracleResult oracle_u_bruteforce(const PowerTailFunction& f, double x, double t,
                                 double R, double h,
                                 const AiryEvalConfig& acfg = {});

// Spectral representation u = (1/2pi) int fhat(k) e^{i(kx + k^3 t)} dk for
// absolutely integrable data (all tail coefficients zero; otherwise
// throws). fhat is tabulated once on a fine k-grid and spline-interpolated
// inside the phase-aware oscillatory quadrature.
FourierOracleResult oracle_u_fourier(const PowerTailFunction& f, double x,
                                     double t);

// (1/pi) int_0^inf sin(theta^3/3 + eta theta)/theta dtheta by the direct
// decomposition: plain quadrature through the stationary region, then
// alternating half-period blocks. Validated for |eta| <= 12.
double oracle_w_direct(double eta);

// Max over interior nodes of |D_t u + D_xxx u| with 2nd-order centered
// stencils on an eval_u sample grid. xs/ts must be uniform with spacings
// dx/dt; needs >= 5 x-points and >= 3 t-points.
double pde_residual(const PowerTailFunction& f, const std::vector<double>& xs,
                    const std::vector<double>& ts, double dx, double dt,
                    const SplitConfig& sc = {}, const QuadratureConfig& qc = {});

// Residual decay fit over a time ladder (>= 5 points spanning >= 2
// decades). The eta window is sampled at 17 equispaced points.
ConvergenceReport estimate_next_order(const PowerTailFunction& f,
                                      const std::vector<double>& t_ladder,
                                      std::pair<double, double> eta_window,
                                      const SplitConfig& sc = {},
                                      const QuadratureConfig& qc = {});

}  // namespace airyconv

#endif  // AIRYCONV_VERIFY_HPP
