#ifndef AIRYCONV_DETAIL_QUADRATURE_HPP
#define AIRYCONV_DETAIL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace airyconv::detail {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;      // estimated absolute error
  int subdivisions = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b] (a < b required).
// Bisects the interval with the largest error estimate until
// sum(err) <= max(abs_tol, rel_tol*|I|) or max_subdiv is exhausted.
// breakpoints: interior points forced as initial segment boundaries
// (discontinuities, kinks); points outside (a, b) are ignored.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_subdiv,
                     const std::vector<double>& breakpoints = {});

// Single non-adaptive G7/K15 panel; cheap path for integrands known to be
// smooth on [a, b] (e.g. one lobe of an oscillation).
QuadResult kronrod15(const std::function<double(double)>& f, double a, double b);

}  // namespace airyconv::detail

#endif  // AIRYCONV_DETAIL_QUADRATURE_HPP
