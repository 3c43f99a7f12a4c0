#ifndef AIRYCONV_DETAIL_OSCILLATORY_HPP
#define AIRYCONV_DETAIL_OSCILLATORY_HPP

#include <functional>
#include <vector>

namespace airyconv::detail {

struct OscSumResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

// Sum of int f over consecutive blocks [pts[0],pts[1]], [pts[1],pts[2]], ...
// where the blocks alternate in sign (pts are placed at the integrand's
// zeros). Partial sums are accelerated by repeated averaging; the error
// estimate is the last averaging correction.
OscSumResult sum_alternating_blocks(const std::function<double(double)>& f,
                                    const std::vector<double>& pts,
                                    double abs_tol);

// Repeated-averaging (Euler-type) limit of a sequence of partial sums of
// an alternating series.
OscSumResult accelerate_alternating(const std::vector<double>& partial_sums,
                                    double abs_tol);

}  // namespace airyconv::detail

#endif  // AIRYCONV_DETAIL_OSCILLATORY_HPP
