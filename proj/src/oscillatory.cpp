#include "airyconv/detail/oscillatory.hpp"

#include <cmath>

#include "airyconv/detail/quadrature.hpp"

namespace airyconv::detail {

OscSumResult accelerate_alternating(const std::vector<double>& partial_sums,
                                    double abs_tol) {
  OscSumResult out;
  if (partial_sums.empty()) return out;
  std::vector<double> s = partial_sums;
  double prev = s.back();
  double best = prev;
  double best_err = s.size() > 1 ? std::fabs(s[s.size() - 1] - s[s.size() - 2])
                                 : std::fabs(prev);
  while (s.size() > 1) {
    for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
    const double cur = s.back();
    const double err = std::fabs(cur - prev);
    if (err < best_err) {
      best_err = err;
      best = cur;
    }
    prev = cur;
  }
  out.value = best;
  out.error = 2.0 * best_err + 1e-16 * std::fabs(best);
  out.converged = out.error <= abs_tol;
  return out;
}

OscSumResult sum_alternating_blocks(const std::function<double(double)>& f,
                                    const std::vector<double>& pts,
                                    double abs_tol) {
  OscSumResult out;
  if (pts.size() < 2) return out;
  std::vector<double> partial;
  partial.reserve(pts.size() - 1);
  double sum = 0.0, quad_err = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const QuadResult b = kronrod15(f, pts[i], pts[i + 1]);
    sum += b.value;
    quad_err += b.error;
    partial.push_back(sum);
  }
  OscSumResult acc = accelerate_alternating(partial, abs_tol);
  acc.error += quad_err;
  acc.converged = acc.error <= abs_tol;
  return acc;
}

}  // namespace airyconv::detail
