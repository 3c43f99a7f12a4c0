#ifndef AIRYCONV_INITIAL_DATA_HPP
#define AIRYCONV_INITIAL_DATA_HPP

#include <functional>
#include <string>
#include <vector>

namespace airyconv {

// Initial datum f with two-sided inverse-power (Poincare) expansions
//   f(x) ~ sum_n f_n^{+-} x^{-n},  x -> +-inf,
// declared usable for |x| >= tail_radius.
struct PowerTailFunction {
  std::function<double(double)> evaluator;
  std::vector<double> tail_coeffs_plus;   // f_0^+, f_1^+, ...
  std::vector<double> tail_coeffs_minus;  // f_0^-, f_1^-, ...
  double tail_radius = 8.0;
  std::string label;

  double operator()(double x) const { return evaluator(x); }

  // Partial sum of the side matching sign(x), n_terms terms.
  double tail_partial_sum(double x, int n_terms) const;
};

// Built-in test corpus. Names: constant (params: {c}, default 1), step,
// atan, sigmoid_alg (x/sqrt(1+x^2)), gaussian, rational (1/(1+x^2)).
PowerTailFunction make_builtin(const std::string& name,
                               const std::vector<double>& params = {});

// f(x) - sum_{n<n_terms} f_n^{+-} x^{-n} on the side of x.
// Requires |x| >= tail_radius and n_terms within the known coefficients.
double tail_remainder(const PowerTailFunction& f, double x, int n_terms);

// JSON descriptor (see README):
//   {"kind":"builtin","name":...,"params":[...]}
//   {"kind":"table","name":...,"xs":[...],"ys":[...],
//    "tail_plus":[...],"tail_minus":[...],"tail_radius":...}
// Table data is interpolated linearly inside [xs.front(), xs.back()] and
// continued by its declared tail expansion outside.
PowerTailFunction initial_data_from_json(const std::string& json_text);

}  // namespace airyconv

#endif  // AIRYCONV_INITIAL_DATA_HPP
