#include "airyconv/initial_data.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "airyconv/errors.hpp"

namespace airyconv {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double PowerTailFunction::tail_partial_sum(double x, int n_terms) const {
  const auto& c = (x >= 0.0) ? tail_coeffs_plus : tail_coeffs_minus;
  const int n = std::min<int>(n_terms, static_cast<int>(c.size()));
  double sum = 0.0, pw = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += c[static_cast<size_t>(k)] * pw;
    pw /= x;
  }
  return sum;
}

PowerTailFunction make_builtin(const std::string& name,
                               const std::vector<double>& params) {
  PowerTailFunction f;
  f.label = name;
  if (name == "constant") {
    const double c = params.empty() ? 1.0 : params[0];
    f.evaluator = [c](double) { return c; };
    f.tail_coeffs_plus = {c, 0, 0, 0, 0, 0, 0, 0};
    f.tail_coeffs_minus = {c, 0, 0, 0, 0, 0, 0, 0};
    f.tail_radius = 1.0;
  } else if (name == "step") {
    f.evaluator = [](double x) { return x < 0.0 ? 0.0 : 1.0; };
    f.tail_coeffs_plus = {1, 0, 0, 0, 0, 0, 0, 0};
    f.tail_coeffs_minus = {0, 0, 0, 0, 0, 0, 0, 0};
    f.tail_radius = 1.0;
  } else if (name == "atan") {
    // atan x = +-pi/2 - 1/x + 1/(3x^3) - 1/(5x^5) + ...
    f.evaluator = [](double x) { return std::atan(x); };
    f.tail_coeffs_plus = {kPi / 2, -1, 0, 1.0 / 3, 0, -1.0 / 5, 0, 1.0 / 7};
    f.tail_coeffs_minus = {-kPi / 2, -1, 0, 1.0 / 3, 0, -1.0 / 5, 0, 1.0 / 7};
    f.tail_radius = 8.0;
  } else if (name == "sigmoid_alg") {
    // x/sqrt(1+x^2) = +-(1 - 1/2 x^{-2} + 3/8 x^{-4} - 5/16 x^{-6} + ...)
    f.evaluator = [](double x) { return x / std::sqrt(1.0 + x * x); };
    f.tail_coeffs_plus = {1, 0, -0.5, 0, 3.0 / 8, 0, -5.0 / 16, 0};
    f.tail_coeffs_minus = {-1, 0, 0.5, 0, -3.0 / 8, 0, 5.0 / 16, 0};
    f.tail_radius = 8.0;
  } else if (name == "gaussian") {
    f.evaluator = [](double x) { return std::exp(-x * x); };
    f.tail_coeffs_plus.assign(8, 0.0);
    f.tail_coeffs_minus.assign(8, 0.0);
    // Radius 4 keeps x = 5 admissible for tail queries; the remainder
    // there is e^{-25}, far below any power bound in play.
    f.tail_radius = 4.0;
  } else if (name == "rational") {
    // 1/(1+x^2) = x^{-2} - x^{-4} + x^{-6} - ...
    f.evaluator = [](double x) { return 1.0 / (1.0 + x * x); };
    f.tail_coeffs_plus = {0, 0, 1, 0, -1, 0, 1, 0};
    f.tail_coeffs_minus = {0, 0, 1, 0, -1, 0, 1, 0};
    f.tail_radius = 8.0;
  } else {
    throw UnsupportedError("make_builtin: unknown function '" + name + "'");
  }
  return f;
}

double tail_remainder(const PowerTailFunction& f, double x, int n_terms) {
  if (n_terms < 1) throw DomainError("tail_remainder: n_terms must be positive");
  if (std::fabs(x) < f.tail_radius)
    throw DomainError("tail_remainder: |x| inside the core radius");
  const auto& c = (x >= 0.0) ? f.tail_coeffs_plus : f.tail_coeffs_minus;
  if (n_terms > static_cast<int>(c.size()))
    throw UnsupportedError("tail_remainder: coefficients not available to that order");
  return f(x) - f.tail_partial_sum(x, n_terms);
}

PowerTailFunction initial_data_from_json(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    const std::string kind = j.value("kind", "builtin");
    if (kind == "builtin") {
      std::vector<double> params;
      if (j.contains("params")) params = j["params"].get<std::vector<double>>();
      return make_builtin(j.at("name").get<std::string>(), params);
    }
    if (kind != "table")
      throw UnsupportedError("initial data: unknown kind '" + kind + "'");

    PowerTailFunction f;
    f.label = j.value("name", "table");
    auto xs = j.at("xs").get<std::vector<double>>();
    auto ys = j.at("ys").get<std::vector<double>>();
    if (xs.size() != ys.size() || xs.size() < 2)
      throw DomainError("initial data table: xs/ys size mismatch or too short");
    if (!std::is_sorted(xs.begin(), xs.end()))
      throw DomainError("initial data table: xs must be ascending");
    f.tail_coeffs_plus = j.value("tail_plus", std::vector<double>{});
    f.tail_coeffs_minus = j.value("tail_minus", std::vector<double>{});
    f.tail_radius = j.value("tail_radius", 8.0);
    PowerTailFunction shell = f;  // carries tails for the out-of-range branch
    f.evaluator = [xs = std::move(xs), ys = std::move(ys), shell](double x) {
      if (x <= xs.front() || x >= xs.back()) {
        // outside the table: declared Poincare expansion, all known terms
        return shell.tail_partial_sum(x, static_cast<int>(
            (x >= 0 ? shell.tail_coeffs_plus : shell.tail_coeffs_minus).size()));
      }
      const auto it = std::upper_bound(xs.begin(), xs.end(), x);
      const size_t i = static_cast<size_t>(it - xs.begin());
      const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return ys[i - 1] * (1.0 - w) + ys[i] * w;
    };
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("initial data descriptor: ") + e.what());
  }
}

}  // namespace airyconv
