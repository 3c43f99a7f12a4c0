#include "airyconv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "airyconv/detail/oscillatory.hpp"
#include "airyconv/detail/quadrature.hpp"
#include "airyconv/errors.hpp"

namespace airyconv {

namespace {

// Ai argument beyond which the exponential side is numerically zero at
// the tolerances in play.
constexpr double kAiDecayCut = 14.0;

// Multiplier turning the evaluated expansion remainder at the split point
// into the reported tail error bound.
constexpr double kTailErrFactor = 3.0;

struct MomentResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// Minus-side moment: the Airy argument runs to +inf, so the integrand is
// cut off exponentially and plain adaptive quadrature suffices.
MomentResult moment_minus(int n, double eta, double mu,
                          const QuadratureConfig& qc, const AiryEvalConfig& acfg) {
  // theta in (-inf, -mu]; substitute s = -theta:
  //   M = (-1)^n int_mu^inf s^{-n} Ai(eta + s) ds, integrand dies once
  //   eta + s > kAiDecayCut.
  MomentResult out;
  const double hi = std::max(mu + 1.0, kAiDecayCut - eta);
  auto integrand = [n, eta, &acfg](double s) {
    return std::pow(s, -n) * ai(eta + s, acfg);
  };
  std::vector<double> cuts;
  for (double c = mu + 1.0; c < hi; c += 4.0) cuts.push_back(c);
  const auto r = detail::integrate(integrand, mu, hi, 0.1 * qc.abs_tol,
                                   0.1 * qc.rel_tol, qc.max_subdivisions, cuts);
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  out.value = sgn * r.value;
  out.error = r.error;
  out.converged = r.converged;
  return out;
}

MomentResult moment_plus(int n, double eta, double mu, const QuadratureConfig& qc,
                         const AiryEvalConfig& acfg,
                         const std::vector<double>& zeros) {
  MomentResult out;
  auto integrand = [n, eta, &acfg](double th) {
    return std::pow(th, -n) * ai(eta - th, acfg);
  };

  // Oscillatory closure begins at the first Airy zero of the kernel past
  // the configured window; blocks between consecutive zeros alternate.
  const double window =
      std::max({qc.osc_window * std::max(1.0, std::sqrt(std::fabs(eta))), mu,
                eta + zeros.front() + 0.5});
  size_t k0 = 0;
  while (k0 < zeros.size() && eta + zeros[k0] < window) ++k0;
  const size_t min_blocks = 40;
  if (k0 + min_blocks >= zeros.size())
    k0 = zeros.size() > min_blocks ? zeros.size() - min_blocks : 0;
  // blocks must not reach below mu (the table is sized so this holds; the
  // clamp above could otherwise move the start back)
  while (k0 + 2 < zeros.size() && eta + zeros[k0] < mu) ++k0;
  const double start = eta + zeros[k0];

  if (start > mu) {
    std::vector<double> cuts;
    for (double c = mu + 2.0; c < start; c += 2.0) cuts.push_back(c);
    const auto r1 = detail::integrate(integrand, mu, start, 0.05 * qc.abs_tol,
                                      0.1 * qc.rel_tol, qc.max_subdivisions, cuts);
    out.value += r1.value;
    out.error += r1.error;
    out.converged = out.converged && r1.converged;
  }

  std::vector<double> pts;
  pts.reserve(zeros.size() - k0);
  for (size_t k = k0; k < zeros.size(); ++k) pts.push_back(eta + zeros[k]);
  const auto tail = detail::sum_alternating_blocks(integrand, pts, 0.05 * qc.abs_tol);
  out.value += tail.value;
  out.error += tail.error;
  out.converged = out.converged && tail.converged;
  return out;
}

MomentResult moment(int n, double eta, double mu, Side side,
                    const QuadratureConfig& qc, const AiryEvalConfig& acfg,
                    const std::vector<double>& zeros) {
  if (!(mu > 0.0)) throw DomainError("tail_moment: mu must be positive");
  MomentResult out;
  if (n == 0) {
    // Closed form through F: plus side 1 - F(eta - mu), minus side F(eta + mu).
    out.value = (side == Side::plus)
                    ? 1.0 - ai_integral_complement(eta - mu, acfg)
                    : ai_integral_complement(eta + mu, acfg);
    out.error = acfg.abs_tol;
    return out;
  }
  return (side == Side::plus) ? moment_plus(n, eta, mu, qc, acfg, zeros)
                              : moment_minus(n, eta, mu, qc, acfg);
}

// Zero table long enough for the block sums at the given eta/mu/window.
std::vector<double> zero_table_for(double eta, double mu, const QuadratureConfig& qc) {
  const double window =
      std::max(qc.osc_window * std::max(1.0, std::sqrt(std::fabs(eta))), mu);
  const double zmax = std::max(4.0, window - eta);
  // inverse of z_k ~ (3 pi (4k-1)/8)^{2/3}
  const int k_window = static_cast<int>(std::ceil(
      (std::pow(zmax, 1.5) * 8.0 / (3.0 * 3.141592653589793) + 1.0) / 4.0));
  return detail::airy_negative_zeros(k_window + 48);
}

}  // namespace

double SplitConfig::sigma(double x, double t) const {
  const double ax = std::fabs(x);
  return std::pow(ax * ax * ax + t, p / 3.0);
}

double SplitConfig::eta(double x, double t) const { return x / std::cbrt(3.0 * t); }

double SplitConfig::mu(double x, double t) const {
  return sigma(x, t) / std::cbrt(3.0 * t);
}

double tail_moment(int n, double eta, double mu, Side side,
                   const QuadratureConfig& qc, const AiryEvalConfig& acfg) {
  if (n < 0) throw DomainError("tail_moment: n must be nonnegative");
  if (n > qc.tail_terms)
    throw UnsupportedError("tail_moment: n above configured tail_terms");
  std::vector<double> zeros;
  if (side == Side::plus && n > 0) zeros = zero_table_for(eta, mu, qc);
  const auto m = moment(n, eta, mu, side, qc, acfg, zeros);
  if (!m.converged)
    throw AccuracyError("tail_moment: oscillatory closure did not converge",
                        m.value, m.error);
  return m.value;
}

EvalResult eval_u(const PowerTailFunction& f, double x, double t,
                  const SplitConfig& sc, const QuadratureConfig& qc,
                  const AiryEvalConfig& acfg) {
  if (!(t > 0.0)) throw DomainError("eval_u: t must be positive");
  if (!std::isfinite(x)) throw DomainError("eval_u: non-finite x");
  if (!(sc.p > 0.0 && sc.p < 1.0)) throw DomainError("eval_u: p outside (0,1)");

  const double c = std::cbrt(3.0 * t);
  const double eta = x / c;
  const double sigma_raw = std::pow(std::fabs(x) * std::fabs(x) * std::fabs(x) + t, sc.p / 3.0);
  // Clamp: the Poincare expansion is only used where declared usable.
  const double sigma = std::max(sigma_raw, f.tail_radius);
  const double mu = sigma / c;

  double value = 0.0, err = 0.0;

  // Central part, exact integrand. Breakpoints at the data origin and the
  // kernel peak restore adaptive efficiency for kinked/discontinuous data.
  auto central = [&f, x, c, &acfg](double y) {
    return f(y) * ai((x - y) / c, acfg) / c;
  };
  std::vector<double> cuts{0.0, x, -0.5 * sigma, 0.5 * sigma};
  const auto rc = detail::integrate(central, -sigma, sigma, 0.25 * qc.abs_tol,
                                    0.25 * qc.rel_tol, qc.max_subdivisions, cuts);
  if (!rc.converged)
    throw AccuracyError("eval_u: central quadrature did not converge", rc.value,
                        rc.error);
  value += rc.value;
  err += rc.error;

  // Tails: sum_n f_n^{+-} (3t)^{-n/3} M_n^{+-}(eta, mu).
  std::vector<double> zeros;
  const int n_plus = std::min<int>(qc.tail_terms, f.tail_coeffs_plus.size());
  const int n_minus = std::min<int>(qc.tail_terms, f.tail_coeffs_minus.size());
  bool need_zeros = false;
  for (int n = 1; n < n_plus; ++n)
    if (f.tail_coeffs_plus[static_cast<size_t>(n)] != 0.0) need_zeros = true;
  if (need_zeros) zeros = zero_table_for(eta, mu, qc);

  double cn = 1.0;  // (3t)^{-n/3}
  for (int n = 0; n < std::max(n_plus, n_minus); ++n) {
    if (n < n_plus && f.tail_coeffs_plus[static_cast<size_t>(n)] != 0.0) {
      const auto m = moment(n, eta, mu, Side::plus, qc, acfg, zeros);
      if (!m.converged)
        throw AccuracyError("eval_u: plus-tail moment did not converge",
                            value + f.tail_coeffs_plus[static_cast<size_t>(n)] * cn * m.value,
                            m.error);
      value += f.tail_coeffs_plus[static_cast<size_t>(n)] * cn * m.value;
      err += std::fabs(f.tail_coeffs_plus[static_cast<size_t>(n)]) * cn * m.error;
    }
    if (n < n_minus && f.tail_coeffs_minus[static_cast<size_t>(n)] != 0.0) {
      const auto m = moment(n, eta, mu, Side::minus, qc, acfg, zeros);
      if (!m.converged)
        throw AccuracyError("eval_u: minus-tail moment did not converge",
                            value + f.tail_coeffs_minus[static_cast<size_t>(n)] * cn * m.value,
                            m.error);
      value += f.tail_coeffs_minus[static_cast<size_t>(n)] * cn * m.value;
      err += std::fabs(f.tail_coeffs_minus[static_cast<size_t>(n)]) * cn * m.error;
    }
    cn /= c;
  }

  // First omitted tail term, evaluated at the split point (the remainder
  // of the expansion actually used, so data with zero coefficients still
  // report their true truncation scale).
  const double rem_plus = f(sigma) - f.tail_partial_sum(sigma, n_plus);
  const double rem_minus = f(-sigma) - f.tail_partial_sum(-sigma, n_minus);
  err += kTailErrFactor * (std::fabs(rem_plus) + std::fabs(rem_minus));

  return {value, err};
}

std::vector<SolutionSample> eval_grid(const PowerTailFunction& f,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& ts,
                                      const SplitConfig& sc,
                                      const QuadratureConfig& qc,
                                      const AiryEvalConfig& acfg) {
  for (double t : ts)
    if (!(t > 0.0)) throw DomainError("eval_grid: all t must be positive");

  std::vector<SolutionSample> table(xs.size() * ts.size());
  auto cell = [&](size_t idx) {
    const size_t i = idx / ts.size();
    const size_t j = idx % ts.size();
    SolutionSample& s = table[idx];
    s.x = xs[i];
    s.t = ts[j];
    s.eta = sc.eta(s.x, s.t);
    try {
      const EvalResult r = eval_u(f, s.x, s.t, sc, qc, acfg);
      s.u = r.u;
      s.error_estimate = r.error_estimate;
      s.u_leading = leading(f, s.x, s.t, acfg);
      s.residual = s.u - s.u_leading;
    } catch (const AccuracyError& e) {
      s.ok = false;
      s.u = e.value;
      s.error_estimate = e.estimate;
      s.message = e.what();
    } catch (const Error& e) {
      s.ok = false;
      s.message = e.what();
    }
  };

  const size_t n = table.size();
  unsigned hw = std::thread::hardware_concurrency();
  const size_t n_threads = std::max<size_t>(1, std::min<size_t>(hw ? hw : 1, 8));
  if (n_threads <= 1 || n < 4) {
    for (size_t idx = 0; idx < n; ++idx) cell(idx);
  } else {
    // Independent cells into preallocated slots: result is bitwise
    // identical to the sequential evaluation.
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (size_t tid = 0; tid < n_threads; ++tid) {
      pool.emplace_back([&, tid] {
        for (size_t idx = tid; idx < n; idx += n_threads) cell(idx);
      });
    }
    for (auto& th : pool) th.join();
  }
  return table;
}

}  // namespace airyconv
