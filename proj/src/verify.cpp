#include "airyconv/verify.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "airyconv/asymptotics.hpp"
#include "airyconv/detail/oscillatory.hpp"
#include "airyconv/detail/quadrature.hpp"
#include "airyconv/errors.hpp"

namespace airyconv {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Composite Simpson with endpoints sampled one-sided (nudged inward), so
// integrating up to a jump point uses the correct branch value.
double simpson_sided(const std::function<double(double)>& f, double a, double b,
                     int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  const double nudge = 1e-12 * (1.0 + std::fabs(a) + std::fabs(b));
  double sum = f(a + nudge) + f(b - nudge);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Natural cubic spline on a uniform grid; enough smoothness for the
// slowly varying Fourier transform of decaying data.
class UniformSpline {
 public:
  UniformSpline() = default;
  UniformSpline(double x0, double dx, std::vector<double> y)
      : x0_(x0), dx_(dx), y_(std::move(y)) {
    const size_t n = y_.size();
    m_.assign(n, 0.0);
    if (n < 3) return;
    // natural ends: m[i-1] + 4 m[i] + m[i+1] = 6 (y[i+1]-2y[i]+y[i-1])/dx^2
    std::vector<double> rhs(n, 0.0), cp(n, 0.0), dp(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i)
      rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
    cp[1] = 0.25;
    dp[1] = 0.25 * rhs[1];
    for (size_t i = 2; i + 1 < n; ++i) {
      const double denom = 4.0 - cp[i - 1];
      cp[i] = 1.0 / denom;
      dp[i] = (rhs[i] - dp[i - 1]) / denom;
    }
    for (size_t i = n - 2; i >= 1; --i) {
      m_[i] = dp[i] - cp[i] * m_[i + 1];
      if (i == 1) break;
    }
  }

  double operator()(double x) const {
    const size_t n = y_.size();
    double s = (x - x0_) / dx_;
    if (s <= 0.0) return y_.front();
    if (s >= static_cast<double>(n - 1)) return y_.back();
    const size_t i = static_cast<size_t>(s);
    const double w = s - static_cast<double>(i);
    const double a = 1.0 - w, bq = w;
    return a * y_[i] + bq * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (bq * bq * bq - bq) * m_[i + 1]) *
               (dx_ * dx_) / 6.0;
  }

 private:
  double x0_ = 0.0, dx_ = 1.0;
  std::vector<double> y_, m_;
};

// Least squares for y ~ X beta with 2 or 3 columns; returns beta and the
// standard error of beta[1] (the slope column).
std::vector<double> ols(const std::vector<std::vector<double>>& X,
                        const std::vector<double>& y, double* slope_se) {
  const size_t n = y.size();
  const size_t p = X.size();
  // normal equations, p <= 3
  double A[3][3] = {{0}}, b[3] = {0};
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < p; ++r) {
      b[r] += X[r][i] * y[i];
      for (size_t c = 0; c < p; ++c) A[r][c] += X[r][i] * X[c][i];
    }
  }
  // Gaussian elimination
  double M[3][4];
  for (size_t r = 0; r < p; ++r) {
    for (size_t c = 0; c < p; ++c) M[r][c] = A[r][c];
    M[r][p] = b[r];
  }
  for (size_t k = 0; k < p; ++k) {
    size_t piv = k;
    for (size_t r = k + 1; r < p; ++r)
      if (std::fabs(M[r][k]) > std::fabs(M[piv][k])) piv = r;
    std::swap(M[k], M[piv]);
    for (size_t r = k + 1; r < p; ++r) {
      const double w = M[r][k] / M[k][k];
      for (size_t c = k; c <= p; ++c) M[r][c] -= w * M[k][c];
    }
  }
  std::vector<double> beta(p, 0.0);
  for (size_t k = p; k-- > 0;) {
    double s = M[k][p];
    for (size_t c = k + 1; c < p; ++c) s -= M[k][c] * beta[c];
    beta[k] = s / M[k][k];
  }
  if (slope_se) {
    double rss = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double fit = 0.0;
      for (size_t r = 0; r < p; ++r) fit += beta[r] * X[r][i];
      rss += (y[i] - fit) * (y[i] - fit);
    }
    const double dof = std::max<double>(1.0, static_cast<double>(n - p));
    // var(beta) = sigma^2 (X'X)^{-1}; extract (1,1) entry by solving
    double e[3] = {0, 1, 0};
    double Minv[3][4];
    for (size_t r = 0; r < p; ++r) {
      for (size_t c = 0; c < p; ++c) Minv[r][c] = A[r][c];
      Minv[r][p] = e[r];
    }
    for (size_t k = 0; k < p; ++k) {
      size_t piv = k;
      for (size_t r = k + 1; r < p; ++r)
        if (std::fabs(Minv[r][k]) > std::fabs(Minv[piv][k])) piv = r;
      std::swap(Minv[k], Minv[piv]);
      for (size_t r = k + 1; r < p; ++r) {
        const double w = Minv[r][k] / Minv[k][k];
        for (size_t c = k; c <= p; ++c) Minv[r][c] -= w * Minv[k][c];
      }
    }
    std::vector<double> col(p, 0.0);
    for (size_t k = p; k-- > 0;) {
      double s = Minv[k][p];
      for (size_t c = k + 1; c < p; ++c) s -= Minv[k][c] * col[c];
      col[k] = s / Minv[k][k];
    }
    *slope_se = std::sqrt(std::max(0.0, rss / dof * col[1]));
  }
  return beta;
}

}  // namespace

std::string ConvergenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["t_ladder"] = t_ladder;
  j["residual_sup"] = residual_sup;
  j["fitted_slope"] = fitted_slope;
  j["fitted_log_coeff"] = fitted_log_coeff;
  j["fitted_slope_with_log"] = fitted_slope_with_log;
  j["slope_ci"] = {slope_ci.first, slope_ci.second};
  j["eta_window"] = {eta_window.first, eta_window.second};
  j["signal_too_small"] = signal_too_small;
  return j.dump(2);
}

OracleResult oracle_u_bruteforce(const PowerTailFunction& f, double x, double t,
                                 double R, double h, const AiryEvalConfig& acfg) {
  if (!(t > 0.0) || !(R > 0.0) || !(h > 0.0))
    throw DomainError("oracle_u_bruteforce: bad arguments");
  OracleResult out;
  const double c = std::cbrt(3.0 * t);
  const double eta_edge = (std::fabs(x) + R) / c;
  const double h_needed = 0.1 * c / std::max(1.0, std::sqrt(eta_edge));
  if (h > h_needed || R < 4.0 * std::cbrt(std::fabs(x * x * x) + t))
    out.reliable = false;

  auto integrand = [&](double y) { return f(y) * ai((x - y) / c, acfg) / c; };
  // split at the origin: builtin data may jump there, and Simpson across a
  // jump degrades to first order
  const int n_half = static_cast<int>(std::ceil(R / h));
  auto sweep = [&](int n) {
    return simpson_sided(integrand, -R, 0.0, n) + simpson_sided(integrand, 0.0, R, n);
  };
  const double coarse = sweep(n_half);
  const double fine = sweep(2 * n_half);
  const double richardson = (16.0 * fine - coarse) / 15.0;

  const double f0p = f.tail_coeffs_plus.empty() ? 0.0 : f.tail_coeffs_plus[0];
  const double f0m = f.tail_coeffs_minus.empty() ? 0.0 : f.tail_coeffs_minus[0];
  const double tail_plus = f0p * (1.0 - ai_integral_complement((x - R) / c, acfg));
  const double tail_minus = f0m * ai_integral_complement((x + R) / c, acfg);

  // neglected beyond-f0 tail mass
  const double env_plus = std::min(1.0, 1.2 * std::pow(std::max(1.0, (R - x) / c), -0.75));
  const double fm = ai_integral_complement((x + R) / c, acfg);
  const double tail_err = std::fabs(f(R) - f0p) * env_plus +
                          std::fabs(f(-R) - f0m) * std::min(1.0, std::fabs(fm) + 1e-12);

  out.u = richardson + tail_plus + tail_minus;
  out.error_estimate = std::fabs(fine - coarse) / 15.0 + tail_err + 1e-12;
  return out;
}

FourierOracleResult oracle_u_fourier(const PowerTailFunction& f, double x, double t) {
  if (!(t > 0.0)) throw DomainError("oracle_u_fourier: t must be positive");
  for (double v : f.tail_coeffs_plus)
    if (v != 0.0) throw UnsupportedError("oracle_u_fourier: data has nonzero tails");
  for (double v : f.tail_coeffs_minus)
    if (v != 0.0) throw UnsupportedError("oracle_u_fourier: data has nonzero tails");

  // window where f lives
  double Y = 2.0;
  while (Y < 60.0 && (std::fabs(f(Y)) > 1e-18 || std::fabs(f(-Y)) > 1e-18)) Y += 1.0;
  Y += 2.0;

  // tabulate fhat on [0, K]; extend K until the transform has decayed
  double K = 12.0;
  auto fhat_at = [&](double k, double* re, double* im) {
    const auto rc = detail::integrate(
        [&](double y) { return f(y) * std::cos(k * y); }, -Y, Y, 1e-12, 1e-10, 400);
    const auto rs = detail::integrate(
        [&](double y) { return f(y) * std::sin(k * y); }, -Y, Y, 1e-12, 1e-10, 400);
    *re = rc.value;
    *im = -rs.value;
  };
  {
    double re, im;
    fhat_at(K, &re, &im);
    while (std::hypot(re, im) > 1e-11 && K < 48.0) {
      K *= 2.0;
      fhat_at(K, &re, &im);
    }
  }

  const int nk = 1601;
  const double dk = K / (nk - 1);
  std::vector<double> re_tab(nk), im_tab(nk);
  for (int i = 0; i < nk; ++i) fhat_at(i * dk, &re_tab[i], &im_tab[i]);
  UniformSpline re_sp(0.0, dk, re_tab), im_sp(0.0, dk, im_tab);
  auto re_hat = [&](double k) { return re_sp(std::fabs(k)); };                    // even
  auto im_hat = [&](double k) { return (k < 0 ? -1.0 : 1.0) * im_sp(std::fabs(k)); };  // odd

  // phase-aware segmentation of [-K, K]
  std::vector<double> pts{-K};
  double k = -K;
  while (k < K) {
    const double dphi = std::fabs(x + 3.0 * k * k * t);
    double step = std::min(0.25, kPi / (1.0 + dphi));
    step = std::min(step, std::sqrt(kPi / (1.0 + 3.0 * std::fabs(k) * t)));
    k = std::min(K, k + step);
    pts.push_back(k);
  }

  double re_sum = 0.0, im_sum = 0.0, err = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    auto re_part = detail::kronrod15(
        [&](double q) {
          const double ph = q * x + q * q * q * t;
          return re_hat(q) * std::cos(ph) - im_hat(q) * std::sin(ph);
        },
        pts[i], pts[i + 1]);
    auto im_part = detail::kronrod15(
        [&](double q) {
          const double ph = q * x + q * q * q * t;
          return re_hat(q) * std::sin(ph) + im_hat(q) * std::cos(ph);
        },
        pts[i], pts[i + 1]);
    re_sum += re_part.value;
    im_sum += im_part.value;
    err += re_part.error + im_part.error;
  }

  FourierOracleResult out;
  out.u = re_sum / (2.0 * kPi);
  out.imag_part = im_sum / (2.0 * kPi);
  out.error_estimate = err / (2.0 * kPi) + 1e-9;  // spline + tabulation floor
  return out;
}

double oracle_w_direct(double eta) {
  if (!std::isfinite(eta)) throw DomainError("oracle_w_direct: non-finite eta");
  if (std::fabs(eta) > 12.0)
    throw UnsupportedError("oracle_w_direct: |eta| outside the validated range");

  auto phase = [eta](double th) { return th * th * th / 3.0 + eta * th; };
  auto integrand = [&](double th) {
    return th == 0.0 ? eta : std::sin(phase(th)) / th;
  };

  // first block boundary: phase multiple of pi beyond the stationary point
  const double th_m = eta < 0.0 ? std::sqrt(-eta) : 0.0;
  const double th0 = th_m + 0.75;
  const double k0 = std::ceil(phase(th0) / kPi);
  // Newton solve phase(th) = v on the monotone branch
  auto solve_phase = [&](double v, double guess) {
    double th = std::max(guess, th0);
    for (int it = 0; it < 60; ++it) {
      const double g = phase(th) - v;
      const double gp = th * th + eta;
      double step = g / gp;
      if (std::fabs(step) > 1.0) step = step > 0 ? 1.0 : -1.0;
      th -= step;
      if (th < th_m) th = 0.5 * (th + step + th_m + 0.1);
      if (std::fabs(step) < 1e-14 * std::max(1.0, th)) break;
    }
    return th;
  };

  const int n_blocks = 48;
  std::vector<double> pts;
  pts.reserve(n_blocks + 1);
  double guess = th0;
  for (int j = 0; j <= n_blocks; ++j) {
    const double v = (k0 + j) * kPi;
    guess = solve_phase(v, guess);
    pts.push_back(guess);
    guess += kPi / (guess * guess + eta);
  }

  const auto inner = detail::integrate(integrand, 0.0, pts.front(), 1e-11, 1e-11, 2000);
  const auto tail = detail::sum_alternating_blocks(integrand, pts, 1e-10);
  if (!inner.converged)
    throw AccuracyError("oracle_w_direct: inner quadrature failed",
                        (inner.value + tail.value) / kPi, inner.error);
  return (inner.value + tail.value) / kPi;
}

double pde_residual(const PowerTailFunction& f, const std::vector<double>& xs,
                    const std::vector<double>& ts, double dx, double dt,
                    const SplitConfig& sc, const QuadratureConfig& qc) {
  const size_t nx = xs.size(), nt = ts.size();
  if (nx < 5 || nt < 3)
    throw DomainError("pde_residual: need >= 5 x-points and >= 3 t-points");
  for (size_t i = 0; i + 1 < nx; ++i)
    if (std::fabs(xs[i + 1] - xs[i] - dx) > 1e-9 * std::max(1.0, std::fabs(dx)))
      throw DomainError("pde_residual: xs not uniform with spacing dx");
  for (size_t j = 0; j + 1 < nt; ++j)
    if (std::fabs(ts[j + 1] - ts[j] - dt) > 1e-9 * std::max(1.0, std::fabs(dt)))
      throw DomainError("pde_residual: ts not uniform with spacing dt");

  const auto grid = eval_grid(f, xs, ts, sc, qc);
  auto u = [&](size_t i, size_t j) -> double { return grid[i * nt + j].u; };
  for (const auto& s : grid)
    if (!s.ok) throw AccuracyError("pde_residual: grid cell failed: " + s.message,
                                   0.0, 0.0);

  double worst = 0.0;
  for (size_t i = 2; i + 2 < nx; ++i) {
    for (size_t j = 1; j + 1 < nt; ++j) {
      const double ut = (u(i, j + 1) - u(i, j - 1)) / (2.0 * dt);
      const double uxxx = (u(i + 2, j) - 2.0 * u(i + 1, j) + 2.0 * u(i - 1, j) -
                           u(i - 2, j)) /
                          (2.0 * dx * dx * dx);
      worst = std::max(worst, std::fabs(ut + uxxx));
    }
  }
  return worst;
}

ConvergenceReport estimate_next_order(const PowerTailFunction& f,
                                      const std::vector<double>& t_ladder,
                                      std::pair<double, double> eta_window,
                                      const SplitConfig& sc,
                                      const QuadratureConfig& qc) {
  if (t_ladder.size() < 5)
    throw DomainError("estimate_next_order: ladder needs >= 5 points");
  if (!std::is_sorted(t_ladder.begin(), t_ladder.end()) ||
      t_ladder.back() < 100.0 * t_ladder.front())
    throw DomainError("estimate_next_order: ladder must ascend over >= 2 decades");
  if ((f.tail_coeffs_plus.size() < 2) || (f.tail_coeffs_minus.size() < 2))
    throw DomainError("estimate_next_order: tails needed to order >= 1");

  ConvergenceReport rep;
  rep.t_ladder = t_ladder;
  rep.eta_window = eta_window;

  const int n_eta = 17;
  double err_floor = 0.0;
  for (double t : t_ladder) {
    const double c = std::cbrt(3.0 * t);
    double sup = 0.0;
    for (int i = 0; i < n_eta; ++i) {
      const double eta = eta_window.first +
                         (eta_window.second - eta_window.first) * i / (n_eta - 1);
      const double x = eta * c;
      const auto r = eval_u(f, x, t, sc, qc);
      const double lead = leading(f, x, t);
      sup = std::max(sup, std::fabs(r.u - lead));
      err_floor = std::max(err_floor, r.error_estimate);
    }
    rep.residual_sup.push_back(sup);
  }

  const double floor = 20.0 * err_floor + 1e-12;
  const double peak = *std::max_element(rep.residual_sup.begin(), rep.residual_sup.end());
  if (peak < floor) rep.signal_too_small = true;

  std::vector<double> lt, lr, ones, llt;
  for (size_t i = 0; i < t_ladder.size(); ++i) {
    if (rep.residual_sup[i] <= 0.0) continue;
    ones.push_back(1.0);
    lt.push_back(std::log(t_ladder[i]));
    lr.push_back(std::log(rep.residual_sup[i]));
    llt.push_back(std::log(std::log(t_ladder[i])));
  }
  if (lt.size() >= 3) {
    double se = 0.0;
    const auto beta = ols({ones, lt}, lr, &se);
    rep.fitted_slope = beta[1];
    rep.slope_ci = {beta[1] - 2.0 * se, beta[1] + 2.0 * se};
    if (lt.size() >= 4) {
      const auto beta3 = ols({ones, lt, llt}, lr, nullptr);
      rep.fitted_slope_with_log = beta3[1];
      rep.fitted_log_coeff = beta3[2];
    }
  }
  return rep;
}

}  // namespace airyconv
