#include "airyconv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "airyconv/asymptotics.hpp"
#include "airyconv/errors.hpp"
#include "airyconv/selftest.hpp"
#include "airyconv/verify.hpp"

namespace airyconv {

namespace {

std::string num(double v) {
  char buf[40];
  snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_artifact(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw DomainError("cannot open output file: " + out_path);
  os << content;
}

std::string swap_extension(const std::string& path, const std::string& ext) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + ext;
  return path.substr(0, dot) + ext;
}

// Minimal single-series line chart; x/y are data coordinates.
std::string svg_line_chart(const std::vector<double>& x, const std::vector<double>& y,
                           const std::string& x_label, const std::string& y_label) {
  const int W = 640, H = 440, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = x[0], xmax = x[0], ymin = y[0], ymax = y[0];
  for (double v : x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
  for (double v : y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const double xpad = 0.03 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
  xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;
  auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto py = [&](double v) { return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
    << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  // axes
  char buf[256];
  snprintf(buf, sizeof(buf),
           "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", ml,
           H - mb, W - mr, H - mb);
  s << buf;
  snprintf(buf, sizeof(buf),
           "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", ml,
           mt, ml, H - mb);
  s << buf;
  // ticks
  for (int i = 0; i <= 4; ++i) {
    const double vx = xmin + (xmax - xmin) * i / 4.0;
    const double vy = ymin + (ymax - ymin) * i / 4.0;
    snprintf(buf, sizeof(buf),
             "<text x=\"%.1f\" y=\"%d\" font-size=\"11\" text-anchor=\"middle\">%.4g</text>\n",
             px(vx), H - mb + 16, vx);
    s << buf;
    snprintf(buf, sizeof(buf),
             "<text x=\"%d\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">%.4g</text>\n",
             ml - 6, py(vy) + 4, vy);
    s << buf;
  }
  snprintf(buf, sizeof(buf),
           "<text x=\"%d\" y=\"%d\" font-size=\"13\" text-anchor=\"middle\">%s</text>\n",
           (ml + W - mr) / 2, H - 12, x_label.c_str());
  s << buf;
  snprintf(buf, sizeof(buf),
           "<text x=\"16\" y=\"%d\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 %d)\">%s</text>\n",
           (mt + H - mb) / 2, (mt + H - mb) / 2, y_label.c_str());
  s << buf;
  // polyline
  s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < x.size(); ++i) {
    snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x[i]), py(y[i]));
    s << buf;
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

PowerTailFunction load_data(const RunConfig& cfg) {
  if (cfg.f_descriptor.empty())
    throw DomainError("command requires initial data (--f or config f)");
  if (cfg.f_descriptor.front() == '{')
    return initial_data_from_json(cfg.f_descriptor);
  return make_builtin(cfg.f_descriptor);
}

int cmd_airy(const RunConfig& cfg, std::ostream&) {
  std::string csv = "x,Ai,Aip,F,W\n";
  for (double x : cfg.xs.points()) {
    csv += num(x) + "," + num(ai(x)) + "," + num(ai_deriv(x, 1)) + "," +
           num(ai_integral_complement(x)) + "," + num(leading_profile_w(x)) + "\n";
  }
  if (cfg.format == "svg") {
    const auto xs = cfg.xs.points();
    std::vector<double> ys;
    for (double x : xs) ys.push_back(ai(x));
    write_artifact(cfg.out_path, svg_line_chart(xs, ys, "x", "Ai(x)"));
  } else {
    write_artifact(cfg.out_path, csv);
  }
  return kOk;
}

std::string samples_to_csv(const std::vector<SolutionSample>& table) {
  std::string csv = "x,t,eta,u,u_leading,residual,error_estimate\n";
  for (const auto& s : table) {
    csv += num(s.x) + "," + num(s.t) + "," + num(s.eta) + "," + num(s.u) + "," +
           num(s.u_leading) + "," + num(s.residual) + "," + num(s.error_estimate) +
           "\n";
  }
  return csv;
}

int cmd_solve(const RunConfig& cfg, std::ostream& diag) {
  const auto f = load_data(cfg);
  const auto table = eval_grid(f, cfg.xs.points(), cfg.ts.points(),
                               SplitConfig{cfg.p}, cfg.quadrature);
  if (cfg.format == "svg") {
    std::vector<double> xs, us;
    for (const auto& s : table)
      if (s.t == table.front().t) {
        xs.push_back(s.x);
        us.push_back(s.u);
      }
    write_artifact(cfg.out_path, svg_line_chart(xs, us, "x", "u(x,t)"));
  } else {
    write_artifact(cfg.out_path, samples_to_csv(table));
  }
  int failures = 0;
  for (const auto& s : table)
    if (!s.ok) {
      ++failures;
      diag << "failed cell x=" << s.x << " t=" << s.t << ": " << s.message << "\n";
    }
  if (failures == static_cast<int>(table.size())) return kNumericalFailure;
  return failures ? kPartialFailure : kOk;
}

int cmd_asym(const RunConfig& cfg, std::ostream&) {
  const auto f = load_data(cfg);
  if (f.tail_coeffs_plus.empty() || f.tail_coeffs_minus.empty())
    throw DomainError("asym: data lacks tail coefficients");
  const double f0p = f.tail_coeffs_plus[0], f0m = f.tail_coeffs_minus[0];
  std::string csv = "eta,W,leading\n";
  std::vector<double> etas = cfg.xs.points(), leads;
  for (double eta : etas) {
    const double w = leading_profile_w(eta);
    leads.push_back((f0p - f0m) * w + 0.5 * (f0p + f0m));
    csv += num(eta) + "," + num(w) + "," + num(leads.back()) + "\n";
  }
  if (cfg.format == "svg")
    write_artifact(cfg.out_path, svg_line_chart(etas, leads, "eta", "leading term"));
  else
    write_artifact(cfg.out_path, csv);
  return kOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream&) {
  const auto f = load_data(cfg);
  const auto rep = estimate_next_order(f, cfg.ts.points(),
                                       {cfg.xs.min, cfg.xs.max}, SplitConfig{cfg.p},
                                       cfg.quadrature);
  write_artifact(cfg.out_path, rep.to_json() + "\n");
  std::vector<double> lt, lr;
  for (size_t i = 0; i < rep.t_ladder.size(); ++i) {
    if (rep.residual_sup[i] <= 0.0) continue;
    lt.push_back(std::log10(rep.t_ladder[i]));
    lr.push_back(std::log10(rep.residual_sup[i]));
  }
  if (lt.size() >= 2 && !cfg.out_path.empty()) {
    write_artifact(swap_extension(cfg.out_path, ".svg"),
                   svg_line_chart(lt, lr, "log10 t", "log10 sup-residual"));
  }
  return kOk;
}

int cmd_selftest(const RunConfig&, std::ostream& diag) {
  const auto rep = run_selftest();
  diag << rep.text;
  return rep.all_passed ? kOk : kNumericalFailure;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> v;
  v.reserve(static_cast<size_t>(std::max(count, 0)));
  if (count == 1) {
    v.push_back(min);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    const double w = static_cast<double>(i) / (count - 1);
    v.push_back(log ? min * std::pow(max / min, w) : min + (max - min) * w);
  }
  return v;
}

void RunConfig::validate() const {
  static const std::vector<std::string> kCommands{"airy", "solve", "asym",
                                                  "converge", "selftest"};
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw DomainError("unknown command: '" + command + "'");
  if (xs.count < 1 || ts.count < 1) throw DomainError("grid counts must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
  if (format != "csv" && format != "json" && format != "svg")
    throw DomainError("format must be csv, json, or svg");
  if (command == "solve" || command == "asym" || command == "converge") {
    if (ts.min <= 0.0 || ts.max <= 0.0) throw DomainError("t values must be positive");
  }
  if (xs.log && (xs.min <= 0.0 || xs.max <= 0.0))
    throw DomainError("log-spaced x grid needs positive endpoints");
  if (quadrature.abs_tol <= 0.0 || quadrature.rel_tol < 0.0)
    throw DomainError("tolerances must be positive");
}

RunConfig RunConfig::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunConfig c;
    c.command = j.value("command", "");
    if (j.contains("f")) {
      if (j["f"].is_string())
        c.f_descriptor = j["f"].get<std::string>();
      else
        c.f_descriptor = j["f"].dump();
    }
    auto grid = [](const nlohmann::json& g, GridSpec d) {
      GridSpec s = d;
      s.min = g.value("min", d.min);
      s.max = g.value("max", d.max);
      s.count = g.value("count", d.count);
      s.log = g.value("log", d.log);
      return s;
    };
    if (j.contains("xs")) c.xs = grid(j["xs"], c.xs);
    if (j.contains("ts")) c.ts = grid(j["ts"], c.ts);
    if (j.contains("quadrature")) {
      const auto& q = j["quadrature"];
      c.quadrature.abs_tol = q.value("abs_tol", c.quadrature.abs_tol);
      c.quadrature.rel_tol = q.value("rel_tol", c.quadrature.rel_tol);
      c.quadrature.max_subdivisions =
          q.value("max_subdivisions", c.quadrature.max_subdivisions);
      c.quadrature.tail_terms = q.value("tail_terms", c.quadrature.tail_terms);
      c.quadrature.osc_window = q.value("osc_window", c.quadrature.osc_window);
    }
    c.p = j.value("p", c.p);
    c.out_path = j.value("out", c.out_path);
    c.format = j.value("format", c.format);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config error: ") + e.what());
  }
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (!f_descriptor.empty()) {
    if (f_descriptor.front() == '{')
      j["f"] = nlohmann::json::parse(f_descriptor);
    else
      j["f"] = f_descriptor;
  }
  j["xs"] = {{"min", xs.min}, {"max", xs.max}, {"count", xs.count}, {"log", xs.log}};
  j["ts"] = {{"min", ts.min}, {"max", ts.max}, {"count", ts.count}, {"log", ts.log}};
  j["quadrature"] = {{"abs_tol", quadrature.abs_tol},
                     {"rel_tol", quadrature.rel_tol},
                     {"max_subdivisions", quadrature.max_subdivisions},
                     {"tail_terms", quadrature.tail_terms},
                     {"osc_window", quadrature.osc_window}};
  j["p"] = p;
  j["out"] = out_path;
  j["format"] = format;
  return j.dump(2);
}

int run(const RunConfig& config, std::ostream& diag) {
  try {
    config.validate();
  } catch (const Error& e) {
    diag << "config error: " << e.what() << "\n";
    return kBadConfig;
  }
  try {
    if (config.command == "airy") return cmd_airy(config, diag);
    if (config.command == "solve") return cmd_solve(config, diag);
    if (config.command == "asym") return cmd_asym(config, diag);
    if (config.command == "converge") return cmd_converge(config, diag);
    return cmd_selftest(config, diag);
  } catch (const AccuracyError& e) {
    diag << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const Error& e) {
    diag << "error: " << e.what() << "\n";
    return kBadConfig;
  }
}

}  // namespace airyconv
