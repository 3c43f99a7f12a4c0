// Command-line front end: evaluate the Airy kernel family, solve the
// dispersive convolution on grids, compare with the large-time leading
// term, run convergence studies, and run the self-test battery.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "airyconv/cli.hpp"
#include "airyconv/errors.hpp"

namespace {

void add_common(CLI::App* sub, airyconv::RunConfig* cfg, std::string* config_path) {
  sub->add_option("--config", *config_path, "JSON config file (overrides other flags)");
  sub->add_option("--f", cfg->f_descriptor,
                  "initial data: builtin name or inline JSON descriptor");
  sub->add_option("--p", cfg->p, "split exponent in (0,1)");
  sub->add_option("--xmin", cfg->xs.min);
  sub->add_option("--xmax", cfg->xs.max);
  sub->add_option("--xn", cfg->xs.count);
  sub->add_option("--tmin", cfg->ts.min);
  sub->add_option("--tmax", cfg->ts.max);
  sub->add_option("--tn", cfg->ts.count);
  sub->add_flag("--tlog", cfg->ts.log, "log-spaced t grid");
  sub->add_option("--out", cfg->out_path, "output path (default: stdout)");
  sub->add_option("--format", cfg->format, "csv | json | svg");
  sub->add_option("--tol", cfg->quadrature.abs_tol, "absolute quadrature tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"airyconv: Airy-kernel convolution solver and asymptotics toolkit"};
  app.require_subcommand(1);

  airyconv::RunConfig cfg;
  std::string config_path;
  for (const char* name : {"airy", "solve", "asym", "converge", "selftest"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, &cfg, &config_path);
    sub->callback([name, &cfg] { cfg.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "config error: cannot open " << config_path << "\n";
        return airyconv::kBadConfig;
      }
      std::stringstream ss;
      ss << is.rdbuf();
      const std::string cmd = cfg.command;
      cfg = airyconv::RunConfig::from_json(ss.str());
      if (cfg.command.empty()) cfg.command = cmd;
    }
  } catch (const airyconv::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return airyconv::kBadConfig;
  }

  return airyconv::run(cfg, std::cerr);
}
