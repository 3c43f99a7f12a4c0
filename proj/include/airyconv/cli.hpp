#ifndef AIRYCONV_CLI_HPP
#define AIRYCONV_CLI_HPP

#include <ostream>
#include <string>

#include "airyconv/solver.hpp"

namespace airyconv {

// Exit codes of run(): 0 success, 2 invalid configuration, 3 numerical
// failure, 4 partial grid failure (failed cells listed on diagnostics).
enum ExitCode { kOk = 0, kBadConfig = 2, kNumericalFailure = 3, kPartialFailure = 4 };

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int count = 1;
  bool log = false;  // log-spaced when true

  std::vector<double> points() const;
};

struct RunConfig {
  std::string command;        // airy | solve | asym | converge | selftest
  std::string f_descriptor;   // initial-data JSON (see initial_data.hpp)
  GridSpec xs{-10.0, 10.0, 41, false};
  GridSpec ts{1.0, 100.0, 3, true};
  QuadratureConfig quadrature;
  double p = 0.6;
  std::string out_path;       // empty: write to stdout
  std::string format = "csv"; // csv | json | svg

  static RunConfig from_json(const std::string& text);
  std::string to_json() const;
  void validate() const;  // throws DomainError on bad fields
};

// Executes one command; artifacts go to config.out_path (or stdout),
// human diagnostics to diag. Returns an ExitCode value.
int run(const RunConfig& config, std::ostream& diag);

}  // namespace airyconv

#endif  // AIRYCONV_CLI_HPP
