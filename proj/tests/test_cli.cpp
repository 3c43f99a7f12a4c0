#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "airyconv/cli.hpp"
#include "airyconv/errors.hpp"

using namespace airyconv;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text, size_t* n_cols) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  *n_cols = static_cast<size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("grid spec points") {
  GridSpec g{1.0, 100.0, 3, true};
  const auto p = g.points();
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(10.0));
  CHECK(p[2] == doctest::Approx(100.0));
  GridSpec s{2.0, 9.0, 1, false};
  CHECK(s.points() == std::vector<double>{2.0});
}

TEST_CASE("airy command: schema and profile monotonicity") {
  RunConfig cfg;
  cfg.command = "airy";
  cfg.xs = {-10.0, 5.0, 151, false};
  cfg.out_path = "cli_airy.csv";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kOk);
  size_t n_cols = 0;
  const auto rows = parse_csv(slurp("cli_airy.csv"), &n_cols);
  CHECK(n_cols == 5);
  REQUIRE(rows.size() == 151);
  // F column decreases from the first Airy zero onward (column 3)
  double prev = 1e9;
  for (const auto& r : rows) {
    if (r[0] < -2.33) continue;
    CHECK(r[3] <= prev + 1e-12);
    prev = r[3];
  }
  // W + F = 1/2 on every row
  for (const auto& r : rows) CHECK(r[3] + r[4] == doctest::Approx(0.5).epsilon(1e-14));
  std::remove("cli_airy.csv");
}

TEST_CASE("solve command: step residuals and exit code") {
  RunConfig cfg;
  cfg.command = "solve";
  cfg.f_descriptor = "step";
  cfg.xs = {-6.0, 6.0, 61, false};
  cfg.ts = {1.0, 10.0, 2, true};
  cfg.out_path = "cli_solve.csv";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kOk);
  size_t n_cols = 0;
  const auto rows = parse_csv(slurp("cli_solve.csv"), &n_cols);
  CHECK(n_cols == 7);
  REQUIRE(rows.size() == 61 * 2);
  for (const auto& r : rows) CHECK(std::fabs(r[5]) <= 1e-7);  // residual column
  std::remove("cli_solve.csv");
}

TEST_CASE("asym command: leading-term profile over eta") {
  RunConfig cfg;
  cfg.command = "asym";
  cfg.f_descriptor = "atan";
  cfg.xs = {-3.0, 3.0, 13, false};
  cfg.out_path = "cli_asym.csv";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kOk);
  size_t n_cols = 0;
  const auto rows = parse_csv(slurp("cli_asym.csv"), &n_cols);
  CHECK(n_cols == 3);
  REQUIRE(rows.size() == 13);
  const double pi = 3.141592653589793238462643383279502884;
  for (const auto& r : rows) {
    CHECK(r[2] == doctest::Approx(pi * r[1]).epsilon(1e-12));  // leading = pi W
    CHECK(r[1] >= -0.85);  // W overshoots -1/2 in the oscillatory region
    CHECK(r[1] <= 0.55);
  }
  std::remove("cli_asym.csv");
}

TEST_CASE("determinism: identical configs give byte-identical artifacts") {
  RunConfig cfg;
  cfg.command = "solve";
  cfg.f_descriptor = "atan";
  cfg.xs = {-4.0, 4.0, 9, false};
  cfg.ts = {1.0, 10.0, 2, true};
  cfg.out_path = "cli_det_a.csv";
  std::ostringstream diag;
  REQUIRE(run(cfg, diag) == kOk);
  cfg.out_path = "cli_det_b.csv";
  REQUIRE(run(cfg, diag) == kOk);
  CHECK(slurp("cli_det_a.csv") == slurp("cli_det_b.csv"));
  CHECK(!slurp("cli_det_a.csv").empty());
  std::remove("cli_det_a.csv");
  std::remove("cli_det_b.csv");
}

TEST_CASE("config json round-trip") {
  RunConfig cfg;
  cfg.command = "converge";
  cfg.f_descriptor = "atan";
  cfg.xs = {-2.0, 2.0, 17, false};
  cfg.ts = {100.0, 10000.0, 5, true};
  cfg.p = 0.55;
  cfg.quadrature.abs_tol = 2e-10;
  cfg.format = "json";
  cfg.out_path = "report.json";

  const auto text = cfg.to_json();
  const auto back = RunConfig::from_json(text);
  CHECK(back.command == cfg.command);
  CHECK(back.f_descriptor == cfg.f_descriptor);
  CHECK(back.xs.min == cfg.xs.min);
  CHECK(back.xs.count == cfg.xs.count);
  CHECK(back.ts.log == cfg.ts.log);
  CHECK(back.p == cfg.p);
  CHECK(back.quadrature.abs_tol == cfg.quadrature.abs_tol);
  CHECK(back.format == cfg.format);
  CHECK(back.to_json() == text);  // fixed point
}

TEST_CASE("converge command: report and chart artifacts") {
  RunConfig cfg;
  cfg.command = "converge";
  cfg.f_descriptor = "atan";
  cfg.xs = {-2.0, 2.0, 17, false};
  cfg.ts = {100.0, 10000.0, 5, true};
  cfg.format = "json";
  cfg.out_path = "cli_conv.json";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kOk);
  const auto j = nlohmann::json::parse(slurp("cli_conv.json"));
  const double slope = j["fitted_slope"].get<double>();
  CHECK(slope >= -0.45);
  CHECK(slope <= -0.22);
  const auto svg = slurp("cli_conv.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  std::remove("cli_conv.json");
  std::remove("cli_conv.svg");
}

TEST_CASE("invalid configs exit with code 2") {
  std::ostringstream diag;
  RunConfig bad;
  bad.command = "explode";
  CHECK(run(bad, diag) == kBadConfig);

  RunConfig badp;
  badp.command = "solve";
  badp.f_descriptor = "step";
  badp.p = 1.5;
  CHECK(run(badp, diag) == kBadConfig);

  RunConfig badt;
  badt.command = "solve";
  badt.f_descriptor = "step";
  badt.ts = {-1.0, 10.0, 3, false};
  CHECK(run(badt, diag) == kBadConfig);

  CHECK_THROWS_AS((void)RunConfig::from_json("{nope"), DomainError);
  // wrong field types must surface as config errors, not raw json throws
  CHECK_THROWS_AS((void)RunConfig::from_json(R"({"xs":{"count":"many"}})"), DomainError);
}

TEST_CASE("numerical failure exits with code 3 and identifies the cell") {
  RunConfig cfg;
  cfg.command = "solve";
  cfg.f_descriptor = "atan";
  cfg.xs = {0.5, 0.5, 1, false};
  cfg.ts = {1.0, 1.0, 1, false};
  cfg.quadrature.max_subdivisions = 1;
  cfg.quadrature.abs_tol = 1e-14;
  cfg.quadrature.rel_tol = 1e-14;
  cfg.out_path = "cli_fail.csv";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kNumericalFailure);  // every cell failed
  CHECK(diag.str().find("failed cell") != std::string::npos);
  std::remove("cli_fail.csv");
}

TEST_CASE("partial grid failure exits with code 4 and lists cells") {
  // constant data: only the central quadrature is in play; the tiny-t cell
  // needs many subdivisions, the t = 1 cell converges on the seed panels
  RunConfig cfg;
  cfg.command = "solve";
  cfg.f_descriptor = "constant";
  cfg.xs = {0.5, 0.5, 1, false};
  cfg.ts = {1e-3, 1.0, 2, false};
  cfg.quadrature.max_subdivisions = 6;
  cfg.quadrature.abs_tol = 1e-13;
  cfg.quadrature.rel_tol = 1e-13;
  cfg.out_path = "cli_partial.csv";
  std::ostringstream diag;
  CHECK(run(cfg, diag) == kPartialFailure);
  CHECK(diag.str().find("failed cell") != std::string::npos);
  std::remove("cli_partial.csv");
}
