#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "d2d/csv.hpp"
#include "d2d/manifest.hpp"
#include "d2d/svg.hpp"

using namespace d2d;

TEST_CASE("format_double: 12 significant digits") {
  CHECK(format_double(0.0001) == "0.0001");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(2500.0) == "2500");
}

TEST_CASE("csv: round trip preserves every field") {
  CsvTable table;
  table.header = {"a", "b", "c"};
  table.rows = {{"1", "x", "0.333333333333"}, {"", "skipped: n/g_c is not a perfect square", ""}};

  std::stringstream buffer;
  write_csv(buffer, table);
  const CsvTable back = read_csv(buffer);
  CHECK(back.header == table.header);
  CHECK(back.rows == table.rows);
  CHECK(back.column("b") == 1);
  CHECK_THROWS_AS(back.column("missing"), std::runtime_error);
}

TEST_CASE("csv: malformed input names the row") {
  std::stringstream bad("a,b\n1,2\n1,2,3\n");
  try {
    read_csv(bad);
    FAIL("expected to throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  std::stringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), std::runtime_error);
}

TEST_CASE("csv: the simulate schema is frozen") {
  const std::vector<std::string> expected = {
      "n",      "m",        "gamma_r",   "g_c",        "Delta",           "K",
      "K_overridden", "caching_kind", "trials", "seed", "p_hat", "p_ci95",
      "tmin_hat", "tmin_ci95", "tmin_diag_minuser", "analytic_outage", "status"};
  const CsvTable table = estimates_table(SweepResult{});
  CHECK(table.header == expected);
}

TEST_CASE("csv: typed tables survive a round trip") {
  SimConfig cfg;
  cfg.n = 16;
  cfg.m = 4;
  cfg.gamma_r = 0.3;
  cfg.g_c = 4;
  cfg.trials = 5;
  cfg.seed = 77;
  SweepResult sweep = sweep_cluster_sizes(cfg, {4, 3});
  REQUIRE(sweep.points.size() == 1);
  REQUIRE(sweep.skipped.size() == 1);

  std::stringstream buffer;
  write_csv(buffer, estimates_table(sweep));
  const CsvTable back = read_csv(buffer);
  REQUIRE(back.rows.size() == 2);
  CHECK(std::stod(back.rows[0][back.column("p_hat")]) ==
        doctest::Approx(sweep.points[0].p_hat).epsilon(1e-11));
  CHECK(back.rows[0][back.column("caching_kind")] == "optimal");
  CHECK(back.rows[1][back.column("status")].rfind("skipped:", 0) == 0);

  const TheoryParams params = TheoryParams::make(0.6, 1000, 10000, 4, 1.0, 1.0);
  const TradeoffCurve curve = achievable_curve(params, {0.3, 0.5, 0.9});
  std::stringstream curve_buffer;
  write_csv(curve_buffer, curve_table(curve, params));
  const CsvTable curve_back = read_csv(curve_buffer);
  REQUIRE(curve_back.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::stod(curve_back.rows[i][curve_back.column("p")]) ==
          doctest::Approx(curve.points[i].p).epsilon(1e-11));
    CHECK(std::stod(curve_back.rows[i][curve_back.column("t_normalized")]) ==
          doctest::Approx(curve.points[i].t).epsilon(1e-11));
  }
}

TEST_CASE("manifest: serialization round trip is exact") {
  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.command = "simulate";
  manifest.master_seed = 123456789012345ull;
  manifest.params = {{"n", "10000"}, {"g_c", "4 16 25"}, {"out", "runs/fig3.csv"}};
  manifest.started_at = "2026-08-08T10:00:00Z";
  manifest.finished_at = "2026-08-08T10:03:21Z";

  const RunManifest back = parse_manifest(serialize_manifest(manifest));
  CHECK(back == manifest);

  CHECK_THROWS_AS(parse_manifest("no equals sign"), std::runtime_error);
  CHECK_THROWS_AS(parse_manifest("mystery=1"), std::runtime_error);
}

TEST_CASE("svg: renders series and rejects empty plots") {
  SvgSeries theory;
  theory.label = "achievable";
  theory.color = "#1f6fb4";
  theory.points = {{0.1, 1e-4}, {0.5, 1e-3}, {0.9, 1e-2}};
  SvgSeries sim;
  sim.label = "simulated";
  sim.color = "#111111";
  sim.line = false;
  sim.markers = true;
  sim.points = {{0.3, 2e-4}, {0.7, 3e-3}};

  const std::string svg = render_tradeoff_svg({theory, sim}, "tradeoff");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
  CHECK(svg.find("achievable") != std::string::npos);
  CHECK(svg.find("tradeoff") != std::string::npos);

  SvgSeries zeros;
  zeros.label = "empty";
  zeros.color = "#000000";
  zeros.points = {{0.1, 0.0}};
  CHECK_THROWS_AS(render_tradeoff_svg({zeros}, "nothing"), std::runtime_error);
}
