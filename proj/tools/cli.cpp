#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "d2d/csv.hpp"
#include "d2d/manifest.hpp"
#include "d2d/simulator.hpp"
#include "d2d/svg.hpp"
#include "d2d/theory.hpp"

namespace d2d::cli {
namespace {

// Expands `--config <path>` into the file's key=value pairs as --key=value
// tokens, skipping keys the command line already sets (flags override file).
std::vector<std::string> expand_config_args(std::vector<std::string> args) {
  std::vector<std::string> user_flags;
  for (const std::string& token : args) {
    if (token.rfind("--", 0) != 0) continue;
    user_flags.push_back(token.substr(0, token.find('=')));
  }

  std::size_t i = 0;
  while (i < args.size()) {
    std::string path;
    std::size_t erase = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      erase = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      erase = 1;
    }
    if (erase == 0) {
      ++i;
      continue;
    }

    std::ifstream file(path);
    if (!file) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::vector<std::string> injected;
    std::string line;
    while (std::getline(file, line)) {
      const std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#' || line[start] == ';') continue;
      const std::size_t eq = line.find('=', start);
      if (eq == std::string::npos)
        throw std::invalid_argument("config: malformed line '" + line + "' in " + path);
      std::string key = line.substr(start, eq - start);
      std::string value = line.substr(eq + 1);
      key.erase(key.find_last_not_of(" \t") + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      if (std::find(user_flags.begin(), user_flags.end(), "--" + key) == user_flags.end())
        injected.push_back("--" + key + "=" + value);
    }
    args.erase(args.begin() + static_cast<long>(i),
               args.begin() + static_cast<long>(i + erase));
    args.insert(args.begin() + static_cast<long>(i), injected.begin(), injected.end());
    i += injected.size();
  }
  return args;
}

CachingKind parse_caching(const std::string& text, double& gamma_c) {
  if (text == "optimal") return CachingKind::optimal;
  if (text == "uniform") return CachingKind::uniform;
  if (text.rfind("zipf:", 0) == 0) {
    std::size_t used = 0;
    gamma_c = std::stod(text.substr(5), &used);
    if (used != text.size() - 5)
      throw std::invalid_argument("caching: malformed exponent in '" + text + "'");
    return CachingKind::zipf_heuristic;
  }
  throw std::invalid_argument("caching: expected optimal, uniform or zipf:<gamma_c>, got '" +
                              text + "'");
}

void write_table(const CsvTable& table, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    write_csv(out, table);
  else
    write_csv_file(out_path, table);
}

void write_manifest_file(const std::string& path, const RunManifest& manifest) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("manifest: cannot write '" + path + "'");
  file << serialize_manifest(manifest);
}

std::string join_ints(const std::vector<int>& values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i)
    text += (i ? " " : "") + std::to_string(values[i]);
  return text;
}

struct SimulateArgs {
  int n = 0;
  int m = 0;
  double gamma_r = 0.0;
  std::vector<int> g_c;
  double delta = 0.4;
  double C = 1.0;
  int K = -1;  // <0: derive from delta
  std::string caching = "optimal";
  int trials = 200;
  std::uint64_t seed = 0;
  bool allow_self_hit = false;
  int workers = 1;
  std::string out_path;
  std::string manifest_path;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.command = "simulate";
  manifest.master_seed = args.seed;
  manifest.started_at = utc_timestamp();

  SimConfig base;
  base.n = args.n;
  base.m = args.m;
  base.gamma_r = args.gamma_r;
  base.delta = args.delta;
  base.C = args.C;
  if (args.K >= 0) base.K_override = args.K;
  base.caching = parse_caching(args.caching, base.gamma_c);
  base.trials = args.trials;
  base.seed = args.seed;
  base.allow_self_hit = args.allow_self_hit;
  base.workers = args.workers;

  // surface global configuration errors before the sweep's per-point skips
  build_grid(base.n);
  zipf_pmf(base.gamma_r, base.m);
  if (args.g_c.empty()) throw std::invalid_argument("simulate: at least one --g-c is required");
  base.g_c = args.g_c.front();
  validate_config(base);

  const SweepResult sweep = sweep_cluster_sizes(base, args.g_c);
  for (const SweepSkip& skip : sweep.skipped)
    err << "warning: g_c=" << skip.g_c << " skipped: " << skip.reason << "\n";

  write_table(estimates_table(sweep), args.out_path, out);

  manifest.params = {
      {"n", std::to_string(args.n)},
      {"m", std::to_string(args.m)},
      {"gamma_r", format_double(args.gamma_r)},
      {"g_c", join_ints(args.g_c)},
      {"delta", format_double(args.delta)},
      {"C", format_double(args.C)},
      {"K", args.K >= 0 ? std::to_string(args.K) : "auto"},
      {"caching", args.caching},
      {"trials", std::to_string(args.trials)},
      {"allow_self_hit", args.allow_self_hit ? "1" : "0"},
      {"workers", std::to_string(args.workers)},
      {"out", args.out_path},
  };
  manifest.finished_at = utc_timestamp();
  write_manifest_file(args.manifest_path, manifest);
  return 0;
}

struct TheoryArgs {
  int n = 10000;
  int m = 1000;
  double gamma_r = 0.6;
  int K = -1;  // <0: derive from delta
  double C = 1.0;
  double delta = 1.0;
  double p_min = 0.01;
  double p_max = 0.99;
  int p_points = 200;
  std::vector<int> g_c;
  double rho1 = -1.0;
  double rho2 = -1.0;
  double rho3 = -1.0;
  std::string out_path;
  std::string manifest_path;
};

int cmd_theory(const TheoryArgs& args, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.command = "theory";
  manifest.started_at = utc_timestamp();

  const int K = args.K >= 0 ? args.K : reuse_factor(args.delta);
  const auto opt = [](double v) {
    return v >= 0.0 ? std::optional<double>(v) : std::nullopt;
  };
  const TheoryParams params = TheoryParams::make(args.gamma_r, args.m, args.n, K, args.C,
                                                 args.delta, opt(args.rho1), opt(args.rho2),
                                                 opt(args.rho3));

  const RegimeReport regime = regime_classify(args.n, args.m, args.gamma_r);
  if (regime.regime != Regime::small_library)
    err << "warning: parameters fall in the " << regime_label(regime.regime)
        << " library regime (m/n^alpha = " << format_double(regime.ratio)
        << "); the curves assume the small regime\n";
  if (achievable_case3_empty(params))
    err << "warning: the case-3 outage interval is empty at these parameters\n";

  if (args.p_points < 0) throw std::invalid_argument("theory: p-points must be >= 0");
  if (args.p_points > 0 && !(args.p_min > 0.0 && args.p_min <= args.p_max && args.p_max < 1.0))
    throw std::invalid_argument("theory: need 0 < p-min <= p-max < 1");

  std::vector<double> p_grid;
  p_grid.reserve(static_cast<std::size_t>(args.p_points));
  for (int i = 0; i < args.p_points; ++i) {
    const double frac = args.p_points == 1
                            ? 0.0
                            : static_cast<double>(i) / static_cast<double>(args.p_points - 1);
    p_grid.push_back(args.p_min + frac * (args.p_max - args.p_min));
  }

  TradeoffCurve curve = achievable_curve(params, p_grid);
  for (int g_c : args.g_c) {
    const TheoryPoint tp = achievable_case2_point(params, static_cast<double>(g_c));
    curve.points.push_back({tp.p, tp.t, tp.case_tag, CurveSource::achievable});
  }
  const TradeoffCurve outer = outer_bound_curve(params, p_grid);
  curve.points.insert(curve.points.end(), outer.points.begin(), outer.points.end());

  if (!curve.points.empty()) {
    const Baselines baselines = baseline_throughputs(args.n, args.m, args.C);
    curve.points.push_back({0.0, baselines.broadcast, 0, CurveSource::baseline_broadcast});
    curve.points.push_back({0.0, baselines.coded_multicast, 0, CurveSource::baseline_coded});
  }

  std::stable_sort(curve.points.begin(), curve.points.end(),
                   [](const CurvePoint& a, const CurvePoint& b) {
                     if (a.source != b.source) return a.source < b.source;
                     return a.p < b.p;
                   });

  write_table(curve_table(curve, params), args.out_path, out);

  manifest.params = {
      {"n", std::to_string(args.n)},
      {"m", std::to_string(args.m)},
      {"gamma_r", format_double(args.gamma_r)},
      {"K", std::to_string(K)},
      {"C", format_double(args.C)},
      {"delta", format_double(args.delta)},
      {"p_min", format_double(args.p_min)},
      {"p_max", format_double(args.p_max)},
      {"p_points", std::to_string(args.p_points)},
      {"g_c", join_ints(args.g_c)},
      {"out", args.out_path},
  };
  manifest.finished_at = utc_timestamp();
  write_manifest_file(args.manifest_path, manifest);
  return 0;
}

struct CompareArgs {
  std::string sim_path;
  std::string theory_path;
  std::string source = "achievable";
  double C = 1.0;
  std::string svg_path;
  std::string summary_path;
  std::string manifest_path;
};

struct XY {
  double p = 0.0;
  double t = 0.0;
};

bool has_column(const CsvTable& table, const std::string& name) {
  return std::find(table.header.begin(), table.header.end(), name) != table.header.end();
}

// Both comparison inputs accept either schema, so a file can be compared
// against itself (all relative errors 0).
std::vector<XY> sim_points(const CsvTable& table, double C, const std::string& source) {
  std::vector<XY> pts;
  if (has_column(table, "p_hat")) {
    const std::size_t p_col = table.column("p_hat");
    const std::size_t t_col = table.column("tmin_hat");
    const std::size_t status_col = table.column("status");
    for (const auto& row : table.rows) {
      if (row[status_col] != "ok") continue;
      pts.push_back({std::stod(row[p_col]), std::stod(row[t_col]) / C});
    }
  } else {
    const std::size_t src_col = table.column("source_tag");
    const std::size_t p_col = table.column("p");
    const std::size_t t_col = table.column("t_normalized");
    for (const auto& row : table.rows) {
      if (row[src_col] != source) continue;
      pts.push_back({std::stod(row[p_col]), std::stod(row[t_col])});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const XY& a, const XY& b) { return a.p < b.p; });
  return pts;
}

std::vector<XY> theory_points(const CsvTable& table, const std::string& source, double C) {
  std::vector<XY> pts;
  if (has_column(table, "source_tag")) {
    const std::size_t src_col = table.column("source_tag");
    const std::size_t p_col = table.column("p");
    const std::size_t t_col = table.column("t_normalized");
    for (const auto& row : table.rows) {
      if (row[src_col] != source) continue;
      pts.push_back({std::stod(row[p_col]), std::stod(row[t_col])});
    }
  } else {
    const std::size_t p_col = table.column("p_hat");
    const std::size_t t_col = table.column("tmin_hat");
    const std::size_t status_col = table.column("status");
    for (const auto& row : table.rows) {
      if (row[status_col] != "ok") continue;
      pts.push_back({std::stod(row[p_col]), std::stod(row[t_col]) / C});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const XY& a, const XY& b) { return a.p < b.p; });
  return pts;
}

// Piecewise-linear interpolation in p; callers guarantee p is inside range.
double interpolate(const std::vector<XY>& curve, double p) {
  if (curve.size() == 1) return curve.front().t;
  auto hi = std::lower_bound(curve.begin(), curve.end(), p,
                             [](const XY& a, double value) { return a.p < value; });
  if (hi == curve.begin()) return hi->t;
  if (hi == curve.end()) return (hi - 1)->t;
  const auto lo = hi - 1;
  if (hi->p <= lo->p) return lo->t;  // duplicate abscissa
  const double w = (p - lo->p) / (hi->p - lo->p);
  return lo->t + w * (hi->t - lo->t);
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.command = "compare";
  manifest.started_at = utc_timestamp();

  const CsvTable sim_table = read_csv_file(args.sim_path);
  const CsvTable theory_table = read_csv_file(args.theory_path);
  const std::vector<XY> sim = sim_points(sim_table, args.C, args.source);
  const std::vector<XY> theory = theory_points(theory_table, args.source, args.C);
  if (sim.empty()) throw std::invalid_argument("compare: no usable simulated rows");
  if (theory.empty())
    throw std::invalid_argument("compare: no theory rows with source_tag=" + args.source);

  constexpr double kEps = 1e-12;
  if (sim.back().p < theory.front().p - kEps || sim.front().p > theory.back().p + kEps)
    throw std::invalid_argument(
        "compare: disjoint p ranges (simulated [" + format_double(sim.front().p) + ", " +
        format_double(sim.back().p) + "], theory [" + format_double(theory.front().p) + ", " +
        format_double(theory.back().p) + "])");

  CsvTable summary;
  summary.header = {"source", "p", "t_sim", "t_theory", "rel_err"};
  double max_rel = 0.0;
  int matched = 0;
  for (const XY& point : sim) {
    if (point.p < theory.front().p - kEps || point.p > theory.back().p + kEps) continue;
    const double t_theory = interpolate(theory, point.p);
    if (t_theory <= 0.0) continue;
    const double rel = std::abs(point.t - t_theory) / t_theory;
    max_rel = std::max(max_rel, rel);
    ++matched;
    summary.rows.push_back({args.source, format_double(point.p), format_double(point.t),
                            format_double(t_theory), format_double(rel)});
  }
  if (matched == 0)
    throw std::invalid_argument("compare: no simulated points inside the theory p-range");

  if (!args.summary_path.empty()) write_csv_file(args.summary_path, summary);

  if (!args.svg_path.empty()) {
    std::vector<SvgSeries> series;
    const char* colors[] = {"#1f6fb4", "#c23b22", "#6a9a23", "#8a6fb4", "#777777"};
    std::size_t color_idx = 0;
    std::vector<std::string> sources;
    if (has_column(theory_table, "source_tag")) {
      const std::size_t src_col = theory_table.column("source_tag");
      for (const auto& row : theory_table.rows)
        if (std::find(sources.begin(), sources.end(), row[src_col]) == sources.end())
          sources.push_back(row[src_col]);
    } else {
      sources.push_back(args.source);
    }
    double p_lo = sim.front().p, p_hi = sim.back().p;
    for (const XY& xy : theory) {
      p_lo = std::min(p_lo, xy.p);
      p_hi = std::max(p_hi, xy.p);
    }
    for (const std::string& src : sources) {
      std::vector<XY> pts = theory_points(theory_table, src, args.C);
      SvgSeries s;
      s.label = src;
      s.color = colors[color_idx++ % 5];
      if (src.rfind("baseline", 0) == 0 && pts.size() == 1) {
        // stretch a single zero-outage baseline into a reference line
        s.points = {{p_lo, pts.front().t}, {p_hi, pts.front().t}};
      } else {
        for (const XY& xy : pts) s.points.push_back({xy.p, xy.t});
      }
      series.push_back(std::move(s));
    }
    SvgSeries sim_series;
    sim_series.label = "simulated";
    sim_series.color = "#111111";
    sim_series.line = false;
    sim_series.markers = true;
    for (const XY& xy : sim) sim_series.points.push_back({xy.p, xy.t});
    series.push_back(std::move(sim_series));
    std::ofstream svg(args.svg_path, std::ios::binary);
    if (!svg) throw std::runtime_error("compare: cannot write '" + args.svg_path + "'");
    svg << render_tradeoff_svg(series, "min throughput per user vs outage probability");
  }

  if (args.summary_path.empty()) write_csv(out, summary);
  out << "matched_points=" << matched << " max_rel_err=" << format_double(max_rel) << "\n";
  (void)err;

  manifest.params = {
      {"sim", args.sim_path},        {"theory", args.theory_path},
      {"source", args.source},      {"C", format_double(args.C)},
      {"out_svg", args.svg_path},   {"out_summary", args.summary_path},
  };
  manifest.finished_at = utc_timestamp();
  write_manifest_file(args.manifest_path, manifest);
  return 0;
}

struct OracleArgs {
  int m = 2;
  double gamma_r = 0.5;
  int g_c = 4;
  double resolution = 0.01;
  std::string out_path;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const PopularityModel pop = zipf_pmf(args.gamma_r, args.m);
  const CachingDistribution oracle = brute_force_caching_oracle(pop, args.g_c, args.resolution);

  std::optional<CachingDistribution> closed;
  if (args.g_c >= 3) closed = optimal_caching(pop, args.g_c);
  else
    err << "note: g_c=" << args.g_c << " has no closed form; grid argmax only\n";

  CsvTable table;
  table.header = {"f", "p_r", "pc_optimal", "pc_oracle"};
  double max_diff = 0.0;
  for (int f = 1; f <= args.m; ++f) {
    std::string pc_closed;
    if (closed) {
      pc_closed = format_double(closed->at(f));
      max_diff = std::max(max_diff, std::abs(closed->at(f) - oracle.at(f)));
    }
    table.rows.push_back(
        {std::to_string(f), format_double(pop.at(f)), pc_closed, format_double(oracle.at(f))});
  }
  write_table(table, args.out_path, out);

  out << "hit_oracle=" << format_double(hit_probability(pop, oracle, args.g_c));
  if (closed)
    out << " hit_optimal=" << format_double(hit_probability(pop, *closed, args.g_c))
        << " max_coord_diff=" << format_double(max_diff);
  out << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Throughput-outage calculator and Monte Carlo simulator for one-hop "
               "device-to-device caching networks"};
  app.name("d2dcache");
  app.set_version_flag("--version", std::string("d2dcache ") + kToolVersion);
  app.require_subcommand(1);

  std::string config_placeholder;  // consumed by expand_config_args before parsing
  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo tradeoff sweep over cluster sizes");
  sim->add_option("--config", config_placeholder,
                  "flat key=value config file; flags override it");
  sim->add_option("--n", sim_args.n, "node count (perfect square)")->required();
  sim->add_option("--m", sim_args.m, "library size")->required();
  sim->add_option("--gamma-r", sim_args.gamma_r, "Zipf request exponent in [0,1)")->required();
  sim->add_option("--g-c", sim_args.g_c, "cluster size; repeat to sweep")->required();
  sim->add_option("--delta", sim_args.delta, "interference control parameter")
      ->capture_default_str();
  sim->add_option("--C", sim_args.C, "link rate, bit/s/Hz")->capture_default_str();
  sim->add_option("--K", sim_args.K, "reuse factor override (default: derived from delta)");
  sim->add_option("--caching", sim_args.caching, "optimal | uniform | zipf:<gamma_c>")
      ->capture_default_str();
  sim->add_option("--trials", sim_args.trials, "Monte Carlo trials per point")
      ->capture_default_str();
  sim->add_option("--seed", sim_args.seed, "master seed (required for reproducibility)")
      ->required();
  sim->add_flag("--allow-self-hit", sim_args.allow_self_hit,
                "count a user's own cache as service");
  sim->add_option("--workers", sim_args.workers, "worker threads (does not affect results)")
      ->capture_default_str();
  sim->add_option("--out", sim_args.out_path, "output CSV path (default: stdout)");
  sim->add_option("--manifest", sim_args.manifest_path, "write a run manifest here");

  TheoryArgs theory_args;
  CLI::App* theory = app.add_subcommand("theory", "closed-form tradeoff curves and baselines");
  theory->add_option("--config", config_placeholder,
                     "flat key=value config file; flags override it");
  theory->add_option("--n", theory_args.n, "node count")->capture_default_str();
  theory->add_option("--m", theory_args.m, "library size")->capture_default_str();
  theory->add_option("--gamma-r", theory_args.gamma_r, "Zipf request exponent in (0,1)")
      ->capture_default_str();
  theory->add_option("--K", theory_args.K, "reuse factor (default: derived from delta)");
  theory->add_option("--C", theory_args.C, "link rate, bit/s/Hz")->capture_default_str();
  theory->add_option("--delta", theory_args.delta, "interference control parameter")
      ->capture_default_str();
  theory->add_option("--p-min", theory_args.p_min, "grid start")->capture_default_str();
  theory->add_option("--p-max", theory_args.p_max, "grid end")->capture_default_str();
  theory->add_option("--p-points", theory_args.p_points, "grid size (0: header-only CSV)")
      ->capture_default_str();
  theory->add_option("--g-c", theory_args.g_c,
                     "emit the case-2 point for this cluster size; repeatable");
  theory->add_option("--rho1", theory_args.rho1, "case-1 parameter (default: gamma_r)");
  theory->add_option("--rho2", theory_args.rho2, "case-3 parameter (default: lower bound)");
  theory->add_option("--rho3", theory_args.rho3, "outer case-2 parameter (default: rho4)");
  theory->add_option("--out", theory_args.out_path, "output CSV path (default: stdout)");
  theory->add_option("--manifest", theory_args.manifest_path, "write a run manifest here");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "simulated-vs-theory comparison and plot");
  compare->add_option("--sim", compare_args.sim_path, "simulate CSV")->required();
  compare->add_option("--theory", compare_args.theory_path, "theory CSV")->required();
  compare->add_option("--source", compare_args.source, "theory source_tag to compare against")
      ->capture_default_str();
  compare->add_option("--C", compare_args.C, "link rate used by the simulation")
      ->capture_default_str();
  compare->add_option("--out-svg", compare_args.svg_path, "SVG plot path");
  compare->add_option("--out-summary", compare_args.summary_path,
                      "relative-error summary CSV path (default: stdout)");
  compare->add_option("--manifest", compare_args.manifest_path, "write a run manifest here");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force caching argmax vs closed form");
  oracle->add_option("--m", oracle_args.m, "library size (max 6)")->required();
  oracle->add_option("--gamma-r", oracle_args.gamma_r, "Zipf request exponent")->required();
  oracle->add_option("--g-c", oracle_args.g_c, "cluster size")->required();
  oracle->add_option("--resolution", oracle_args.resolution, "simplex grid step")
      ->capture_default_str();
  oracle->add_option("--out", oracle_args.out_path, "output CSV path (default: stdout)");

  try {
    args = expand_config_args(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const std::invalid_argument& e) {
    err << "error: validation: " << e.what() << "\n";
    return 1;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: validation: " << e.what() << "\n";
    return 1;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_args, out, err);
    if (theory->parsed()) return cmd_theory(theory_args, out, err);
    if (compare->parsed()) return cmd_compare(compare_args, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_args, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: validation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: runtime: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace d2d::cli
