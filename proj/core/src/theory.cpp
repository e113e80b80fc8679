#include "d2d/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace d2d {
namespace {

void require_gamma_open_unit(double gamma_r, const char* where) {
  if (!(gamma_r > 0.0 && gamma_r < 1.0))
    throw std::invalid_argument(std::string(where) + ": gamma_r must lie in (0, 1), got " +
                                std::to_string(gamma_r));
}

}  // namespace

std::string regime_label(Regime regime) {
  switch (regime) {
    case Regime::small_library:
      return "small";
    case Regime::large_library:
      return "large";
    case Regime::very_large_library:
      return "very_large";
  }
  return "small";
}

std::string curve_source_label(CurveSource source) {
  switch (source) {
    case CurveSource::achievable:
      return "achievable";
    case CurveSource::outer:
      return "outer";
    case CurveSource::simulated:
      return "simulated";
    case CurveSource::baseline_broadcast:
      return "baseline_broadcast";
    case CurveSource::baseline_coded:
      return "baseline_coded";
  }
  return "achievable";
}

RegimeReport regime_classify(double n, double m, double gamma_r, double eps_small) {
  require_gamma_open_unit(gamma_r, "regime_classify");
  if (n < 1.0 || m < 1.0) throw std::invalid_argument("regime_classify: need n, m >= 1");
  if (eps_small <= 0.0) throw std::invalid_argument("regime_classify: eps_small must be > 0");

  RegimeReport report;
  report.alpha = (2.0 - gamma_r) / (1.0 - gamma_r);
  report.ratio = m / std::pow(n, report.alpha);
  report.threshold = std::pow(std::pow(gamma_r, gamma_r) / (1.0 - gamma_r),
                              report.alpha / (2.0 - gamma_r));
  report.eps_small = eps_small;
  if (report.ratio < eps_small)
    report.regime = Regime::small_library;
  else if (report.ratio <= report.threshold)
    report.regime = Regime::large_library;
  else
    report.regime = Regime::very_large_library;
  return report;
}

double solve_rho4(double gamma_r, double delta) {
  require_gamma_open_unit(gamma_r, "solve_rho4");
  if (delta <= 0.0) throw std::invalid_argument("solve_rho4: delta must be > 0");

  // Substituting y = ((1+3 delta/2)^2 rho)^(2-gamma_r) reduces the fixed point
  // to y = log(1 + c*y) with c = 2 - gamma_r > 1, which has exactly one
  // strictly positive root (0 is always a root and is excluded).
  const double c = 2.0 - gamma_r;
  const auto residual = [c](double y) { return y - std::log1p(c * y); };

  double lo = 1e-12;  // residual < 0 here: y - log1p(c y) ~ (1 - c) y
  double hi = 1.0;
  int guard = 0;
  while (residual(hi) <= 0.0) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("solve_rho4: bracket expansion failed");
  }
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-16 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double y = 0.5 * (lo + hi);
  if (std::abs(residual(y)) >= 1e-10)
    throw std::runtime_error("solve_rho4: residual above tolerance");

  const double beta = (1.0 + 1.5 * delta) * (1.0 + 1.5 * delta);
  return std::pow(y, 1.0 / c) / beta;
}

TheoryParams TheoryParams::make(double gamma_r, int m, int n, int K, double C, double delta,
                                std::optional<double> rho1, std::optional<double> rho2,
                                std::optional<double> rho3) {
  require_gamma_open_unit(gamma_r, "TheoryParams");
  if (m < 1 || n < 1) throw std::invalid_argument("TheoryParams: need n, m >= 1");
  if (K < 1) throw std::invalid_argument("TheoryParams: K must be >= 1");
  if (C <= 0.0) throw std::invalid_argument("TheoryParams: C must be > 0");
  if (delta <= 0.0) throw std::invalid_argument("TheoryParams: delta must be > 0");

  TheoryParams p;
  p.gamma_r = gamma_r;
  p.m = m;
  p.n = n;
  p.K = K;
  p.C = C;
  p.delta = delta;

  const double g = gamma_r;
  const double gg = std::pow(g, g);
  p.alpha = (2.0 - g) / (1.0 - g);
  p.A = std::pow(g, g / (1.0 - g));
  p.a_gamma = gg * std::pow((1.0 - g) / gg, 1.0 / p.alpha);

  const double rho1_min = g;
  const double rho2_min = std::pow((1.0 - g) / gg, 1.0 / (2.0 - g));
  p.rho1 = rho1.value_or(rho1_min);
  p.rho2 = rho2.value_or(rho2_min);
  if (p.rho1 < rho1_min - 1e-12)
    throw std::invalid_argument("TheoryParams: rho1 must be >= gamma_r");
  if (p.rho2 < rho2_min - 1e-12)
    throw std::invalid_argument("TheoryParams: rho2 below its lower bound");

  p.B = gg * std::pow(p.rho2, 1.0 - g) / (1.0 + gg * std::pow(p.rho2, 2.0 - g));
  p.D = p.a_gamma / (1.0 + p.a_gamma * std::pow((1.0 - g) / gg, 1.0 / (2.0 - g)));

  p.rho4 = solve_rho4(g, delta);
  p.rho3 = rho3.value_or(p.rho4);
  if (p.rho3 < p.rho4 - 1e-12)
    throw std::invalid_argument("TheoryParams: rho3 must be >= rho4");
  return p;
}

TheoryPoint achievable_at(const TheoryParams& params, double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("achievable_at: p must lie in (0, 1]");

  const double g = params.gamma_r;
  const double gg = std::pow(g, g);
  const double m = static_cast<double>(params.m);
  const double m_pow = std::pow(m, -1.0 / params.alpha);
  const double scale = params.C / static_cast<double>(params.K);

  const double p_case2_lo = 1.0 - g;  // case-1/case-2 boundary
  const double p_case3_lo = 1.0 - gg * std::pow(params.rho2, 1.0 - g) * m_pow;
  const double p_case4_lo = 1.0 - params.a_gamma * m_pow;

  TheoryPoint point;
  point.p = p;
  if (p >= p_case4_lo) {
    point.case_tag = 4;
    point.t = scale * params.D * m_pow;
  } else if (p >= p_case3_lo) {
    point.case_tag = 3;
    point.t = scale * params.B * m_pow;
  } else if (p >= p_case2_lo) {
    point.case_tag = 2;
    point.t = achievable_case2_at(params, p);
  } else {
    point.case_tag = 1;
    const double rho1 = g - std::log(p / (1.0 - g));  // p = (1-g) e^(g - rho1)
    point.t = scale / (rho1 * m);
  }
  return point;
}

double achievable_case2_at(const TheoryParams& params, double p) {
  if (!(p < 1.0)) throw std::invalid_argument("achievable_case2_at: p must be < 1");
  const double g = params.gamma_r;
  return params.C * params.A /
         (static_cast<double>(params.K) * static_cast<double>(params.m) *
          std::pow(1.0 - p, 1.0 / (1.0 - g)));
}

TheoryPoint achievable_case2_point(const TheoryParams& params, double g_c) {
  if (!(g_c > 0.0 && g_c <= static_cast<double>(params.m)))
    throw std::invalid_argument("achievable_case2_point: need 0 < g_c <= m");
  const double g = params.gamma_r;
  TheoryPoint point;
  point.case_tag = 2;
  point.p = 1.0 - std::pow(g, g) * std::pow(g_c / static_cast<double>(params.m), 1.0 - g);
  point.t = achievable_case2_at(params, point.p);
  return point;
}

bool achievable_case3_empty(const TheoryParams& params) {
  const double g = params.gamma_r;
  const double gg = std::pow(g, g);
  const double m_pow = std::pow(static_cast<double>(params.m), -1.0 / params.alpha);
  const double p_case3_lo = 1.0 - gg * std::pow(params.rho2, 1.0 - g) * m_pow;
  const double p_case4_lo = 1.0 - params.a_gamma * m_pow;
  return p_case3_lo >= p_case4_lo;
}

TradeoffCurve achievable_curve(const TheoryParams& params, const std::vector<double>& p_grid) {
  TradeoffCurve curve;
  curve.points.reserve(p_grid.size());
  for (double p : p_grid) {
    const TheoryPoint tp = achievable_at(params, p);
    curve.points.push_back({tp.p, tp.t, tp.case_tag, CurveSource::achievable});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.p < b.p; });
  return curve;
}

TradeoffCurve achievable_curve_from_gc(const TheoryParams& params,
                                       const std::vector<double>& g_c_grid) {
  TradeoffCurve curve;
  curve.points.reserve(g_c_grid.size());
  for (double g_c : g_c_grid) {
    const TheoryPoint tp = achievable_case2_point(params, g_c);
    curve.points.push_back({tp.p, tp.t, tp.case_tag, CurveSource::achievable});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.p < b.p; });
  return curve;
}

double outer_f1(const TheoryParams& params, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("outer_f1: rho must be > 0");
  const double beta = (1.0 + 1.5 * params.delta) * (1.0 + 1.5 * params.delta);
  const double expct = std::pow(beta * rho, 2.0 - params.gamma_r);
  return 16.0 * params.C / (params.delta * params.delta * rho) * (1.0 - std::exp(-expct));
}

TheoryPoint outer_bound_at(const TheoryParams& params, double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("outer_bound_at: p must lie in (0, 1]");

  const double g = params.gamma_r;
  const double m = static_cast<double>(params.m);
  const double m_pow = std::pow(m, -1.0 / params.alpha);
  const double dd = params.delta * params.delta;

  const double p_case2_lo = 1.0 - std::pow(params.rho3, 1.0 - g) * m_pow;
  const double p_case3_lo = 1.0 - std::pow(params.rho4, 1.0 - g) * m_pow;

  TheoryPoint point;
  point.p = p;
  const double range_term = 16.0 * params.C / (dd * m * std::pow(1.0 - p, 1.0 / (1.0 - g)));
  if (p >= p_case3_lo) {
    point.case_tag = 3;
    point.t = outer_f1(params, params.rho4) * m_pow;
  } else if (p >= p_case2_lo) {
    point.case_tag = 2;
    point.t = std::min(range_term, outer_f1(params, params.rho3) * m_pow);
  } else {
    point.case_tag = 1;
    point.t = range_term;
  }
  return point;
}

TradeoffCurve outer_bound_curve(const TheoryParams& params, const std::vector<double>& p_grid) {
  TradeoffCurve curve;
  curve.points.reserve(p_grid.size());
  for (double p : p_grid) {
    const TheoryPoint tp = outer_bound_at(params, p);
    curve.points.push_back({tp.p, tp.t, tp.case_tag, CurveSource::outer});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.p < b.p; });
  return curve;
}

TradeoffCurve outer_bound_curve_from_gR(const TheoryParams& params,
                                        const std::vector<double>& g_R_grid) {
  const double g = params.gamma_r;
  const double g_R_max = 16.0 * static_cast<double>(params.n) / (params.delta * params.delta);
  TradeoffCurve curve;
  for (double g_R : g_R_grid) {
    if (g_R <= 0.0 || g_R > g_R_max * (1.0 + 1e-12))
      throw std::invalid_argument("outer_bound_curve_from_gR: g_R outside (0, 16n/delta^2]");
    const double p = 1.0 - std::pow(g_R / static_cast<double>(params.n), 1.0 - g);
    if (p <= 0.0 || p > 1.0) continue;  // finite-size parametrization can leave [0,1]
    const TheoryPoint tp = outer_bound_at(params, p);
    curve.points.push_back({tp.p, tp.t, tp.case_tag, CurveSource::outer});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.p < b.p; });
  return curve;
}

std::vector<double> default_gR_grid(const TheoryParams& params, int count) {
  if (count < 2) throw std::invalid_argument("default_gR_grid: need at least 2 points");
  const double lo = std::pow(static_cast<double>(params.m), 1.0 / params.alpha);
  const double hi = 16.0 * static_cast<double>(params.n) / (params.delta * params.delta);
  if (lo >= hi) throw std::invalid_argument("default_gR_grid: empty range");
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  return grid;
}

Baselines baseline_throughputs(double n, double m, double C) {
  if (n < 1.0 || m < 1.0) throw std::invalid_argument("baseline_throughputs: need n, m >= 1");
  if (C <= 0.0) throw std::invalid_argument("baseline_throughputs: C must be > 0");
  Baselines b;
  b.broadcast = C / n;
  b.coded_multicast = C * std::max(1.0 / n, 1.0 / m);
  return b;
}

}  // namespace d2d
