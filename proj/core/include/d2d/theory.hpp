#ifndef D2D_THEORY_HPP
#define D2D_THEORY_HPP

#include <optional>
#include <string>
#include <vector>

namespace d2d {

enum class Regime { small_library, large_library, very_large_library };

std::string regime_label(Regime regime);

struct RegimeReport {
  Regime regime = Regime::small_library;
  double alpha = 0.0;      // (2 - gamma_r) / (1 - gamma_r)
  double ratio = 0.0;      // m / n^alpha
  double threshold = 0.0;  // (gamma_r^gamma_r / (1-gamma_r))^(alpha/(2-gamma_r))
  double eps_small = 0.1;
};

// Library-size regime at finite (n, m): ratio < eps_small -> small,
// ratio <= threshold -> large, otherwise very large.
RegimeReport regime_classify(double n, double m, double gamma_r, double eps_small = 0.1);

// Root of ((1 + 3*delta/2)^2 * rho)^(2-gamma_r)
//          = log(1 + (2-gamma_r) * ((1 + 3*delta/2)^2 * rho)^(2-gamma_r)),
// excluding the degenerate root at 0.
double solve_rho4(double gamma_r, double delta);

// Closed-form tradeoff parameters and the dominant-term constants.
struct TheoryParams {
  double gamma_r = 0.0;
  int m = 0;
  int n = 0;
  int K = 0;
  double C = 1.0;
  double delta = 1.0;
  double rho1 = 0.0;  // >= gamma_r
  double rho2 = 0.0;  // >= ((1-gamma_r)/gamma_r^gamma_r)^(1/(2-gamma_r))
  double rho3 = 0.0;  // >= rho4

  // derived
  double alpha = 0.0;
  double a_gamma = 0.0;
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
  double rho4 = 0.0;

  static TheoryParams make(double gamma_r, int m, int n, int K, double C, double delta,
                           std::optional<double> rho1 = std::nullopt,
                           std::optional<double> rho2 = std::nullopt,
                           std::optional<double> rho3 = std::nullopt);
};

enum class CurveSource { achievable, outer, simulated, baseline_broadcast, baseline_coded };

std::string curve_source_label(CurveSource source);

struct CurvePoint {
  double p = 0.0;    // outage probability
  double t = 0.0;    // throughput, bit/s/Hz
  int case_tag = 0;  // 0 when not applicable (baselines)
  CurveSource source = CurveSource::achievable;
};

// Points ordered by p ascending.
struct TradeoffCurve {
  std::vector<CurvePoint> points;
};

struct TheoryPoint {
  double p = 0.0;
  double t = 0.0;
  int case_tag = 0;
};

// Dominant-term achievable throughput at outage p (four cases pieced over p).
TheoryPoint achievable_at(const TheoryParams& params, double p);

// Case-2 pair parametrized by cluster size:
//   p = 1 - gamma_r^gamma_r * (g_c/m)^(1-gamma_r),
//   t = C * A / (K * m * (1-p)^(1/(1-gamma_r))).
TheoryPoint achievable_case2_point(const TheoryParams& params, double g_c);

// Case-2 formula evaluated directly at an outage level.
double achievable_case2_at(const TheoryParams& params, double p);

// True when the case-3 outage interval is empty at these parameters (it
// collapses when rho2 sits at its lower bound).
bool achievable_case3_empty(const TheoryParams& params);

TradeoffCurve achievable_curve(const TheoryParams& params, const std::vector<double>& p_grid);
TradeoffCurve achievable_curve_from_gc(const TheoryParams& params,
                                       const std::vector<double>& g_c_grid);

// f1(rho) = 16C/(delta^2 rho) * (1 - exp(-((1+3 delta/2)^2 rho)^(2-gamma_r))).
double outer_f1(const TheoryParams& params, double rho);

// Dominant-term outer bound at outage p (three cases pieced over p).
TheoryPoint outer_bound_at(const TheoryParams& params, double p);

TradeoffCurve outer_bound_curve(const TheoryParams& params, const std::vector<double>& p_grid);

// Case-1 parametrization p = 1 - (g_R/n)^(1-gamma_r); points whose p falls
// outside [0, 1] are dropped.
TradeoffCurve outer_bound_curve_from_gR(const TheoryParams& params,
                                        const std::vector<double>& g_R_grid);

// Geometric grid between m^(1/alpha) and (16/delta^2) * n.
std::vector<double> default_gR_grid(const TheoryParams& params, int count);

// Zero-outage order-of-magnitude reference lines with unit leading constant.
struct Baselines {
  double broadcast = 0.0;        // C / n
  double coded_multicast = 0.0;  // C * max(1/n, 1/m)
};

Baselines baseline_throughputs(double n, double m, double C);

}  // namespace d2d

#endif  // D2D_THEORY_HPP
