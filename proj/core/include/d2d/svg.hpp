#ifndef D2D_SVG_HPP
#define D2D_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace d2d {

// One plotted series: outage probability on x (linear), normalized throughput
// on y (log10). Points with non-positive throughput are dropped.
struct SvgSeries {
  std::string label;
  std::string color;
  bool line = true;
  bool markers = false;
  std::vector<std::pair<double, double>> points;  // (p, t)
};

// Self-contained SVG plot, no external plotting dependencies.
std::string render_tradeoff_svg(const std::vector<SvgSeries>& series, const std::string& title);

}  // namespace d2d

#endif  // D2D_SVG_HPP
