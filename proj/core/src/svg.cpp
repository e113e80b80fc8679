#include "d2d/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "d2d/csv.hpp"

namespace d2d {
namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 40.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

struct Frame {
  double x_lo, x_hi;        // outage range
  double y_lo, y_hi;        // log10 throughput range

  double px(double p) const {
    return kLeft + (p - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  }
  double py(double t) const {
    const double ly = std::log10(t);
    return kHeight - kBottom - (ly - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  }
};

}  // namespace

std::string render_tradeoff_svg(const std::vector<SvgSeries>& series, const std::string& title) {
  double x_lo = 1e300, x_hi = -1e300, t_lo = 1e300, t_hi = -1e300;
  for (const auto& s : series)
    for (const auto& [p, t] : s.points) {
      if (t <= 0.0) continue;  // log scale
      x_lo = std::min(x_lo, p);
      x_hi = std::max(x_hi, p);
      t_lo = std::min(t_lo, t);
      t_hi = std::max(t_hi, t);
    }
  if (x_lo > x_hi) throw std::runtime_error("svg: no positive-throughput points to plot");
  if (x_hi - x_lo < 1e-9) {
    x_lo -= 0.05;
    x_hi += 0.05;
  }
  Frame frame{x_lo, x_hi, std::floor(std::log10(t_lo)), std::ceil(std::log10(t_hi))};
  if (frame.y_hi - frame.y_lo < 1.0) frame.y_hi = frame.y_lo + 1.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";

  // frame
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
      << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // y grid: one line per decade
  for (double ly = frame.y_lo; ly <= frame.y_hi + 1e-9; ly += 1.0) {
    const double y = frame.py(std::pow(10.0, ly));
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kWidth - kRight
        << "\" y2=\"" << y << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"12\">1e" << static_cast<int>(ly) << "</text>\n";
  }
  // x ticks
  const double span = x_hi - x_lo;
  const double step = span > 0.5 ? 0.1 : (span > 0.1 ? 0.05 : span / 5.0);
  for (double p = std::ceil(x_lo / step) * step; p <= x_hi + 1e-9; p += step) {
    const double x = frame.px(p);
    svg << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << x << "\" y2=\""
        << kHeight - kBottom + 6 << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 22
        << "\" text-anchor=\"middle\" font-size=\"12\">" << format_double(std::round(p * 100) / 100)
        << "</text>\n";
  }
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 18
      << "\" text-anchor=\"middle\" font-size=\"14\">outage probability</text>\n";
  svg << "<text x=\"24\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 24 "
      << (kTop + kHeight - kBottom) / 2 << ")\">min throughput / C</text>\n";

  // series
  double legend_y = kTop + 16;
  for (const auto& s : series) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& pt : s.points)
      if (pt.second > 0.0) pts.push_back(pt);
    std::sort(pts.begin(), pts.end());
    if (pts.empty()) continue;

    if (s.line && pts.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [p, t] : pts) svg << frame.px(p) << "," << frame.py(t) << " ";
      svg << "\"/>\n";
    }
    if (s.markers || pts.size() == 1) {
      for (const auto& [p, t] : pts)
        svg << "<circle cx=\"" << frame.px(p) << "\" cy=\"" << frame.py(t)
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    }
    svg << "<rect x=\"" << kWidth - kRight - 190 << "\" y=\"" << legend_y - 9
        << "\" width=\"14\" height=\"4\" fill=\"" << s.color << "\"/>\n";
    svg << "<text x=\"" << kWidth - kRight - 170 << "\" y=\"" << legend_y
        << "\" font-size=\"12\">" << s.label << "</text>\n";
    legend_y += 18;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace d2d
