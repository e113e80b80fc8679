#include "d2d/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace d2d {
namespace {

// Exact integer square root, or -1 when v is not a perfect square.
int exact_isqrt(long long v) {
  if (v < 0) return -1;
  long long r = std::llround(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return (r * r == v) ? static_cast<int>(r) : -1;
}

double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

GridNetwork build_grid(int n) {
  if (n < 1) throw std::invalid_argument("build_grid: n must be >= 1");
  const int s = exact_isqrt(n);
  if (s < 0) {
    const int lo = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    throw std::invalid_argument("build_grid: n=" + std::to_string(n) +
                                " is not a perfect square (nearest: " + std::to_string(lo * lo) +
                                ", " + std::to_string((lo + 1) * (lo + 1)) + ")");
  }

  GridNetwork grid;
  grid.n = n;
  grid.per_axis = s;
  grid.positions.resize(static_cast<std::size_t>(n));
  const double h = 1.0 / static_cast<double>(s);
  for (int row = 0; row < s; ++row)
    for (int col = 0; col < s; ++col)
      grid.positions[static_cast<std::size_t>(row * s + col)] = {(col + 0.5) * h,
                                                                 (row + 0.5) * h};
  return grid;
}

std::vector<int> admissible_cluster_sizes(int n) {
  const int s = exact_isqrt(n);
  if (s < 0) throw std::invalid_argument("admissible_cluster_sizes: n must be a perfect square");
  std::vector<int> out;
  for (int d = s; d >= 1; --d)
    if (s % d == 0) out.push_back((s / d) * (s / d));  // dim = d clusters per axis
  return out;  // ascending in g_c
}

ClusterGrid build_clusters(const GridNetwork& grid, int g_c, double delta,
                           std::optional<int> K_override) {
  if (g_c < 1) throw std::invalid_argument("build_clusters: g_c must be >= 1");
  if (delta <= 0.0) throw std::invalid_argument("build_clusters: delta must be > 0");
  if (K_override && *K_override < 1)
    throw std::invalid_argument("build_clusters: K override must be >= 1");

  const int n = grid.n;
  const int dim = (g_c <= n && n % g_c == 0) ? exact_isqrt(n / g_c) : -1;
  if (dim < 0) {
    const auto sizes = admissible_cluster_sizes(n);
    int below = sizes.front(), above = sizes.back();
    for (int s : sizes) {
      if (s <= g_c) below = s;
      if (s >= g_c) {
        above = s;
        break;
      }
    }
    throw std::invalid_argument(
        "build_clusters: n/g_c must be a perfect square; g_c=" + std::to_string(g_c) +
        " is not admissible for n=" + std::to_string(n) +
        " (nearest admissible: " + std::to_string(below) + ", " + std::to_string(above) + ")");
  }

  ClusterGrid out;
  out.n = n;
  out.g_c = g_c;
  out.dim = dim;
  out.side = std::sqrt(static_cast<double>(g_c) / static_cast<double>(n));
  out.R = transmission_range(g_c, n);
  out.delta = delta;
  out.K_overridden = K_override.has_value();
  out.K = K_override ? *K_override : reuse_factor(delta);

  const int per_tile = grid.per_axis / dim;  // sqrt(g_c) nodes per tile axis
  out.cluster_of.resize(static_cast<std::size_t>(n));
  out.members.assign(static_cast<std::size_t>(dim) * dim, {});
  for (int row = 0; row < grid.per_axis; ++row) {
    for (int col = 0; col < grid.per_axis; ++col) {
      const int node = row * grid.per_axis + col;
      const int cluster = (row / per_tile) * dim + (col / per_tile);
      out.cluster_of[static_cast<std::size_t>(node)] = cluster;
      out.members[static_cast<std::size_t>(cluster)].push_back(node);
    }
  }
  return out;
}

double transmission_range(int g_c, int n) {
  if (g_c < 1 || n < 1 || g_c > n)
    throw std::invalid_argument("transmission_range: need 1 <= g_c <= n");
  return std::sqrt(2.0 * static_cast<double>(g_c) / static_cast<double>(n));
}

int reuse_factor(double delta) {
  if (delta <= 0.0) throw std::invalid_argument("reuse_factor: delta must be > 0");
  const int r = static_cast<int>(std::ceil(std::sqrt(2.0) * (1.0 + delta)));
  return (r + 1) * (r + 1);
}

std::vector<std::vector<int>> reuse_schedule(const ClusterGrid& clusters) {
  const int r = exact_isqrt(clusters.K);
  if (r < 0)
    throw std::invalid_argument("reuse_schedule: K=" + std::to_string(clusters.K) +
                                " is not a perfect square; the square coloring needs one");

  std::vector<std::vector<int>> classes(static_cast<std::size_t>(clusters.K));
  for (int row = 0; row < clusters.dim; ++row)
    for (int col = 0; col < clusters.dim; ++col)
      classes[static_cast<std::size_t>((row % r) * r + (col % r))].push_back(row * clusters.dim +
                                                                             col);
  return classes;
}

bool check_feasible(const LinkSet& set, const GridNetwork& grid, double R, double delta) {
  for (const Link& l : set.links) {
    if (l.tx < 0 || l.tx >= grid.n || l.rx < 0 || l.rx >= grid.n)
      throw std::invalid_argument("check_feasible: node index out of range");
  }
  const double guard = (1.0 + delta) * R;
  for (const Link& l : set.links) {
    if (dist(grid.positions[static_cast<std::size_t>(l.tx)],
             grid.positions[static_cast<std::size_t>(l.rx)]) > R)
      return false;
    for (const Link& other : set.links) {
      if (other.tx == l.tx) continue;
      if (dist(grid.positions[static_cast<std::size_t>(other.tx)],
               grid.positions[static_cast<std::size_t>(l.rx)]) < guard)
        return false;
    }
  }
  return true;
}

}  // namespace d2d
