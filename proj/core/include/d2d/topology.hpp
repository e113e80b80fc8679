#ifndef D2D_TOPOLOGY_HPP
#define D2D_TOPOLOGY_HPP

#include <optional>
#include <vector>

namespace d2d {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// sqrt(n) x sqrt(n) lattice over the unit square, spacing 1/sqrt(n), cell
// centered so every node is interior. Node index = row * sqrt(n) + col.
struct GridNetwork {
  int n = 0;
  int per_axis = 0;  // sqrt(n)
  std::vector<Point> positions;

  double spacing() const { return 1.0 / static_cast<double>(per_axis); }
};

GridNetwork build_grid(int n);

// Axis-aligned square tiling into dim x dim clusters of g_c nodes each.
// Cluster index = tile_row * dim + tile_col.
struct ClusterGrid {
  int n = 0;
  int g_c = 0;
  int dim = 0;          // clusters per axis
  double side = 0.0;    // cluster edge length sqrt(g_c / n)
  double R = 0.0;       // transmission range (cluster diagonal)
  double delta = 0.0;   // interference control parameter
  int K = 0;            // reuse factor
  bool K_overridden = false;
  std::vector<int> cluster_of;            // node -> cluster
  std::vector<std::vector<int>> members;  // cluster -> node list
};

ClusterGrid build_clusters(const GridNetwork& grid, int g_c, double delta,
                           std::optional<int> K_override = std::nullopt);

// Worst-case in-cluster range: the cluster diagonal sqrt(2) * sqrt(g_c / n).
double transmission_range(int g_c, int n);

// K = (ceil(sqrt(2) * (1 + delta)) + 1)^2.
int reuse_factor(double delta);

// Partition of clusters into K color classes by (row mod sqrt(K),
// col mod sqrt(K)); class k is active in reuse slot k.
std::vector<std::vector<int>> reuse_schedule(const ClusterGrid& clusters);

struct Link {
  int tx = 0;
  int rx = 0;
};

struct LinkSet {
  std::vector<Link> links;
};

// Protocol-model feasibility: every link within range R and every receiver at
// distance >= (1 + delta) * R from every other active transmitter.
bool check_feasible(const LinkSet& set, const GridNetwork& grid, double R, double delta);

// Cluster sizes admissible for an n-node grid (n / g_c a perfect square).
std::vector<int> admissible_cluster_sizes(int n);

}  // namespace d2d

#endif  // D2D_TOPOLOGY_HPP
