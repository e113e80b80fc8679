#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "d2d/rng.hpp"
#include "d2d/topology.hpp"

using namespace d2d;

namespace {

double node_dist(const GridNetwork& grid, int a, int b) {
  const double dx = grid.positions[a].x - grid.positions[b].x;
  const double dy = grid.positions[a].y - grid.positions[b].y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

TEST_CASE("build_grid: lattice geometry") {
  const GridNetwork grid = build_grid(49);
  CHECK(grid.per_axis == 7);
  CHECK(grid.spacing() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

  double min_dist = 10.0;
  for (int a = 0; a < grid.n; ++a) {
    CHECK(grid.positions[a].x > 0.0);
    CHECK(grid.positions[a].x < 1.0);
    CHECK(grid.positions[a].y > 0.0);
    CHECK(grid.positions[a].y < 1.0);
    for (int b = a + 1; b < grid.n; ++b) min_dist = std::min(min_dist, node_dist(grid, a, b));
  }
  CHECK(std::abs(min_dist - 1.0 / 7.0) < 1e-12);

  CHECK(build_grid(4).per_axis == 2);
  CHECK(build_grid(10000).per_axis == 100);
}

TEST_CASE("build_grid: rejects non-squares naming the neighbors") {
  try {
    build_grid(50);
    FAIL("expected to throw");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("49") != std::string::npos);
    CHECK(msg.find("64") != std::string::npos);
  }
  CHECK_THROWS_AS(build_grid(0), std::invalid_argument);
}

TEST_CASE("build_clusters: exact tiling") {
  const GridNetwork grid = build_grid(100);
  const ClusterGrid clusters = build_clusters(grid, 4, 0.4);
  CHECK(clusters.dim == 5);
  CHECK(clusters.side == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(clusters.members.size() == 25);
  CHECK(clusters.K == 9);  // derived from delta = 0.4
  CHECK_FALSE(clusters.K_overridden);

  std::set<int> seen;
  for (std::size_t c = 0; c < clusters.members.size(); ++c) {
    CHECK(clusters.members[c].size() == 4);
    for (int node : clusters.members[c]) {
      CHECK(clusters.cluster_of[node] == static_cast<int>(c));
      CHECK(seen.insert(node).second);  // partition: each node exactly once
    }
  }
  CHECK(static_cast<int>(seen.size()) == grid.n);

  // every in-cluster pair is within the transmission range
  for (const auto& members : clusters.members)
    for (int a : members)
      for (int b : members) CHECK(node_dist(grid, a, b) <= clusters.R + 1e-15);
}

TEST_CASE("build_clusters: single-cell layout") {
  const GridNetwork grid = build_grid(441);
  const ClusterGrid clusters = build_clusters(grid, 49, 0.4, 9);
  CHECK(clusters.dim == 3);
  CHECK(clusters.K == 9);
  CHECK(clusters.K_overridden);
  const auto schedule = reuse_schedule(clusters);
  CHECK(schedule.size() == 9);
  for (const auto& slot : schedule) CHECK(slot.size() == 1);
}

TEST_CASE("build_clusters: inadmissible g_c lists the nearest admissible") {
  const GridNetwork grid = build_grid(10000);
  try {
    build_clusters(grid, 7, 0.4);
    FAIL("expected to throw");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("4") != std::string::npos);
    CHECK(msg.find("16") != std::string::npos);
  }
}

TEST_CASE("admissible_cluster_sizes: divisor structure") {
  const auto sizes = admissible_cluster_sizes(10000);
  const std::vector<int> expected = {1, 4, 16, 25, 100, 400, 625, 2500, 10000};
  CHECK(sizes == expected);
}

TEST_CASE("transmission_range: cluster diagonal") {
  CHECK(transmission_range(4, 100) == doctest::Approx(std::sqrt(2.0) * 0.2).epsilon(1e-15));
  CHECK(transmission_range(100, 100) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(transmission_range(100, 10000) == doctest::Approx(0.1414213562).epsilon(1e-9));
}

TEST_CASE("reuse_factor: formula values") {
  CHECK(reuse_factor(0.4) == 9);
  CHECK(reuse_factor(1.0) == 16);
  CHECK(reuse_factor(0.01) == 9);
  CHECK_THROWS_AS(reuse_factor(0.0), std::invalid_argument);
  CHECK_THROWS_AS(reuse_factor(-1.0), std::invalid_argument);
}

TEST_CASE("reuse_schedule: partition into color classes") {
  const GridNetwork grid = build_grid(36 * 4);  // 12x12 nodes
  const ClusterGrid clusters = build_clusters(grid, 4, 0.4);  // dim=6, K=9
  const auto schedule = reuse_schedule(clusters);
  CHECK(schedule.size() == 9);

  std::set<int> seen;
  for (const auto& slot : schedule) {
    CHECK(slot.size() == 4);  // 36 clusters over 9 colors
    for (int c : slot) CHECK(seen.insert(c).second);
  }
  CHECK(seen.size() == clusters.members.size());

  ClusterGrid odd = clusters;
  odd.K = 5;
  CHECK_THROWS_AS(reuse_schedule(odd), std::invalid_argument);
}

TEST_CASE("reuse_schedule: K=4 override still partitions exactly") {
  const GridNetwork grid = build_grid(100);
  const ClusterGrid clusters = build_clusters(grid, 4, 0.4, 4);  // dim=5, K=4
  CHECK(clusters.K_overridden);
  const auto schedule = reuse_schedule(clusters);
  CHECK(schedule.size() == 4);
  std::set<int> seen;
  for (const auto& slot : schedule)
    for (int c : slot) CHECK(seen.insert(c).second);
  CHECK(seen.size() == 25);
}

TEST_CASE("check_feasible: protocol-model conditions") {
  const GridNetwork grid = build_grid(100);
  const double R = transmission_range(4, 100);

  LinkSet single{{{0, 1}}};  // horizontal neighbors, d = 0.1
  CHECK(check_feasible(single, grid, R, 0.4));

  LinkSet far{{{0, 9}}};  // opposite ends of a row
  CHECK_FALSE(check_feasible(far, grid, R, 0.4));

  // second transmitter adjacent to the first receiver
  LinkSet interfering{{{0, 1}, {2, 3}}};
  CHECK_FALSE(check_feasible(interfering, grid, R, 0.4));

  LinkSet bad_index{{{0, 1000}}};
  CHECK_THROWS_AS(check_feasible(bad_index, grid, R, 0.4), std::invalid_argument);
}

TEST_CASE("check_feasible: schedule soundness and monotonicity") {
  RandomStream rng(77);
  for (double delta : {0.2, 0.4, 1.0}) {
    for (int n : {100, 400}) {
      for (int g_c : {4, 25}) {
        const GridNetwork grid = build_grid(n);
        const ClusterGrid clusters = build_clusters(grid, g_c, delta);
        const double R = clusters.R;
        const auto schedule = reuse_schedule(clusters);

        for (const auto& slot : schedule) {
          LinkSet links;
          for (int cluster : slot) {
            const auto& members = clusters.members[cluster];
            const int tx = members[rng.next_u64() % members.size()];
            int rx = tx;
            while (rx == tx) rx = members[rng.next_u64() % members.size()];
            links.links.push_back({tx, rx});
          }
          if (links.links.size() < 2) continue;
          CHECK(check_feasible(links, grid, R, delta));

          // removing any one link keeps the set feasible
          LinkSet reduced = links;
          reduced.links.erase(reduced.links.begin() +
                              static_cast<long>(rng.next_u64() % reduced.links.size()));
          CHECK(check_feasible(reduced, grid, R, delta));
        }
      }
    }
  }
}
