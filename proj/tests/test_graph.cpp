#include <doctest.h>

#include <algorithm>
#include <random>

#include "bandkit/errors.hpp"
#include "bandkit/generators.hpp"
#include "bandkit/graph.hpp"
#include "oracles.hpp"

using namespace bandkit;

TEST_CASE("construction: P3, dedup, self-loop and range errors") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));

  const Graph dup(2, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(Graph(1, {{0, 0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), OutOfRange);
}

TEST_CASE("adjacency is sorted and edges() ascends with u < v") {
  const Graph g(5, {{4, 0}, {2, 0}, {0, 1}, {3, 2}});
  const auto nbrs = g.neighbors(0);
  CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
  const auto edges = g.edges();
  CHECK(edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 4}, {2, 3}});
  CHECK(g.max_degree() == 3);
}

TEST_CASE("layout_bandwidth on small graphs") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(layout_bandwidth(p3, LinearLayout::identity(3)) == 1);

  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(layout_bandwidth(k3, LinearLayout::identity(3)) == 2);
  CHECK(layout_bandwidth(k3, LinearLayout::from_order({2, 0, 1})) == 2);

  const Graph lone(1, {});
  CHECK(layout_bandwidth(lone, LinearLayout::identity(1)) == 0);

  CHECK_THROWS_AS(layout_bandwidth(p3, LinearLayout::identity(4)), InvalidLayout);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Graph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(baseline(BaselineKind::star, 5)));
  CHECK_THROWS_AS(is_connected(Graph()), InvalidParams);
}

TEST_CASE("degree lower bound") {
  CHECK(degree_lower_bound(baseline(BaselineKind::star, 10)) == 5);  // 9 leaves
  CHECK(degree_lower_bound(baseline(BaselineKind::path, 6)) == 1);
  CHECK(degree_lower_bound(baseline(BaselineKind::complete, 5)) == 2);
}

TEST_CASE("local density lower bound") {
  CHECK(local_density_lower_bound(baseline(BaselineKind::star, 10)) == 5);
  CHECK(local_density_lower_bound(baseline(BaselineKind::path, 5)) == 1);
  CHECK(local_density_lower_bound(baseline(BaselineKind::complete, 4)) == 2);
  CHECK_THROWS_AS(local_density_lower_bound(Graph(2, {})), Disconnected);
}

TEST_CASE("local density matches the quadratic oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 12);
    const Graph g = oracle::random_connected(size(rng), 0.3, rng);
    CHECK(local_density_lower_bound(g) == oracle::brute_local_density(g));
  }
}

TEST_CASE("both certificates bound every layout's bandwidth") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(8, 0.35, rng);
    std::vector<vertex_t> order(8);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    const auto layout = LinearLayout::from_order(order);
    const std::size_t bw = layout_bandwidth(g, layout);
    CHECK(bw >= degree_lower_bound(g));
    CHECK(bw >= local_density_lower_bound(g));
    CHECK(layout_bandwidth(g, layout.reversed()) == bw);
    CHECK(local_density_lower_bound(g) >= degree_lower_bound(g));
  }
}
