#include <doctest.h>

#include <cstdint>

#include "bandkit/bfs_width.hpp"
#include "bandkit/errors.hpp"
#include "bandkit/exact_bandwidth.hpp"
#include "bandkit/generators.hpp"
#include "oracles.hpp"

using namespace bandkit;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("level 1 trees are paths") {
  for (int j = 2; j <= 5; ++j) {
    const LevelTree t = level_tree(1, j);
    CHECK(t.graph.vertex_count() == static_cast<std::size_t>(j + 1));
    CHECK(t.graph.edge_count() == static_cast<std::size_t>(j));
    CHECK(t.graph.max_degree() == 2);
    CHECK(layout_bandwidth(t.graph, t.canonical_layout) == 1);
    CHECK(bfsw(t.graph).width == 2);
    CHECK(t.height == static_cast<std::size_t>(j));
  }
}

TEST_CASE("level 2 trees: counts, widths and the bandwidth-2 layout") {
  for (int j = 1; j <= 8; ++j) {
    const LevelTree t = level_tree(2, j);
    CHECK(t.graph.vertex_count() == 3u * (1u << j));
    CHECK(t.height == (1u << j));
    CHECK(layout_bandwidth(t.graph, t.canonical_layout) == 2);
    CHECK(bfsw_from(t.graph, t.root) == static_cast<std::size_t>(j + 2));
    CHECK(bfsw_from(t.graph, t.spine.front()) == 2);
  }
  const LevelTree t23 = level_tree(2, 3);
  CHECK(t23.graph.vertex_count() == 24);
  CHECK(t23.height == 8);
}

TEST_CASE("level 3 and 4 trees: exact counts and widest layers") {
  for (int j = 1; j <= 6; ++j) {
    const LevelTree t3 = level_tree(3, j);
    CHECK(t3.graph.vertex_count() == 7u * (1u << j) - 1);
    CHECK(bfsw_from(t3.graph, t3.root) == binomial(j + 3, 2));
    CHECK(layout_bandwidth(t3.graph, t3.canonical_layout) == 4);

    const LevelTree t4 = level_tree(4, j);
    CHECK(t4.graph.vertex_count() == 15u * (1u << j) - static_cast<std::size_t>(j) - 5);
    CHECK(bfsw_from(t4.graph, t4.root) == binomial(j + 4, 3));
    if (j >= 2) CHECK(layout_bandwidth(t4.graph, t4.canonical_layout) == 8);
  }
  CHECK(level_tree(3, 4).graph.vertex_count() == 111);
}

TEST_CASE("every level-tree leaf sits at the tree height") {
  for (int k = 2; k <= 4; ++k) {
    for (int j = 1; j <= 4; ++j) {
      const LevelTree t = level_tree(k, j);
      CHECK(t.height == (1u << j) + static_cast<std::size_t>(k) - 2);
      const Layering layering = bfs_layering(t.graph, t.root);
      CHECK(layering.depth() == t.height + 1);
      for (vertex_t v = 0; v < t.graph.vertex_count(); ++v) {
        if (t.graph.degree(v) == 1 && v != t.root) {
          CHECK(layering.layer_of[v] == t.height);
        }
      }
    }
  }
}

TEST_CASE("level trees are trees and the spine runs shallow-to-deep") {
  for (int k = 1; k <= 4; ++k) {
    for (int j = 1; j <= 4; ++j) {
      const LevelTree t = level_tree(k, j);
      CHECK(t.graph.edge_count() == t.graph.vertex_count() - 1);
      CHECK(is_connected(t.graph));
      CHECK(t.spine.back() == t.root);
      for (std::size_t i = 0; i + 1 < t.spine.size(); ++i) {
        CHECK(t.graph.has_edge(t.spine[i], t.spine[i + 1]));
      }
    }
  }
}

TEST_CASE("mirrored level trees double the instance around a shared root") {
  for (int j = 1; j <= 5; ++j) {
    const LevelTree single = level_tree(2, j);
    const LevelTree twin = mirrored_level_tree(2, j);
    CHECK(twin.graph.vertex_count() == 2 * single.graph.vertex_count() - 1);
    CHECK(twin.graph.edge_count() == twin.graph.vertex_count() - 1);
    CHECK(is_connected(twin.graph));
    CHECK(layout_bandwidth(twin.graph, twin.canonical_layout) == 3);
    // Minimum width grows with j even though the bandwidth stays constant.
    CHECK(bfsw_min(twin.graph).width == static_cast<std::size_t>(j) + 3);
  }
  for (int j = 1; j <= 3; ++j) {
    const LevelTree twin = mirrored_level_tree(3, j);
    CHECK(twin.graph.vertex_count() == 2 * level_tree(3, j).graph.vertex_count() - 1);
    CHECK(layout_bandwidth(twin.graph, twin.canonical_layout) == 7);
  }
  const LevelTree path_twin = mirrored_level_tree(1, 3);
  CHECK(path_twin.graph.vertex_count() == 7);
  CHECK(path_twin.height == 3);
}

TEST_CASE("caterpillars") {
  const Graph bare = caterpillar(2, 6);
  CHECK(bare.vertex_count() == 6);
  CHECK(bare.max_degree() == 2);  // no leaves attached: a plain path

  const Graph c35 = caterpillar(3, 5);
  CHECK(c35.max_degree() == 3);
  CHECK(bfsw(c35).width <= 4);

  const Graph c46 = caterpillar(4, 6);
  CHECK(bfsw(c46).width <= 6);

  for (int delta = 3; delta <= 6; ++delta) {
    for (int spine = 2; spine <= 12; ++spine) {
      CHECK(bfsw(caterpillar(delta, spine)).width <=
            2 * (static_cast<std::size_t>(delta) - 1));
    }
  }
}

TEST_CASE("star subdivisions: size, layout bandwidth, and width") {
  for (int s = 2; s <= 8; ++s) {
    const auto [graph, layout] = star_subdivision(s);
    const std::size_t ss = static_cast<std::size_t>(s);
    CHECK(graph.vertex_count() == 2 * ss * ss + ss + 1);
    CHECK(graph.edge_count() == graph.vertex_count() - 1);
    CHECK(is_connected(graph));
    CHECK(layout_bandwidth(graph, layout) == 4 * ss - 1);
    CHECK(bfsw(graph).width == ss * ss);
    CHECK(bfsw_from(graph, 0) == ss * ss);  // the hub's layer s holds all s^2 leaves
  }
}

TEST_CASE("baseline families") {
  const Graph p3 = baseline(BaselineKind::path, 3);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph s5 = baseline(BaselineKind::star, 5);
  CHECK(s5.max_degree() == 4);
  CHECK(s5.edge_count() == 4);

  const Graph c4 = baseline(BaselineKind::cycle, 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.max_degree() == 2);
  CHECK(is_connected(c4));

  const Graph k5 = baseline(BaselineKind::complete, 5);
  CHECK(k5.edge_count() == 10);
}

TEST_CASE("random banded graphs") {
  const auto full_path = random_banded(8, 1, 1.0, 1);
  CHECK(full_path.graph.edges() == baseline(BaselineKind::path, 8).edges());

  const auto dense = random_banded(5, 2, 1.0, 9);
  CHECK(exact_bandwidth(dense.graph).optimum == 2);

  const auto a = random_banded(64, 3, 0.4, 1234);
  const auto b = random_banded(64, 3, 0.4, 1234);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.layout == b.layout);

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = random_banded(200, 2, 0.5, seed);
    CHECK(is_connected(inst.graph));
    CHECK(layout_bandwidth(inst.graph, inst.layout) <= 2);
  }
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(level_tree(0, 3), InvalidParams);
  CHECK_THROWS_AS(level_tree(2, 0), InvalidParams);
  CHECK_THROWS_AS(mirrored_level_tree(2, 0), InvalidParams);
  CHECK_THROWS_AS(caterpillar(1, 5), InvalidParams);
  CHECK_THROWS_AS(caterpillar(3, 1), InvalidParams);
  CHECK_THROWS_AS(star_subdivision(1), InvalidParams);
  CHECK_THROWS_AS(baseline(BaselineKind::cycle, 2), InvalidParams);
  CHECK_THROWS_AS(random_banded(5, 0, 0.5, 1), InvalidParams);
  CHECK_THROWS_AS(random_banded(5, 5, 0.5, 1), InvalidParams);
  CHECK_THROWS_AS(random_banded(5, 2, 1.5, 1), InvalidParams);
}
