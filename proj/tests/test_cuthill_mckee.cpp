#include <doctest.h>

#include <random>

#include "bandkit/bfs_width.hpp"
#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/errors.hpp"
#include "bandkit/generators.hpp"
#include "oracles.hpp"

using namespace bandkit;

TEST_CASE("CM on a path from an endpoint is the path order") {
  const Graph p6 = baseline(BaselineKind::path, 6);
  const auto layout = cuthill_mckee(p6, 0);
  CHECK(layout == LinearLayout::identity(6));
  CHECK(layout_bandwidth(p6, layout) == 1);
  CHECK(layout_bandwidth(p6, reverse_cuthill_mckee(p6, 0)) == 1);
}

TEST_CASE("CM on a star from the center") {
  const Graph star = baseline(BaselineKind::star, 9);
  CHECK(layout_bandwidth(star, cuthill_mckee(star, 0)) == 8);
}

TEST_CASE("CM starts at position zero and fills layers in order") {
  std::mt19937_64 rng(71);
  const Graph g = oracle::random_connected(20, 0.2, rng);
  for (vertex_t start = 0; start < g.vertex_count(); ++start) {
    const auto layout = cuthill_mckee(g, start);
    CHECK(layout.position_of(start) == 0);
    const Layering layering = bfs_layering(g, start);
    // Layer monotonicity: position order never goes back to a shallower layer.
    for (position_t p = 0; p + 1 < layout.size(); ++p) {
      CHECK(layering.layer_of[layout.vertex_at(p)] <=
            layering.layer_of[layout.vertex_at(p + 1)]);
    }
  }
}

TEST_CASE("CM bandwidth sits in the width sandwich for every start") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(15, 0.25, rng);
    for (vertex_t start = 0; start < g.vertex_count(); ++start) {
      const std::size_t width = bfsw_from(g, start);
      const std::size_t cm_bw = layout_bandwidth(g, cuthill_mckee(g, start));
      CHECK(width <= cm_bw);
      CHECK(cm_bw <= 2 * width - 1);
      CHECK(layout_bandwidth(g, reverse_cuthill_mckee(g, start)) == cm_bw);
    }
  }
}

TEST_CASE("CM on level trees started at the deep root") {
  for (int j = 2; j <= 6; ++j) {
    const LevelTree t = level_tree(2, j);
    const vertex_t deep = t.root;
    const std::size_t bw = layout_bandwidth(t.graph, cuthill_mckee(t.graph, deep));
    CHECK(bw >= static_cast<std::size_t>(j + 2));
    CHECK(bw <= 2 * static_cast<std::size_t>(j + 2) - 1);
  }
}

TEST_CASE("CM is deterministic") {
  std::mt19937_64 rng(79);
  const Graph g = oracle::random_connected(24, 0.2, rng);
  CHECK(cuthill_mckee(g, 5) == cuthill_mckee(g, 5));
}

TEST_CASE("pseudo-peripheral start") {
  const Graph p9 = baseline(BaselineKind::path, 9);
  const vertex_t path_start = pseudo_peripheral_start(p9);
  CHECK((path_start == 0 || path_start == 8));

  const Graph star = baseline(BaselineKind::star, 7);
  CHECK(pseudo_peripheral_start(star) >= 1);  // a leaf, never the center

  CHECK(pseudo_peripheral_start(baseline(BaselineKind::complete, 6)) == 0);
}

TEST_CASE("errors: disconnected input and bad starts") {
  const Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(cuthill_mckee(split, 0), Disconnected);
  const Graph p3 = baseline(BaselineKind::path, 3);
  CHECK_THROWS_AS(cuthill_mckee(p3, 7), OutOfRange);
}
