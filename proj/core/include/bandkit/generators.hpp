#pragma once

// Deterministic graph families: the adversarial level trees with their
// constant-bandwidth layouts, mirrored level trees, caterpillars, the
// subdivided-star construction, simple baselines, and seeded random banded
// graphs for test corpora.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

/// A level-k tree together with its bookkeeping.
///
/// Vertex numbering: the spine is numbered first, 0..spine_size-1, walking
/// from the shallow end v_s (id 0) to the deep root v_j (last spine id);
/// then each attached subtree is numbered recursively in attachment order
/// i = 0..j. The mirrored variant numbers copy one, then the shared root's
/// copy-two half.
struct LevelTree {
  int k = 0;
  int j = 0;
  Graph graph;

  /// Constant-bandwidth layout (bandwidth depends only on k).
  LinearLayout canonical_layout;

  /// The spine path, shallow end v_s first, deep root v_j last. For the
  /// mirrored variant: copy one's shallow end through the shared root to
  /// copy two's shallow end.
  std::vector<vertex_t> spine;

  /// Spine vertices v_0..v_j where the level-(k-1) subtrees attach.
  std::vector<vertex_t> subtree_roots;

  /// Distance from `root` to every leaf (all leaves share this depth).
  std::size_t height = 0;

  /// The deep root v_j; for the mirrored variant, the shared root.
  vertex_t root = 0;
};

/// Build the level-k tree of height exponent j. Level 1 is a path with j
/// edges; level k >= 2 attaches level-(k-1) subtrees of geometrically
/// growing heights to a spine so that every leaf lands at the same depth.
/// Throws InvalidParams when k < 1 or j < 1.
LevelTree level_tree(int k, int j);

/// Two reflected copies of level_tree(k, j) sharing the deep root. The
/// minimum BFS width over all roots grows like j^(k-1) while
/// canonical_layout keeps constant bandwidth. Throws InvalidParams.
LevelTree mirrored_level_tree(int k, int j);

/// Central path of spine_len vertices; every interior spine vertex is
/// padded with leaves up to degree delta. Throws InvalidParams when
/// delta < 2 or spine_len < 2.
Graph caterpillar(int delta, int spine_len);

/// A graph packaged with a layout that certifies a bandwidth bound.
struct GraphWithLayout {
  Graph graph;
  LinearLayout layout;
};

/// Star with s paths of s subdivision vertices, each ending in a vertex
/// carrying s fresh leaves (n = 2s^2 + s + 1, center = vertex 0). The
/// returned block layout has bandwidth O(s) even though the BFS width from
/// the center is s^2. Throws InvalidParams when s < 2.
GraphWithLayout star_subdivision(int s);

enum class BaselineKind { path, star, cycle, complete };

/// The named elementary family on n vertices (star: center = vertex 0).
/// Throws InvalidParams when n < 1, or n < 3 for cycles.
Graph baseline(BaselineKind kind, std::size_t n);

/// Random graph of bandwidth <= b under the identity layout: every pair
/// with 0 < |i-j| <= b is included independently with the given probability,
/// then missing (i, i+1) edges are added where needed to connect the result.
/// Deterministic for a fixed seed. Throws InvalidParams unless 1 <= b < n
/// and 0 < density <= 1.
GraphWithLayout random_banded(std::size_t n, std::size_t b, double density, std::uint64_t seed);

}  // namespace bandkit
