#pragma once

// BFS layerings and BFS width: the per-root width bfsw(g, v), the global
// max/min over roots, and the layer-order layout whose bandwidth is at most
// 2*bfsw(g, root) - 1.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

/// The layering induced by BFS from a root: layers[i] holds the vertices at
/// distance exactly i, sorted by id; width is the largest layer size.
struct Layering {
  vertex_t root = 0;
  std::vector<std::uint32_t> layer_of;       // vertex -> distance from root
  std::vector<std::vector<vertex_t>> layers;  // layers[0] == {root}
  std::size_t width = 0;

  /// Number of layers, i.e. eccentricity(root) + 1.
  std::size_t depth() const noexcept { return layers.size(); }
};

/// Full BFS layering from root. Throws Disconnected when some vertex is
/// unreachable, OutOfRange when root >= n.
Layering bfs_layering(const Graph& g, vertex_t root);

/// Width of the BFS layering from root (max layer size), without
/// materializing the layers. Same errors as bfs_layering.
std::size_t bfsw_from(const Graph& g, vertex_t root);

/// bfsw_from for every root in one sweep; result[v] = bfsw_from(g, v).
/// Roots are processed concurrently when hardware threads are available.
std::vector<std::size_t> bfs_width_per_root(const Graph& g);

/// A width value together with the smallest root id attaining it.
struct WidthWitness {
  std::size_t width = 0;
  vertex_t root = 0;

  friend bool operator==(const WidthWitness&, const WidthWitness&) = default;
};

/// max over roots v of bfsw_from(g, v), witnessed by the smallest such v.
WidthWitness bfsw(const Graph& g);

/// min over roots v of bfsw_from(g, v), witnessed by the smallest such v.
WidthWitness bfsw_min(const Graph& g);

/// Layout listing vertices in nondecreasing layer order, ties broken by
/// ascending id. Its bandwidth is at most 2*bfsw_from(g, root) - 1.
LinearLayout layer_order_layout(const Graph& g, vertex_t root);

}  // namespace bandkit
