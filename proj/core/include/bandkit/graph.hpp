#pragma once

// Immutable undirected graphs in compressed sparse row form, plus layout
// bandwidth and the two classic bandwidth lower-bound certificates
// (half max degree, and local density).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bandkit/layout.hpp"

namespace bandkit {

using Edge = std::pair<vertex_t, vertex_t>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// all analyses over it are pure functions, so instances can be shared
/// freely across threads.
class Graph {
 public:
  Graph() = default;

  /// Build from an edge list. Edges are deduplicated and stored with sorted
  /// adjacency. Throws InvalidEdge on self-loops and OutOfRange when an
  /// endpoint is >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  bool has_edge(vertex_t u, vertex_t v) const;

  /// Every edge once, as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  /// Visit every edge once as (u, v) with u < v, without materializing.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (vertex_t u = 0; u < vertex_count(); ++u) {
      for (vertex_t v : neighbors(u)) {
        if (u < v) f(u, v);
      }
    }
  }

 private:
  std::vector<std::size_t> offsets_;   // n+1 row offsets into adjacency_
  std::vector<vertex_t> adjacency_;    // 2m neighbor ids, sorted per row
  std::size_t m_ = 0;
  std::size_t max_degree_ = 0;
};

/// Max over edges {u,v} of |position[u] - position[v]|; 0 for edgeless
/// graphs. Throws InvalidLayout when the layout size differs from n.
std::size_t layout_bandwidth(const Graph& g, const LinearLayout& layout);

/// True iff a BFS from vertex 0 reaches every vertex. Requires n >= 1
/// (throws InvalidParams on an empty graph).
bool is_connected(const Graph& g);

/// ceil(max_degree / 2): a lower bound on the bandwidth of every layout.
std::size_t degree_lower_bound(const Graph& g);

/// Local density bound: max over vertices v and radii d in 1..ecc(v) of
/// ceil(|N(v,d)| / (2d)), where N(v,d) counts vertices within distance d
/// of v, excluding v itself. Also a lower bound on every layout's
/// bandwidth, and never weaker than degree_lower_bound.
/// Throws Disconnected on disconnected input. O(n(n+m)).
std::size_t local_density_lower_bound(const Graph& g);

}  // namespace bandkit
