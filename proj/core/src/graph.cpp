#include "bandkit/graph.hpp"

#include <algorithm>
#include <string>

#include "bandkit/errors.hpp"

namespace bandkit {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw OutOfRange("edge endpoint " + std::to_string(std::max(u, v)) +
                       " out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];

  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }

  // Sort each row and drop duplicate entries, compacting in place.
  std::size_t write = 0;
  std::size_t row_begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t row_end = offsets_[v + 1];
    std::sort(adjacency_.begin() + row_begin, adjacency_.begin() + row_end);
    const auto last = std::unique(adjacency_.begin() + row_begin, adjacency_.begin() + row_end);
    const std::size_t len = static_cast<std::size_t>(last - (adjacency_.begin() + row_begin));
    if (write != row_begin) {
      std::copy(adjacency_.begin() + row_begin, adjacency_.begin() + row_begin + len,
                adjacency_.begin() + write);
    }
    write += len;
    row_begin = row_end;
    offsets_[v + 1] = write;
    max_degree_ = std::max(max_degree_, len);
  }
  adjacency_.resize(write);
  adjacency_.shrink_to_fit();
  m_ = write / 2;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for_each_edge([&out](vertex_t u, vertex_t v) { out.emplace_back(u, v); });
  return out;
}

std::size_t layout_bandwidth(const Graph& g, const LinearLayout& layout) {
  if (layout.size() != g.vertex_count()) {
    throw InvalidLayout("layout size does not match vertex count");
  }
  const auto positions = layout.positions();
  std::size_t best = 0;
  g.for_each_edge([&](vertex_t u, vertex_t v) {
    const position_t pu = positions[u];
    const position_t pv = positions[v];
    const std::size_t len = pu > pv ? pu - pv : pv - pu;
    best = std::max(best, len);
  });
  return best;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidParams("connectivity is undefined for the empty graph");
  std::vector<char> seen(n, 0);
  std::vector<vertex_t> stack = {0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const vertex_t u = stack.back();
    stack.pop_back();
    for (vertex_t w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::size_t degree_lower_bound(const Graph& g) { return (g.max_degree() + 1) / 2; }

std::size_t local_density_lower_bound(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("local density bound requires a connected graph");
  const std::size_t n = g.vertex_count();

  std::size_t bound = 0;
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t epoch = 0;
  std::vector<vertex_t> frontier;
  std::vector<vertex_t> next;
  frontier.reserve(n);
  next.reserve(n);

  for (vertex_t root = 0; root < n; ++root) {
    ++epoch;
    frontier.assign(1, root);
    mark[root] = epoch;
    std::size_t within = 0;  // |N(root, d)|, root excluded
    for (std::size_t d = 1; !frontier.empty(); ++d) {
      next.clear();
      for (vertex_t u : frontier) {
        for (vertex_t w : g.neighbors(u)) {
          if (mark[w] != epoch) {
            mark[w] = epoch;
            next.push_back(w);
          }
        }
      }
      if (next.empty()) break;
      within += next.size();
      bound = std::max(bound, (within + 2 * d - 1) / (2 * d));
      frontier.swap(next);
    }
  }
  return bound;
}

}  // namespace bandkit
