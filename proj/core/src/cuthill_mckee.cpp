#include "bandkit/cuthill_mckee.hpp"

#include <algorithm>
#include <string>

#include "bandkit/bfs_width.hpp"
#include "bandkit/errors.hpp"

namespace bandkit {

LinearLayout cuthill_mckee(const Graph& g, vertex_t start) {
  const std::size_t n = g.vertex_count();
  if (start >= n) {
    throw OutOfRange("start " + std::to_string(start) + " out of range for " +
                     std::to_string(n) + " vertices");
  }

  std::vector<vertex_t> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);
  order.push_back(start);
  visited[start] = 1;

  std::vector<vertex_t> fresh;  // unvisited neighbors of the current vertex
  for (std::size_t head = 0; head < order.size(); ++head) {
    fresh.clear();
    for (vertex_t w : g.neighbors(order[head])) {
      if (!visited[w]) {
        visited[w] = 1;
        fresh.push_back(w);
      }
    }
    std::sort(fresh.begin(), fresh.end(), [&g](vertex_t a, vertex_t b) {
      const std::size_t da = g.degree(a);
      const std::size_t db = g.degree(b);
      return da != db ? da < db : a < b;
    });
    order.insert(order.end(), fresh.begin(), fresh.end());
  }

  if (order.size() != n) {
    throw Disconnected("graph is not connected: Cuthill-McKee did not reach every vertex");
  }
  return LinearLayout::from_order(std::move(order));
}

LinearLayout reverse_cuthill_mckee(const Graph& g, vertex_t start) {
  return cuthill_mckee(g, start).reversed();
}

vertex_t pseudo_peripheral_start(const Graph& g) {
  vertex_t current = 0;
  Layering layering = bfs_layering(g, current);
  while (true) {
    const auto& last = layering.layers.back();
    vertex_t candidate = last.front();
    for (vertex_t v : last) {
      if (g.degree(v) < g.degree(candidate)) candidate = v;  // ids ascend within a layer
    }
    Layering next = bfs_layering(g, candidate);
    if (next.depth() <= layering.depth()) return current;
    current = candidate;
    layering = std::move(next);
  }
}

}  // namespace bandkit
