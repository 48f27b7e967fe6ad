#include "bandkit/matrix_pattern.hpp"

#include <algorithm>
#include <string>

#include "bandkit/errors.hpp"

namespace bandkit {

MatrixPattern::MatrixPattern(std::size_t n, std::vector<Entry> entries) : n_(n) {
  for (auto& [i, j] : entries) {
    if (i >= n || j >= n) {
      throw OutOfRange("pattern index " + std::to_string(std::max(i, j)) +
                       " out of range for dimension " + std::to_string(n));
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  entries_ = std::move(entries);
}

MatrixPattern MatrixPattern::from_graph(const Graph& g, bool with_diagonal) {
  std::vector<Entry> entries = g.edges();
  if (with_diagonal) {
    entries.reserve(entries.size() + g.vertex_count());
    for (vertex_t v = 0; v < g.vertex_count(); ++v) entries.emplace_back(v, v);
  }
  return MatrixPattern(g.vertex_count(), std::move(entries));
}

Graph MatrixPattern::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(entries_.size());
  for (const auto& [i, j] : entries_) {
    if (i != j) edges.emplace_back(i, j);
  }
  return Graph(n_, edges);
}

std::size_t pattern_bandwidth(const MatrixPattern& p) {
  std::size_t best = 0;
  for (const auto& [i, j] : p.nonzeros()) {
    best = std::max<std::size_t>(best, j - i);
  }
  return best;
}

MatrixPattern reorder_pattern(const MatrixPattern& p, const LinearLayout& layout) {
  if (layout.size() != p.dimension()) {
    throw DimensionError("layout size " + std::to_string(layout.size()) +
                         " does not match pattern dimension " + std::to_string(p.dimension()));
  }
  std::vector<MatrixPattern::Entry> mapped;
  mapped.reserve(p.nonzeros().size());
  for (const auto& [i, j] : p.nonzeros()) {
    mapped.emplace_back(layout.position_of(i), layout.position_of(j));
  }
  return MatrixPattern(p.dimension(), std::move(mapped));
}

}  // namespace bandkit
