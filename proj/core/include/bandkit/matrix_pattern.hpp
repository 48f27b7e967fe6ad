#pragma once

// Symmetric sparse-matrix nonzero patterns and their permutation P A P^T.
// A pattern's off-diagonal entries are exactly the edges of an undirected
// graph; bandwidth questions transfer 1:1.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

/// Nonzero pattern of a symmetric n x n matrix. Entries are stored once as
/// (i, j) with i <= j, sorted ascending; symmetry is implicit. Diagonal
/// entries are allowed and preserved but never affect bandwidth.
class MatrixPattern {
 public:
  using Entry = std::pair<vertex_t, vertex_t>;

  MatrixPattern() = default;

  /// Normalizes each entry to (min, max), sorts and deduplicates.
  /// Throws OutOfRange when an index is >= n.
  MatrixPattern(std::size_t n, std::vector<Entry> entries);

  /// Pattern of the adjacency matrix, optionally with a full diagonal.
  static MatrixPattern from_graph(const Graph& g, bool with_diagonal = false);

  std::size_t dimension() const noexcept { return n_; }
  std::span<const Entry> nonzeros() const noexcept { return entries_; }

  /// Graph on the off-diagonal entries (diagonal dropped).
  Graph to_graph() const;

  friend bool operator==(const MatrixPattern&, const MatrixPattern&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Entry> entries_;  // (i, j), i <= j, sorted, unique
};

/// max |i - j| over off-diagonal nonzeros; 0 when there are none.
std::size_t pattern_bandwidth(const MatrixPattern& p);

/// The pattern of P A P^T: entry (i, j) maps to (position[i], position[j]).
/// Throws DimensionError when the layout size differs from the dimension.
MatrixPattern reorder_pattern(const MatrixPattern& p, const LinearLayout& layout);

}  // namespace bandkit
