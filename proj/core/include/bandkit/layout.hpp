#pragma once

// Linear layouts: bijections between vertices and positions 0..n-1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bandkit {

using vertex_t = std::uint32_t;
using position_t = std::uint32_t;

/// A linear layout of n vertices: a bijection vertex -> position, kept
/// together with its inverse (position -> vertex). Immutable once built;
/// both factory functions validate bijectivity and throw InvalidLayout.
class LinearLayout {
 public:
  LinearLayout() = default;

  /// Layout placing vertex v at position v.
  static LinearLayout identity(std::size_t n);

  /// Build from a vertex -> position map.
  static LinearLayout from_positions(std::vector<position_t> positions);

  /// Build from a position -> vertex sequence (the order vertices appear in).
  static LinearLayout from_order(std::vector<vertex_t> order);

  std::size_t size() const noexcept { return positions_.size(); }

  position_t position_of(vertex_t v) const { return positions_[v]; }
  vertex_t vertex_at(position_t p) const { return order_[p]; }

  std::span<const position_t> positions() const noexcept { return positions_; }
  std::span<const vertex_t> order() const noexcept { return order_; }

  /// The mirror image: position p becomes n-1-p.
  LinearLayout reversed() const;

  /// Composition: first apply this layout, then `next` on the result, i.e.
  /// the returned layout sends v to next.position_of(this->position_of(v)).
  /// Throws DimensionError on size mismatch.
  LinearLayout then(const LinearLayout& next) const;

  friend bool operator==(const LinearLayout&, const LinearLayout&) = default;

 private:
  std::vector<position_t> positions_;  // vertex -> position
  std::vector<vertex_t> order_;        // position -> vertex
};

/// |position[u] - position[v]|: one plus the number of positions strictly
/// between the two endpoints. Requires u != v (throws InvalidParams).
std::size_t edge_length(const LinearLayout& layout, vertex_t u, vertex_t v);

}  // namespace bandkit
