#include "bandkit/layout.hpp"

#include <cstdlib>
#include <numeric>

#include "bandkit/errors.hpp"

namespace bandkit {

namespace {

// Checks that values is a permutation of 0..n-1 and returns its inverse.
std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> values) {
  const std::size_t n = values.size();
  std::vector<std::uint32_t> inverse(n, static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = values[i];
    if (v >= n) throw InvalidLayout("layout value out of range");
    if (inverse[v] != n) throw InvalidLayout("layout value repeated; not a bijection");
    inverse[v] = static_cast<std::uint32_t>(i);
  }
  return inverse;
}

}  // namespace

LinearLayout LinearLayout::identity(std::size_t n) {
  LinearLayout l;
  l.positions_.resize(n);
  std::iota(l.positions_.begin(), l.positions_.end(), 0);
  l.order_ = l.positions_;
  return l;
}

LinearLayout LinearLayout::from_positions(std::vector<position_t> positions) {
  LinearLayout l;
  l.order_ = invert_permutation(positions);
  l.positions_ = std::move(positions);
  return l;
}

LinearLayout LinearLayout::from_order(std::vector<vertex_t> order) {
  LinearLayout l;
  l.positions_ = invert_permutation(order);
  l.order_ = std::move(order);
  return l;
}

LinearLayout LinearLayout::reversed() const {
  const std::size_t n = size();
  LinearLayout l;
  l.positions_.resize(n);
  l.order_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const position_t p = static_cast<position_t>(n - 1 - positions_[v]);
    l.positions_[v] = p;
    l.order_[p] = static_cast<vertex_t>(v);
  }
  return l;
}

LinearLayout LinearLayout::then(const LinearLayout& next) const {
  if (next.size() != size()) throw DimensionError("layout sizes differ in composition");
  std::vector<position_t> composed(size());
  for (std::size_t v = 0; v < size(); ++v) {
    composed[v] = next.position_of(static_cast<vertex_t>(positions_[v]));
  }
  return from_positions(std::move(composed));
}

std::size_t edge_length(const LinearLayout& layout, vertex_t u, vertex_t v) {
  if (u == v) throw InvalidParams("edge_length requires two distinct vertices");
  const position_t pu = layout.position_of(u);
  const position_t pv = layout.position_of(v);
  return pu > pv ? pu - pv : pv - pu;
}

}  // namespace bandkit
