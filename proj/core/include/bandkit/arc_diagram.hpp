#pragma once

// Arc diagrams: vertices on a horizontal baseline in layout order, edges of
// length 1 as baseline segments, longer edges as semicircles above it. The
// drawing height above the baseline is half the layout bandwidth, in
// position units.

#include <string>

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

/// Render an SVG 1.1 arc diagram. `unit` is the horizontal distance between
/// consecutive positions in pixels; arc diameters equal edge length * unit,
/// and the document height is (layout_bandwidth / 2) * unit plus a fixed
/// margin on each side. Output is deterministic for identical inputs.
/// Throws InvalidParams when unit <= 0, InvalidLayout on size mismatch.
std::string render_arc_diagram(const Graph& g, const LinearLayout& layout, double unit);

/// The fixed margin (pixels) added around the drawing on every side.
inline constexpr double kArcDiagramMargin = 10.0;

}  // namespace bandkit
