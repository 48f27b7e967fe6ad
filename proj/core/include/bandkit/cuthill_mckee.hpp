#pragma once

// Cuthill-McKee and reverse Cuthill-McKee orderings, plus the George-Liu
// pseudo-peripheral start-vertex sweep.

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

/// Classic Cuthill-McKee ordering started at `start` (placed at position 0):
/// BFS where each dequeued vertex's unvisited neighbors are appended in
/// ascending degree order, ties by ascending id. Positions are nondecreasing
/// in BFS layer. Throws Disconnected / OutOfRange.
LinearLayout cuthill_mckee(const Graph& g, vertex_t start);

/// The cuthill_mckee layout with positions reversed; same bandwidth.
LinearLayout reverse_cuthill_mckee(const Graph& g, vertex_t start);

/// George-Liu sweep: starting from vertex 0, repeatedly jump to a
/// minimum-degree vertex (ties by id) of the last BFS layer until the
/// eccentricity stops increasing. Throws Disconnected.
vertex_t pseudo_peripheral_start(const Graph& g);

}  // namespace bandkit
