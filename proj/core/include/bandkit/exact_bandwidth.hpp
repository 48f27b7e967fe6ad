#pragma once

// Exact minimum bandwidth by branch and bound, for small graphs. Serves as
// the ground-truth oracle behind approximation-ratio reports and tests.

#include <cstddef>
#include <cstdint>

#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// Outcome of an exact-bandwidth search. `witness` always satisfies
/// layout_bandwidth(g, witness) == optimum; when time_limit_hit is true the
/// search ran out of nodes and optimum is only an upper bound.
struct BandwidthCertificate {
  std::size_t optimum = 0;
  LinearLayout witness;
  std::uint64_t explored_nodes = 0;
  bool time_limit_hit = false;
};

/// Minimum bandwidth over all layouts, by deciding feasibility for
/// b = lower..upper incrementally: the lower bound is the stronger of the
/// degree and local-density certificates, the upper bound comes from a
/// Cuthill-McKee layout at a pseudo-peripheral start. Branch and bound
/// places vertices left to right and prunes a partial layout as soon as a
/// placed vertex cannot fit its remaining neighbors within b positions.
/// Throws Disconnected.
BandwidthCertificate exact_bandwidth(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);

/// Decision form: does a layout of bandwidth <= b exist? Throws
/// Indeterminate when the node limit is exhausted before an answer, and
/// Disconnected on disconnected input.
bool is_bandwidth_at_most(const Graph& g, std::size_t b,
                          std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace bandkit
