#pragma once

// One-stop analysis of a connected graph: widths, lower bounds, heuristic
// layouts, optional exact optimum, and ratios, serializable as JSON.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bandkit/exact_bandwidth.hpp"
#include "bandkit/graph.hpp"
#include "bandkit/layout.hpp"

namespace bandkit {

struct AnalyzeOptions {
  /// CM start / BFS root; defaults to pseudo_peripheral_start(g).
  std::optional<vertex_t> start;

  /// Attempt the exact solver when n <= exact_threshold.
  std::size_t exact_threshold = 20;
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct AnalysisReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;

  std::size_t bfsw = 0;
  vertex_t bfsw_witness = 0;
  std::size_t bfsw_min = 0;
  vertex_t bfsw_min_witness = 0;

  std::size_t degree_lb = 0;
  std::size_t density_lb = 0;

  vertex_t start = 0;  // CM start and layer-order root
  std::size_t cm_bandwidth = 0;
  std::size_t rcm_bandwidth = 0;
  std::size_t layer_order_bandwidth = 0;

  std::optional<std::size_t> exact;  // absent when the solver was skipped
  bool exact_time_limit_hit = false;

  /// cm_bandwidth / exact when exact is available, else absent.
  std::optional<double> cm_over_exact;
  /// cm_bandwidth / max(degree_lb, density_lb).
  double cm_over_lower_bound = 0.0;
};

/// Run every analysis on a connected graph. Throws Disconnected.
AnalysisReport analyze(const Graph& g, const std::string& graph_id,
                       const AnalyzeOptions& options = {});

/// Serialize as JSON (schema field "schema": 1), pretty-printed,
/// deterministic key order.
std::string to_json(const AnalysisReport& report);

}  // namespace bandkit
