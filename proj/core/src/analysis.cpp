#include "bandkit/analysis.hpp"

#include <algorithm>

#include <json.hpp>

#include "bandkit/bfs_width.hpp"
#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/errors.hpp"

namespace bandkit {

AnalysisReport analyze(const Graph& g, const std::string& graph_id,
                       const AnalyzeOptions& options) {
  if (!is_connected(g)) throw Disconnected("analysis requires a connected graph");

  AnalysisReport r;
  r.graph_id = graph_id;
  r.n = g.vertex_count();
  r.m = g.edge_count();

  // One sweep serves both extremes.
  const auto widths = bfs_width_per_root(g);
  r.bfsw = widths[0];
  r.bfsw_min = widths[0];
  for (vertex_t v = 1; v < widths.size(); ++v) {
    if (widths[v] > r.bfsw) {
      r.bfsw = widths[v];
      r.bfsw_witness = v;
    }
    if (widths[v] < r.bfsw_min) {
      r.bfsw_min = widths[v];
      r.bfsw_min_witness = v;
    }
  }

  r.degree_lb = degree_lower_bound(g);
  r.density_lb = local_density_lower_bound(g);

  r.start = options.start.value_or(pseudo_peripheral_start(g));
  r.cm_bandwidth = layout_bandwidth(g, cuthill_mckee(g, r.start));
  r.rcm_bandwidth = layout_bandwidth(g, reverse_cuthill_mckee(g, r.start));
  r.layer_order_bandwidth = layout_bandwidth(g, layer_order_layout(g, r.start));

  if (r.n <= options.exact_threshold) {
    const BandwidthCertificate cert = exact_bandwidth(g, options.node_limit);
    r.exact = cert.optimum;
    r.exact_time_limit_hit = cert.time_limit_hit;
    if (!cert.time_limit_hit && cert.optimum > 0) {
      r.cm_over_exact = static_cast<double>(r.cm_bandwidth) / static_cast<double>(cert.optimum);
    }
  }

  const std::size_t lb = std::max<std::size_t>({r.degree_lb, r.density_lb, 1});
  r.cm_over_lower_bound = static_cast<double>(r.cm_bandwidth) / static_cast<double>(lb);
  return r;
}

std::string to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["bfsw"] = {{"value", r.bfsw}, {"witness", r.bfsw_witness}};
  j["bfsw_min"] = {{"value", r.bfsw_min}, {"witness", r.bfsw_min_witness}};
  j["degree_lb"] = r.degree_lb;
  j["density_lb"] = r.density_lb;
  j["start"] = r.start;
  j["cm_bandwidth"] = r.cm_bandwidth;
  j["rcm_bandwidth"] = r.rcm_bandwidth;
  j["layer_order_bandwidth"] = r.layer_order_bandwidth;
  if (r.exact) {
    j["exact"] = {{"optimum", *r.exact}, {"time_limit_hit", r.exact_time_limit_hit}};
  } else {
    j["exact"] = nullptr;
  }
  nlohmann::ordered_json ratios;
  if (r.cm_over_exact) {
    ratios["cm_over_exact"] = *r.cm_over_exact;
  } else {
    ratios["cm_over_exact"] = nullptr;
  }
  ratios["cm_over_lower_bound"] = r.cm_over_lower_bound;
  j["ratios"] = ratios;
  return j.dump(2) + "\n";
}

}  // namespace bandkit
