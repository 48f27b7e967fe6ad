#include <doctest.h>

#include <algorithm>
#include <random>

#include "bandkit/analysis.hpp"
#include "bandkit/bfs_width.hpp"
#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/errors.hpp"
#include "bandkit/generators.hpp"
#include "oracles.hpp"

using namespace bandkit;

TEST_CASE("a report agrees with the operations it bundles") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = oracle::random_connected(14, 0.25, rng);
    const AnalysisReport report = analyze(g, "random");

    CHECK(report.graph_id == "random");
    CHECK(report.n == g.vertex_count());
    CHECK(report.m == g.edge_count());

    const WidthWitness global = bfsw(g);
    const WidthWitness best = bfsw_min(g);
    CHECK(report.bfsw == global.width);
    CHECK(report.bfsw_witness == global.root);
    CHECK(report.bfsw_min == best.width);
    CHECK(report.bfsw_min_witness == best.root);

    CHECK(report.degree_lb == degree_lower_bound(g));
    CHECK(report.density_lb == local_density_lower_bound(g));
    CHECK(report.start == pseudo_peripheral_start(g));
    CHECK(report.cm_bandwidth == layout_bandwidth(g, cuthill_mckee(g, report.start)));
    CHECK(report.rcm_bandwidth == report.cm_bandwidth);
    CHECK(report.layer_order_bandwidth ==
          layout_bandwidth(g, layer_order_layout(g, report.start)));

    REQUIRE(report.exact.has_value());  // n = 14 is under the default threshold
    CHECK(*report.exact == exact_bandwidth(g).optimum);
    CHECK_FALSE(report.exact_time_limit_hit);
    REQUIRE(report.cm_over_exact.has_value());
    CHECK(*report.cm_over_exact ==
          doctest::Approx(static_cast<double>(report.cm_bandwidth) / *report.exact));
  }
}

TEST_CASE("report invariants hold across families") {
  std::mt19937_64 rng(123);
  std::vector<Graph> graphs;
  graphs.push_back(baseline(BaselineKind::path, 16));
  graphs.push_back(baseline(BaselineKind::star, 12));
  graphs.push_back(baseline(BaselineKind::cycle, 11));
  graphs.push_back(level_tree(2, 3).graph);
  graphs.push_back(level_tree(3, 2).graph);
  for (int trial = 0; trial < 6; ++trial) {
    graphs.push_back(oracle::random_connected(17, 0.3, rng));
  }

  for (const Graph& g : graphs) {
    const AnalysisReport r = analyze(g, "family");
    const std::size_t lower = std::max(r.degree_lb, r.density_lb);
    CHECK(r.bfsw_min <= r.bfsw);
    CHECK(r.cm_bandwidth >= lower);
    CHECK(r.rcm_bandwidth >= lower);
    CHECK(r.layer_order_bandwidth >= lower);
    CHECK(r.layer_order_bandwidth <= 2 * bfsw_from(g, r.start) - 1);
    CHECK(r.cm_over_lower_bound ==
          doctest::Approx(static_cast<double>(r.cm_bandwidth) / lower));
    if (r.exact) {
      CHECK(*r.exact >= lower);
      CHECK(*r.exact <= r.cm_bandwidth);
      CHECK(*r.exact <= 2 * r.bfsw_min - 1);
    }
  }
}

TEST_CASE("options pick the start and gate the exact solver") {
  const Graph p9 = baseline(BaselineKind::path, 9);
  AnalyzeOptions opts;
  opts.start = 4;  // middle of the path
  const AnalysisReport mid = analyze(p9, "p9", opts);
  CHECK(mid.start == 4);
  CHECK(mid.bfsw == 2);  // global maximum is root-independent here

  AnalyzeOptions skip;
  skip.exact_threshold = 5;
  const AnalysisReport skipped = analyze(p9, "p9", skip);
  CHECK_FALSE(skipped.exact.has_value());
  CHECK_FALSE(skipped.cm_over_exact.has_value());
}

TEST_CASE("json output is stable and carries every field") {
  const Graph p3 = baseline(BaselineKind::path, 3);
  const AnalysisReport report = analyze(p3, "p3");
  const std::string json = to_json(report);
  CHECK(json == to_json(analyze(p3, "p3")));  // deterministic

  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"graph_id\": \"p3\"") != std::string::npos);
  CHECK(json.find("\"n\": 3") != std::string::npos);
  CHECK(json.find("\"m\": 2") != std::string::npos);
  CHECK(json.find("\"bfsw\"") != std::string::npos);
  CHECK(json.find("\"bfsw_min\"") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
  CHECK(json.find("\"degree_lb\": 1") != std::string::npos);
  CHECK(json.find("\"density_lb\": 1") != std::string::npos);
  CHECK(json.find("\"cm_bandwidth\": 1") != std::string::npos);
  CHECK(json.find("\"rcm_bandwidth\": 1") != std::string::npos);
  CHECK(json.find("\"layer_order_bandwidth\": 1") != std::string::npos);
  CHECK(json.find("\"optimum\": 1") != std::string::npos);
  CHECK(json.find("\"time_limit_hit\": false") != std::string::npos);
  CHECK(json.find("\"ratios\"") != std::string::npos);
  CHECK(json.find("\"cm_over_exact\": 1.0") != std::string::npos);
  CHECK(json.back() == '\n');

  // Path BFS width from an endpoint start is 1; the global maximum is 2.
  CHECK(report.bfsw == 2);
  CHECK(report.bfsw_min == 1);

  // With the solver skipped, "exact" and the dependent ratio serialize as null.
  AnalyzeOptions skip;
  skip.exact_threshold = 1;
  const std::string skipped = to_json(analyze(p3, "p3", skip));
  CHECK(skipped.find("\"exact\": null") != std::string::npos);
  CHECK(skipped.find("\"cm_over_exact\": null") != std::string::npos);
}

TEST_CASE("analysis rejects graphs it cannot score") {
  CHECK_THROWS_AS(analyze(Graph(3, {{0, 1}}), "gap"), Disconnected);
  CHECK_THROWS_AS(analyze(Graph(), "void"), InvalidParams);
}
