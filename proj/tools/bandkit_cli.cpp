// Command-line front end: analysis reports, width and layout queries,
// generators, oracle reconstruction, and arc-diagram rendering over the
// edge-list and Matrix Market file formats.
//
// Exit codes: 0 success, 1 input or usage error, 2 when a bounded search hit
// its node limit before finishing.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bandkit/analysis.hpp"
#include "bandkit/arc_diagram.hpp"
#include "bandkit/bfs_width.hpp"
#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/distance_oracle.hpp"
#include "bandkit/errors.hpp"
#include "bandkit/exact_bandwidth.hpp"
#include "bandkit/generators.hpp"
#include "bandkit/graph.hpp"
#include "bandkit/io.hpp"
#include "bandkit/layout.hpp"
#include "bandkit/matrix_pattern.hpp"

namespace {

using namespace bandkit;

enum class FileFormat { edges, mtx };

/// Resolve an explicit --format value, falling back to the file extension.
FileFormat resolve_format(const std::string& flag, const std::string& path) {
  if (flag == "edges") return FileFormat::edges;
  if (flag == "mtx") return FileFormat::mtx;
  return std::filesystem::path(path).extension() == ".mtx" ? FileFormat::mtx
                                                           : FileFormat::edges;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path, const std::string& format_flag) {
  const std::string text = slurp(path);
  if (resolve_format(format_flag, path) == FileFormat::mtx) {
    return read_matrix_market(text).to_graph();
  }
  return read_edge_list(text);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

std::string graph_id_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string order_line(const LinearLayout& layout, char comment) {
  std::string line(1, comment);
  line += " order";
  for (vertex_t v : layout.order()) {
    line += ' ';
    line += std::to_string(v);
  }
  line += '\n';
  return line;
}

/// Graph text in the requested format, with per-format comment lines (the
/// Matrix Market banner must stay first, so comments go after it there).
std::string graph_text(const Graph& g, FileFormat format,
                       const std::vector<std::string>& comments) {
  if (format == FileFormat::mtx) {
    const std::string body = write_matrix_market(MatrixPattern::from_graph(g));
    const std::size_t banner_end = body.find('\n') + 1;
    std::string out = body.substr(0, banner_end);
    for (const std::string& c : comments) out += "% " + c + "\n";
    out += body.substr(banner_end);
    return out;
  }
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += write_edge_list(g);
  return out;
}

int run_analyze(const std::string& path, const std::string& format_flag,
                const std::string& out_path, std::optional<vertex_t> start,
                std::size_t exact_threshold, std::uint64_t node_limit) {
  const Graph g = load_graph(path, format_flag);
  AnalyzeOptions options;
  options.start = start;
  options.exact_threshold = exact_threshold;
  options.node_limit = node_limit;
  emit(out_path, to_json(analyze(g, graph_id_of(path), options)));
  return 0;
}

int run_bfsw(const std::string& path, const std::string& format_flag,
             const std::string& out_path, std::optional<vertex_t> root) {
  const Graph g = load_graph(path, format_flag);
  std::string out;
  if (root) {
    out = std::to_string(bfsw_from(g, *root)) + "\n";
  } else {
    const WidthWitness max = bfsw(g);
    const WidthWitness min = bfsw_min(g);
    out = "bfsw " + std::to_string(max.width) + " " + std::to_string(max.root) + "\n" +
          "bfsw_min " + std::to_string(min.width) + " " + std::to_string(min.root) + "\n";
  }
  emit(out_path, out);
  return 0;
}

int run_cm(const std::string& path, const std::string& format_flag,
           const std::string& out_path, std::optional<vertex_t> start, bool reverse) {
  const Graph g = load_graph(path, format_flag);
  const vertex_t s = start.value_or(pseudo_peripheral_start(g));
  const LinearLayout layout = reverse ? reverse_cuthill_mckee(g, s) : cuthill_mckee(g, s);
  const FileFormat format = resolve_format(format_flag, path);

  const MatrixPattern reordered = reorder_pattern(MatrixPattern::from_graph(g), layout);
  std::vector<std::string> comments;
  {
    std::string order = "order";
    for (vertex_t v : layout.order()) order += " " + std::to_string(v);
    comments.push_back(order);
    comments.push_back("bandwidth " + std::to_string(pattern_bandwidth(reordered)));
  }
  emit(out_path, graph_text(reordered.to_graph(), format, comments));
  return 0;
}

int run_exact(const std::string& path, const std::string& format_flag,
              const std::string& out_path, std::uint64_t node_limit) {
  const Graph g = load_graph(path, format_flag);
  const BandwidthCertificate cert = exact_bandwidth(g, node_limit);
  std::string out = "optimum " + std::to_string(cert.optimum) + "\n";
  out += std::string("time_limit_hit ") + (cert.time_limit_hit ? "true" : "false") + "\n";
  out += "explored_nodes " + std::to_string(cert.explored_nodes) + "\n";
  out += order_line(cert.witness, '#');
  emit(out_path, out);
  return cert.time_limit_hit ? 2 : 0;
}

int run_generate(const std::string& family, int k, int j, int delta, int spine_len, int s,
                 std::size_t n, std::size_t b, double density, std::uint64_t seed,
                 const std::string& format_flag, const std::string& out_path) {
  Graph g;
  if (family == "level-tree") {
    g = level_tree(k, j).graph;
  } else if (family == "mirrored-level-tree") {
    g = mirrored_level_tree(k, j).graph;
  } else if (family == "caterpillar") {
    g = caterpillar(delta, spine_len);
  } else if (family == "star-subdivision") {
    g = star_subdivision(s).graph;
  } else if (family == "path") {
    g = baseline(BaselineKind::path, n);
  } else if (family == "star") {
    g = baseline(BaselineKind::star, n);
  } else if (family == "cycle") {
    g = baseline(BaselineKind::cycle, n);
  } else if (family == "complete") {
    g = baseline(BaselineKind::complete, n);
  } else if (family == "random-banded") {
    g = random_banded(n, b, density, seed).graph;
  } else {
    throw InvalidParams("unknown family '" + family + "'");
  }
  const FileFormat format = format_flag == "mtx" ? FileFormat::mtx : FileFormat::edges;
  emit(out_path, graph_text(g, format, {}));
  return 0;
}

int run_reconstruct(const std::string& path, const std::string& format_flag,
                    const std::string& out_path, vertex_t root) {
  const Graph hidden = load_graph(path, format_flag);
  OracleSession session = open_session(hidden);
  const ReconstructionResult result = reconstruct(session, root);
  const Graph recovered(hidden.vertex_count(), result.edges);

  std::string out = "# root " + std::to_string(result.root) + "\n";
  out += "# queries_used " + std::to_string(result.queries_used) + "\n";
  out += "# candidate_pairs " + std::to_string(result.candidate_pairs) + "\n";
  out += std::string("# exact_match ") +
         (recovered.edges() == hidden.edges() ? "true" : "false") + "\n";
  out += write_edge_list(recovered);
  emit(out_path, out);
  return 0;
}

int run_arcdiagram(const std::string& path, const std::string& format_flag,
                   const std::string& out_path, const std::string& layout_kind,
                   std::optional<vertex_t> start, double unit) {
  const Graph g = load_graph(path, format_flag);
  LinearLayout layout = LinearLayout::identity(g.vertex_count());
  if (layout_kind != "identity") {
    const vertex_t s = start.value_or(pseudo_peripheral_start(g));
    if (layout_kind == "cm") {
      layout = cuthill_mckee(g, s);
    } else if (layout_kind == "rcm") {
      layout = reverse_cuthill_mckee(g, s);
    } else {  // "layer" -- CLI11 restricts the choices
      layout = layer_order_layout(g, s);
    }
  }
  emit(out_path, render_arc_diagram(g, layout, unit));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandkit: BFS width, bandwidth layouts, and distance-oracle tools"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds the pieces it uses.
  std::string path;
  std::string format_flag;
  std::string out_path;
  std::optional<vertex_t> root;
  std::optional<vertex_t> start;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::size_t exact_threshold = 20;

  const auto add_io = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("file", path, "input graph file")->required();
      sub->add_option("--format", format_flag, "input format")
          ->check(CLI::IsMember({"edges", "mtx"}));
    }
    sub->add_option("--out", out_path, "write output here instead of stdout");
  };

  int code = 0;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis report as JSON");
  add_io(analyze_cmd, true);
  analyze_cmd->add_option("--start", start, "CM start / layer-order root");
  analyze_cmd->add_option("--node-limit", node_limit, "exact-search node budget");
  analyze_cmd->add_option("--exact-threshold", exact_threshold,
                          "run the exact solver when n is at most this");
  analyze_cmd->callback([&] {
    code = run_analyze(path, format_flag, out_path, start, exact_threshold, node_limit);
  });

  CLI::App* bfsw_cmd = app.add_subcommand("bfsw", "BFS width extremes, or one root's width");
  add_io(bfsw_cmd, true);
  bfsw_cmd->add_option("--root", root, "report bfsw from this root only");
  bfsw_cmd->callback([&] { code = run_bfsw(path, format_flag, out_path, root); });

  CLI::App* cm_cmd = app.add_subcommand("cm", "Cuthill-McKee reordering");
  add_io(cm_cmd, true);
  cm_cmd->add_option("--start", start, "start vertex (default: pseudo-peripheral)");
  cm_cmd->callback([&] { code = run_cm(path, format_flag, out_path, start, false); });

  CLI::App* rcm_cmd = app.add_subcommand("rcm", "reverse Cuthill-McKee reordering");
  add_io(rcm_cmd, true);
  rcm_cmd->add_option("--start", start, "start vertex (default: pseudo-peripheral)");
  rcm_cmd->callback([&] { code = run_cm(path, format_flag, out_path, start, true); });

  CLI::App* exact_cmd = app.add_subcommand("exact", "exact bandwidth certificate");
  add_io(exact_cmd, true);
  exact_cmd->add_option("--node-limit", node_limit, "search node budget");
  exact_cmd->callback([&] { code = run_exact(path, format_flag, out_path, node_limit); });

  std::string family;
  int k = 2, j = 1, delta = 3, spine_len = 2, s = 2;
  std::size_t n = 2, b = 1;
  double density = 0.5;
  std::uint64_t seed = 1;
  CLI::App* gen_cmd = app.add_subcommand("generate", "write a generated family member");
  gen_cmd->add_option("family", family, "family name")
      ->required()
      ->check(CLI::IsMember({"level-tree", "mirrored-level-tree", "caterpillar",
                             "star-subdivision", "path", "star", "cycle", "complete",
                             "random-banded"}));
  gen_cmd->add_option("-k", k, "level-tree level");
  gen_cmd->add_option("-j", j, "level-tree height exponent");
  gen_cmd->add_option("--delta", delta, "caterpillar spine degree");
  gen_cmd->add_option("--spine-len", spine_len, "caterpillar spine length");
  gen_cmd->add_option("-s", s, "star-subdivision arm parameter");
  gen_cmd->add_option("-n", n, "vertex count (baselines, random-banded)");
  gen_cmd->add_option("-b", b, "random-banded bandwidth bound");
  gen_cmd->add_option("--density", density, "random-banded in-band edge probability");
  gen_cmd->add_option("--seed", seed, "random-banded seed");
  gen_cmd->add_option("--format", format_flag, "output format")
      ->check(CLI::IsMember({"edges", "mtx"}));
  add_io(gen_cmd, false);
  gen_cmd->callback([&] {
    code = run_generate(family, k, j, delta, spine_len, s, n, b, density, seed, format_flag,
                        out_path);
  });

  CLI::App* rec_cmd = app.add_subcommand("reconstruct",
                                         "recover a hidden graph through a distance oracle");
  add_io(rec_cmd, true);
  vertex_t rec_root = 0;
  rec_cmd->add_option("--root", rec_root, "reconstruction root (default 0)");
  rec_cmd->callback([&] { code = run_reconstruct(path, format_flag, out_path, rec_root); });

  std::string layout_kind = "identity";
  double unit = 20.0;
  CLI::App* arc_cmd = app.add_subcommand("arcdiagram", "render an SVG arc diagram");
  add_io(arc_cmd, true);
  arc_cmd->add_option("--layout", layout_kind, "vertex order on the baseline")
      ->check(CLI::IsMember({"identity", "cm", "rcm", "layer"}));
  arc_cmd->add_option("--start", start, "start/root for cm, rcm and layer");
  arc_cmd->add_option("--unit", unit, "pixels per position step");
  arc_cmd->callback([&] {
    code = run_arcdiagram(path, format_flag, out_path, layout_kind, start, unit);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
