#pragma once

// Text formats: whitespace edge lists and Matrix Market coordinate
// pattern symmetric files. Vertex ids are 0-based everywhere except inside
// Matrix Market text, which is 1-based per that format.

#include <string>
#include <string_view>

#include "bandkit/graph.hpp"
#include "bandkit/matrix_pattern.hpp"

namespace bandkit {

/// Parse an edge list: one "u v" pair per line, '#' starts a comment,
/// blank lines ignored. An optional leading "n m" header fixes the vertex
/// count; without one, n = 1 + max id. The first data line is taken as a
/// header exactly when its second number equals the count of remaining data
/// lines and every subsequent id is smaller than its first number.
/// Throws FormatError (with line number) on malformed lines, plus the Graph
/// constructor's InvalidEdge/OutOfRange.
Graph read_edge_list(std::string_view text);

/// Canonical edge-list text: "n m" header, then edges as "u v" with u < v,
/// ascending. read_edge_list(write_edge_list(g)) reproduces g.
std::string write_edge_list(const Graph& g);

/// Parse a "%%MatrixMarket matrix coordinate pattern symmetric" file with
/// 1-based indices into a 0-based pattern. Throws UnsupportedFormat for any
/// other object/format/field/symmetry, DimensionError for non-square sizes,
/// FormatError for malformed text, OutOfRange for out-of-bounds entries.
MatrixPattern read_matrix_market(std::string_view text);

/// Canonical Matrix Market text: lower-triangle entries (row >= column),
/// 1-based, sorted. Round-trips with read_matrix_market.
std::string write_matrix_market(const MatrixPattern& p);

}  // namespace bandkit
