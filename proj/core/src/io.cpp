#include "bandkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "bandkit/errors.hpp"

namespace bandkit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Split into whitespace-separated tokens.
std::vector<std::string_view> tokens_of(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

/// Parse the whole token as an unsigned integer, or fail with FormatError.
unsigned long long parse_uint(std::string_view token, std::size_t line_no) {
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("expected a nonnegative integer, got '" + std::string(token) + "'",
                      line_no);
  }
  return value;
}

vertex_t to_vertex(unsigned long long id, std::size_t line_no) {
  if (id > UINT32_MAX) throw FormatError("vertex id " + std::to_string(id) + " too large",
                                         line_no);
  return static_cast<vertex_t>(id);
}

/// Visit each line (1-based numbering) of a text blob.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    f(text.substr(start, end - start), line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  struct Row {
    unsigned long long a;
    unsigned long long b;
    std::size_t line_no;
  };
  std::vector<Row> rows;
  for_each_line(text, [&rows](std::string_view line, std::size_t line_no) {
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) return;
    const auto toks = tokens_of(line);
    if (toks.size() != 2) throw FormatError("expected 'u v'", line_no);
    rows.push_back({parse_uint(toks[0], line_no), parse_uint(toks[1], line_no), line_no});
  });

  // The first row doubles as an "n m" header exactly when its edge count
  // matches and every id is below its n; otherwise it is an edge like any
  // other and n is inferred from the ids.
  bool header = false;
  if (!rows.empty() && rows[0].a >= 1 && rows[0].b == rows.size() - 1) {
    header = std::all_of(rows.begin() + 1, rows.end(), [&rows](const Row& r) {
      return r.a < rows[0].a && r.b < rows[0].a;
    });
  }

  unsigned long long n = 0;
  std::size_t first = 0;
  if (header) {
    n = rows[0].a;
    first = 1;
  } else {
    for (const Row& r : rows) n = std::max({n, r.a + 1, r.b + 1});
  }
  if (n > UINT32_MAX) throw FormatError("vertex count too large", rows.empty() ? 1 : rows[0].line_no);

  std::vector<Edge> edges;
  edges.reserve(rows.size() - first);
  for (std::size_t i = first; i < rows.size(); ++i) {
    edges.emplace_back(to_vertex(rows[i].a, rows[i].line_no), to_vertex(rows[i].b, rows[i].line_no));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  g.for_each_edge([&out](vertex_t u, vertex_t v) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  });
  return out;
}

MatrixPattern read_matrix_market(std::string_view text) {
  struct Row {
    std::vector<std::string_view> toks;
    std::size_t line_no;
  };
  bool banner_seen = false;
  bool size_seen = false;
  std::size_t n = 0;
  unsigned long long declared = 0;
  std::vector<MatrixPattern::Entry> entries;
  std::size_t last_line = 1;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    last_line = line_no;
    if (!banner_seen) {
      const auto toks = tokens_of(trim(line));
      if (toks.size() < 5 || lowercase(toks[0]) != "%%matrixmarket") {
        throw FormatError("expected a MatrixMarket banner", line_no);
      }
      if (lowercase(toks[1]) != "matrix" || lowercase(toks[2]) != "coordinate") {
        throw UnsupportedFormat("only 'matrix coordinate' MatrixMarket files are supported");
      }
      if (lowercase(toks[3]) != "pattern") {
        throw UnsupportedFormat("only 'pattern' fields are supported, got '" +
                                std::string(toks[3]) + "'");
      }
      if (lowercase(toks[4]) != "symmetric") {
        throw UnsupportedFormat("only 'symmetric' patterns are supported, got '" +
                                std::string(toks[4]) + "'");
      }
      banner_seen = true;
      return;
    }
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') return;
    const auto toks = tokens_of(body);
    if (!size_seen) {
      if (toks.size() != 3) throw FormatError("expected 'rows cols nnz'", line_no);
      const auto rows = parse_uint(toks[0], line_no);
      const auto cols = parse_uint(toks[1], line_no);
      declared = parse_uint(toks[2], line_no);
      if (rows != cols) {
        throw DimensionError("pattern must be square, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
      }
      if (rows > UINT32_MAX) throw FormatError("dimension too large", line_no);
      n = static_cast<std::size_t>(rows);
      size_seen = true;
      return;
    }
    if (entries.size() == declared) throw FormatError("more entries than declared", line_no);
    if (toks.size() != 2) throw FormatError("expected '1-based-row 1-based-col'", line_no);
    const auto i = parse_uint(toks[0], line_no);
    const auto j = parse_uint(toks[1], line_no);
    if (i < 1 || j < 1 || i > n || j > n) {
      throw OutOfRange("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") outside a " + std::to_string(n) + "x" + std::to_string(n) + " pattern");
    }
    entries.emplace_back(static_cast<vertex_t>(i - 1), static_cast<vertex_t>(j - 1));
  });

  if (!banner_seen) throw FormatError("expected a MatrixMarket banner", 1);
  if (!size_seen) throw FormatError("missing size line", last_line);
  if (entries.size() != declared) {
    throw FormatError("expected " + std::to_string(declared) + " entries, got " +
                      std::to_string(entries.size()),
                      last_line);
  }
  return MatrixPattern(n, std::move(entries));
}

std::string write_matrix_market(const MatrixPattern& p) {
  // Canonical form: lower triangle (row >= column), 1-based, sorted.
  std::vector<MatrixPattern::Entry> lower;
  lower.reserve(p.nonzeros().size());
  for (const auto& [i, j] : p.nonzeros()) lower.emplace_back(j, i);
  std::sort(lower.begin(), lower.end());

  std::string out = "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out += std::to_string(p.dimension()) + " " + std::to_string(p.dimension()) + " " +
         std::to_string(lower.size()) + "\n";
  for (const auto& [r, c] : lower) {
    out += std::to_string(r + 1);
    out += ' ';
    out += std::to_string(c + 1);
    out += '\n';
  }
  return out;
}

}  // namespace bandkit
