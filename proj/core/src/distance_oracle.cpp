#include "bandkit/distance_oracle.hpp"

#include <algorithm>
#include <string>

#include "bandkit/errors.hpp"

namespace bandkit {

std::string OracleSession::transcript_text() const {
  std::string out;
  for (const auto& rec : log_) {
    out += std::to_string(rec.u);
    out += ' ';
    out += std::to_string(rec.v);
    out += ' ';
    out += std::to_string(rec.distance);
    out += '\n';
  }
  return out;
}

OracleSession open_session(const Graph& hidden, bool record_transcript) {
  const std::size_t n = hidden.vertex_count();
  if (n == 0) throw InvalidParams("an oracle session needs at least one vertex");

  OracleSession session;
  session.n_ = n;
  session.record_ = record_transcript;
  session.dist_.assign(n * n, UINT32_MAX);

  std::vector<vertex_t> queue(n);
  for (vertex_t src = 0; src < n; ++src) {
    auto* row = session.dist_.data() + static_cast<std::size_t>(src) * n;
    row[src] = 0;
    queue[0] = src;
    std::size_t head = 0;
    std::size_t tail = 1;
    while (head < tail) {
      const vertex_t u = queue[head++];
      const std::uint32_t next = row[u] + 1;
      for (vertex_t w : hidden.neighbors(u)) {
        if (row[w] == UINT32_MAX) {
          row[w] = next;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw Disconnected("hidden graph is not connected; distances are not all defined");
    }
  }
  return session;
}

std::uint32_t query(OracleSession& session, vertex_t u, vertex_t v) {
  if (u >= session.n_ || v >= session.n_) {
    throw OutOfRange("query endpoint out of range for " + std::to_string(session.n_) +
                     " vertices");
  }
  const std::uint32_t d = session.dist_[static_cast<std::size_t>(u) * session.n_ + v];
  ++session.queries_;
  if (session.record_) session.log_.push_back({u, v, d});
  return d;
}

ReconstructionResult reconstruct(OracleSession& session, vertex_t root) {
  const std::size_t n = session.vertex_count();
  if (root >= n) {
    throw OutOfRange("root " + std::to_string(root) + " out of range for " + std::to_string(n) +
                     " vertices");
  }

  ReconstructionResult result;
  result.root = root;
  const std::uint64_t start_count = session.queries();

  // Pass 1: layer every vertex by its distance to the root.
  std::vector<std::uint32_t> layer(n, 0);
  for (vertex_t u = 0; u < n; ++u) {
    if (u != root) layer[u] = query(session, root, u);
  }
  for (vertex_t u = 0; u < n; ++u) {
    if (u != root && layer[u] == 1) result.edges.emplace_back(std::min(root, u), std::max(root, u));
  }

  // Pass 2: any edge joins vertices in the same or adjacent layers, so
  // probing exactly those pairs (lexicographically) finds every edge.
  for (vertex_t a = 0; a < n; ++a) {
    if (a == root) continue;
    for (vertex_t b = a + 1; b < n; ++b) {
      if (b == root) continue;
      const std::uint32_t da = layer[a];
      const std::uint32_t db = layer[b];
      if ((da > db ? da - db : db - da) > 1) continue;
      ++result.candidate_pairs;
      if (query(session, a, b) == 1) result.edges.emplace_back(a, b);
    }
  }

  std::sort(result.edges.begin(), result.edges.end());
  result.queries_used = session.queries() - start_count;
  return result;
}

}  // namespace bandkit
