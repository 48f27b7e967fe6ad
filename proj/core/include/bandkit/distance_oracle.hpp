#pragma once

// Distance-oracle sessions with query accounting, and reconstruction of a
// hidden connected graph from distance queries alone. The query count is
// bounded by (n-1) + (n-1)(3B-1)/2 where B is the BFS width of the hidden
// graph from the chosen root.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bandkit/graph.hpp"

namespace bandkit {

/// One answered distance query.
struct QueryRecord {
  vertex_t u = 0;
  vertex_t v = 0;
  std::uint32_t distance = 0;
};

/// A stateful oracle over a hidden graph: answers shortest-path-distance
/// queries and counts them. Distances are precomputed (n BFS runs, n^2
/// table), so sessions are meant for moderate n. Single writer; concurrent
/// reconstructions need separate sessions.
class OracleSession {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t queries() const noexcept { return queries_; }

  /// Recorded queries, in order, when transcript recording is on.
  std::span<const QueryRecord> transcript() const noexcept { return log_; }

  /// The transcript as audit text, one "u v d" line per query.
  std::string transcript_text() const;

 private:
  friend OracleSession open_session(const Graph& hidden, bool record_transcript);
  friend std::uint32_t query(OracleSession& session, vertex_t u, vertex_t v);

  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;  // row-major n x n
  std::uint64_t queries_ = 0;
  bool record_ = false;
  std::vector<QueryRecord> log_;
};

/// Precompute all pairwise distances of the hidden graph and start a session
/// with a zero query counter. Throws Disconnected.
OracleSession open_session(const Graph& hidden, bool record_transcript = false);

/// dist(u, v); every call counts, including u == v (which returns 0).
/// Throws OutOfRange.
std::uint32_t query(OracleSession& session, vertex_t u, vertex_t v);

/// What reconstruction recovered and what it cost.
struct ReconstructionResult {
  std::vector<Edge> edges;  // ascending (u, v), u < v
  std::uint64_t queries_used = 0;
  vertex_t root = 0;
  std::uint64_t candidate_pairs = 0;  // queries_used == (n-1) + candidate_pairs
};

/// Reconstruct the hidden graph exactly: query dist(root, u) for every
/// other vertex, then query every pair of non-root vertices whose distances
/// to the root differ by at most 1 (in lexicographic order); the edges are
/// precisely the pairs at distance 1. Throws OutOfRange.
ReconstructionResult reconstruct(OracleSession& session, vertex_t root);

}  // namespace bandkit
