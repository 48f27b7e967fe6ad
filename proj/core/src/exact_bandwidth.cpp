#include "bandkit/exact_bandwidth.hpp"

#include <algorithm>
#include <numeric>

#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/errors.hpp"

namespace bandkit {

namespace {

constexpr position_t kUnplaced = UINT32_MAX;

enum class Verdict { yes, no, budget };

/// Depth-first search for a layout of bandwidth <= b, filling positions left
/// to right. A partial layout dies as soon as either a new vertex lands more
/// than b positions after a placed neighbor, or some placed vertex has more
/// unplaced neighbors than it has positions left within reach.
class Search {
 public:
  Search(const Graph& g, std::size_t b, std::uint64_t node_limit, std::uint64_t& explored)
      : g_(g),
        b_(b),
        node_limit_(node_limit),
        explored_(explored),
        pos_(g.vertex_count(), kUnplaced),
        at_(g.vertex_count(), 0),
        pending_(g.vertex_count()) {
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
      pending_[v] = static_cast<std::uint32_t>(g.degree(v));
    }
  }

  Verdict run() { return extend(0); }

  /// Only valid after run() returned Verdict::yes.
  LinearLayout layout() const { return LinearLayout::from_order(at_); }

 private:
  Verdict extend(std::size_t p) {
    const std::size_t n = g_.vertex_count();
    if (p == n) return Verdict::yes;

    // Candidates in decreasing placed-neighbor count, ties by id. Every
    // unplaced vertex is tried, so the search stays exhaustive.
    std::vector<vertex_t> candidates;
    candidates.reserve(n - p);
    for (vertex_t v = 0; v < n; ++v) {
      if (pos_[v] == kUnplaced) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [this](vertex_t a, vertex_t c) {
      return g_.degree(a) - pending_[a] > g_.degree(c) - pending_[c];
    });

    for (vertex_t v : candidates) {
      if (explored_ >= node_limit_) return Verdict::budget;
      ++explored_;

      bool ok = true;
      for (vertex_t u : g_.neighbors(v)) {
        if (pos_[u] != kUnplaced && p - pos_[u] > b_) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      pos_[v] = static_cast<position_t>(p);
      at_[p] = v;
      for (vertex_t u : g_.neighbors(v)) --pending_[u];

      // Every placed vertex w must still fit its unplaced neighbors into
      // the open positions p+1 .. pos(w)+b; only w within the last b
      // positions can be tight.
      const std::size_t low = p > b_ ? p - b_ : 0;
      for (std::size_t q = low; ok && q <= p; ++q) {
        const vertex_t w = at_[q];
        if (pending_[w] > q + b_ - p) ok = false;
      }

      if (ok) {
        const Verdict sub = extend(p + 1);
        if (sub != Verdict::no) return sub;
      }

      for (vertex_t u : g_.neighbors(v)) ++pending_[u];
      pos_[v] = kUnplaced;
    }
    return Verdict::no;
  }

  const Graph& g_;
  const std::size_t b_;
  const std::uint64_t node_limit_;
  std::uint64_t& explored_;
  std::vector<position_t> pos_;
  std::vector<vertex_t> at_;
  std::vector<std::uint32_t> pending_;  // vertex -> unplaced neighbor count
};

}  // namespace

BandwidthCertificate exact_bandwidth(const Graph& g, std::uint64_t node_limit) {
  if (!is_connected(g)) throw Disconnected("exact bandwidth requires a connected graph");

  BandwidthCertificate cert;
  cert.witness = cuthill_mckee(g, pseudo_peripheral_start(g));
  cert.optimum = layout_bandwidth(g, cert.witness);
  const std::size_t lower = std::max(degree_lower_bound(g), local_density_lower_bound(g));

  for (std::size_t b = lower; b < cert.optimum; ++b) {
    Search search(g, b, node_limit, cert.explored_nodes);
    const Verdict verdict = search.run();
    if (verdict == Verdict::yes) {
      cert.optimum = b;  // b-1 was infeasible (or b == lower), so this is exact
      cert.witness = search.layout();
      return cert;
    }
    if (verdict == Verdict::budget) {
      cert.time_limit_hit = true;  // best-so-far upper bound stands
      return cert;
    }
  }
  return cert;
}

bool is_bandwidth_at_most(const Graph& g, std::size_t b, std::uint64_t node_limit) {
  if (!is_connected(g)) throw Disconnected("bandwidth decision requires a connected graph");
  const std::size_t n = g.vertex_count();
  if (b + 1 >= n) return true;  // every layout has bandwidth <= n-1
  if (b < degree_lower_bound(g)) return false;

  std::uint64_t explored = 0;
  Search search(g, b, node_limit, explored);
  switch (search.run()) {
    case Verdict::yes:
      return true;
    case Verdict::no:
      return false;
    default:
      throw Indeterminate("node limit exhausted before deciding bandwidth <= " +
                          std::to_string(b));
  }
}

}  // namespace bandkit
