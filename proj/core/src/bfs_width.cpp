#include "bandkit/bfs_width.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "bandkit/errors.hpp"

namespace bandkit {

namespace {

void check_root(const Graph& g, vertex_t root) {
  if (root >= g.vertex_count()) {
    throw OutOfRange("root " + std::to_string(root) + " out of range for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

[[noreturn]] void throw_unreachable() {
  throw Disconnected("graph is not connected: some vertex is unreachable from the root");
}

/// Scratch space for repeated width-only BFS runs over one graph. The queue
/// doubles as the visit log; levels are contiguous ranges of it.
///
/// The all-roots sweep is the hottest loop in the library (Theta(n(n+m))),
/// so this path is tuned: one-byte visit marks versioned by epoch, a 32-bit
/// copy of the CSR row offsets, and a branchless enqueue (the visited test
/// is close to a coin flip on graphs with long thin levels, which makes a
/// conditional branch mispredict-bound).
struct WidthScratch {
  std::vector<vertex_t> queue;  // n+1 slots: the branchless store may touch one past the count
  std::vector<std::uint8_t> mark;
  std::vector<std::uint32_t> offsets;
  const vertex_t* adjacency = nullptr;
  std::size_t n = 0;
  std::uint8_t epoch = 0;

  explicit WidthScratch(const Graph& g)
      : queue(g.vertex_count() + 1), mark(g.vertex_count(), 0), n(g.vertex_count()) {
    offsets.resize(n + 1);
    std::size_t running = 0;
    offsets[0] = 0;
    for (vertex_t v = 0; v < n; ++v) {
      running += g.degree(v);
      offsets[v + 1] = static_cast<std::uint32_t>(running);
    }
    // 2m always fits in 32 bits when vertex ids do and the graph is simple,
    // but keep an explicit guard against pathological future widening.
    if (running > UINT32_MAX) {
      throw InvalidParams("adjacency too large for the BFS width sweep");
    }
    adjacency = n == 0 ? nullptr : g.neighbors(0).data();
  }

  std::size_t width_from(vertex_t root) {
    if (++epoch == 0) {
      std::fill(mark.begin(), mark.end(), std::uint8_t{0});
      epoch = 1;
    }
    const std::uint8_t here = epoch;
    const std::uint32_t* __restrict off = offsets.data();
    const vertex_t* __restrict adj = adjacency;
    std::uint8_t* __restrict mk = mark.data();
    vertex_t* __restrict q = queue.data();

    q[0] = root;
    mk[root] = here;
    std::size_t begin = 0;
    std::size_t end = 1;
    std::size_t width = 1;
    while (begin < end) {
      std::size_t next_end = end;
      for (std::size_t i = begin; i < end; ++i) {
        const vertex_t v = q[i];
        const std::uint32_t hi = off[v + 1];
        for (std::uint32_t t = off[v]; t < hi; ++t) {
          const vertex_t w = adj[t];
          const bool fresh = mk[w] != here;
          q[next_end] = w;
          mk[w] = here;
          next_end += fresh;
        }
      }
      if (next_end - end > width) width = next_end - end;
      begin = end;
      end = next_end;
    }
    if (end != n) throw_unreachable();
    return width;
  }
};

}  // namespace

Layering bfs_layering(const Graph& g, vertex_t root) {
  check_root(g, root);
  const std::size_t n = g.vertex_count();

  Layering out;
  out.root = root;
  out.layer_of.assign(n, UINT32_MAX);
  out.layer_of[root] = 0;

  std::vector<vertex_t> queue(n);
  queue[0] = root;
  std::size_t head = 0;
  std::size_t tail = 1;
  std::uint32_t deepest = 0;
  while (head < tail) {
    const vertex_t u = queue[head++];
    const std::uint32_t next_layer = out.layer_of[u] + 1;
    for (vertex_t w : g.neighbors(u)) {
      if (out.layer_of[w] == UINT32_MAX) {
        out.layer_of[w] = next_layer;
        deepest = next_layer;
        queue[tail++] = w;
      }
    }
  }
  if (tail != n) throw_unreachable();

  // Bucket vertices by layer in ascending id order.
  out.layers.resize(deepest + 1);
  std::vector<std::size_t> sizes(deepest + 1, 0);
  for (vertex_t v = 0; v < n; ++v) ++sizes[out.layer_of[v]];
  for (std::uint32_t d = 0; d <= deepest; ++d) {
    out.layers[d].reserve(sizes[d]);
    out.width = std::max(out.width, sizes[d]);
  }
  for (vertex_t v = 0; v < n; ++v) out.layers[out.layer_of[v]].push_back(v);
  return out;
}

std::size_t bfsw_from(const Graph& g, vertex_t root) {
  check_root(g, root);
  WidthScratch scratch(g);
  return scratch.width_from(root);
}

std::vector<std::size_t> bfs_width_per_root(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidParams("BFS width sweep is undefined for the empty graph");

  std::vector<std::size_t> widths(n);
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, n));

  if (workers == 1) {
    WidthScratch scratch(g);
    for (vertex_t v = 0; v < n; ++v) widths[v] = scratch.width_from(v);
    return widths;
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> disconnected{false};
  constexpr std::size_t kChunk = 32;
  auto work = [&] {
    WidthScratch scratch(g);
    while (!disconnected.load(std::memory_order_relaxed)) {
      const std::size_t first = cursor.fetch_add(kChunk, std::memory_order_relaxed);
      if (first >= n) return;
      const std::size_t last = std::min(first + kChunk, n);
      for (std::size_t v = first; v < last; ++v) {
        try {
          widths[v] = scratch.width_from(static_cast<vertex_t>(v));
        } catch (const Disconnected&) {
          disconnected.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (disconnected.load()) throw_unreachable();
  return widths;
}

WidthWitness bfsw(const Graph& g) {
  const auto widths = bfs_width_per_root(g);
  WidthWitness best{widths[0], 0};
  for (vertex_t v = 1; v < widths.size(); ++v) {
    if (widths[v] > best.width) best = {widths[v], v};
  }
  return best;
}

WidthWitness bfsw_min(const Graph& g) {
  const auto widths = bfs_width_per_root(g);
  WidthWitness best{widths[0], 0};
  for (vertex_t v = 1; v < widths.size(); ++v) {
    if (widths[v] < best.width) best = {widths[v], v};
  }
  return best;
}

LinearLayout layer_order_layout(const Graph& g, vertex_t root) {
  const Layering layering = bfs_layering(g, root);
  std::vector<vertex_t> order;
  order.reserve(g.vertex_count());
  for (const auto& layer : layering.layers) {
    order.insert(order.end(), layer.begin(), layer.end());
  }
  return LinearLayout::from_order(std::move(order));
}

}  // namespace bandkit
