#include "bandkit/generators.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <span>
#include <string>

#include "bandkit/errors.hpp"

namespace bandkit {

namespace {

// ---------------------------------------------------------------------------
// Level trees.
//
// A level-k tree of height exponent j consists of a spine path of height
// 2^j + k - 2 with designated vertices v_0..v_j, where v_i sits at distance
// 2^j - 2^i from the deep end v_j (so v_j is the deep end itself and v_0 is
// k - 1 steps from the shallow end v_s), and a level-(k-1) subtree of height
// 2^i + k - 3 hanging from each v_i. The geometric spacing puts every leaf
// at depth exactly 2^j + k - 2 below v_j.
//
// Each built (sub)tree carries two layout orders:
//   a_order: starts at the deep root v_j and walks the spine toward v_s,
//            interleaving each subtree's own a_order into the spine segment
//            it spans (ceil(n_i / 2^(i-1)) subtree vertices per spine step).
//   b_order: starts at the shallow end v_s and walks toward v_j, again
//            interleaving subtree a_orders (ceil(n_i / 2^i) per step).
// Subtrees are always consumed root-first (their a_order) because they hang
// by their deep roots. Both orders have bandwidth bounded by a constant
// depending only on k; b_order is the tighter one and is what level_tree
// exposes as the canonical layout.

struct Built {
  std::size_t n = 0;
  vertex_t root = 0;     // deep root v_j
  std::size_t height = 0;
  std::vector<vertex_t> spine;    // v_s..v_j
  std::vector<vertex_t> attach;   // v_0..v_j
  std::vector<vertex_t> a_order;
  std::vector<vertex_t> b_order;  // filled only when want_b
};

// Path of `height` edges rooted at its deep end: ids base..base+height with
// v_s = base and the root at base+height.
Built build_path(vertex_t base, std::size_t height, std::vector<Edge>& edges) {
  Built t;
  t.n = height + 1;
  t.root = base + static_cast<vertex_t>(height);
  t.height = height;
  t.a_order.resize(t.n);
  for (std::size_t i = 0; i <= height; ++i) {
    t.a_order[i] = t.root - static_cast<vertex_t>(i);
    if (i < height) edges.emplace_back(base + i, base + i + 1);
  }
  return t;
}

// Appends to `out`: `group` subtree vertices, then one spine vertex, until
// the spine segment is exhausted; leftover spine vertices (after the subtree
// runs dry) simply come out consecutively.
void interleave(std::vector<vertex_t>& out, std::span<const vertex_t> subtree,
                std::span<const vertex_t> spine, std::size_t group) {
  std::size_t next = 0;
  for (vertex_t s : spine) {
    for (std::size_t c = 0; c < group && next < subtree.size(); ++c) {
      out.push_back(subtree[next++]);
    }
    out.push_back(s);
  }
  assert(next == subtree.size());  // group * |spine| >= |subtree| by choice of group
}

Built build_level(int k, int j, vertex_t base, std::vector<Edge>& edges, bool want_b) {
  assert(k >= 2 && j >= 0);
  const std::size_t two_j = std::size_t{1} << j;
  const std::size_t height = two_j + k - 2;

  Built t;
  t.root = base + static_cast<vertex_t>(height);
  t.height = height;
  t.spine.resize(height + 1);
  std::iota(t.spine.begin(), t.spine.end(), base);
  for (std::size_t i = 0; i < height; ++i) edges.emplace_back(base + i, base + i + 1);

  // v_i sits 2^j - 2^i steps before v_j on the spine.
  t.attach.reserve(j + 1);
  for (int i = 0; i <= j; ++i) {
    t.attach.push_back(t.root - static_cast<vertex_t>(two_j - (std::size_t{1} << i)));
  }

  vertex_t next_base = base + static_cast<vertex_t>(height) + 1;
  std::vector<Built> subtrees;
  subtrees.reserve(j + 1);
  for (int i = 0; i <= j; ++i) {
    Built sub = k == 2 ? build_path(next_base, (std::size_t{1} << i) - 1, edges)
                       : build_level(k - 1, i, next_base, edges, false);
    edges.emplace_back(t.attach[i], sub.root);
    next_base += static_cast<vertex_t>(sub.n);
    subtrees.push_back(std::move(sub));
  }
  t.n = next_base - base;

  const auto spine_range = [&](vertex_t from_exclusive, vertex_t to_inclusive) {
    // Spine ids are consecutive, so a segment is just an iota; walking
    // direction decides ascending vs descending.
    std::vector<vertex_t> seg;
    if (from_exclusive < to_inclusive) {
      for (vertex_t v = from_exclusive + 1; v <= to_inclusive; ++v) seg.push_back(v);
    } else {
      for (vertex_t v = from_exclusive - 1; v + 1 > to_inclusive; --v) seg.push_back(v);
    }
    return seg;
  };
  const auto ceil_div = [](std::size_t a, std::size_t b) { return (a + b - 1) / b; };

  // a_order: [v_j], then for i = j..1 subtree i against the segment
  // (v_i -> v_(i-1)], then subtree 0 whole, then the k-1 spine vertices from
  // v_0 down to v_s.
  t.a_order.reserve(t.n);
  t.a_order.push_back(t.root);
  for (int i = j; i >= 1; --i) {
    const auto seg = spine_range(t.attach[i], t.attach[i - 1]);
    interleave(t.a_order, subtrees[i].a_order, seg,
               ceil_div(subtrees[i].n, std::size_t{1} << (i - 1)));
  }
  t.a_order.insert(t.a_order.end(), subtrees[0].a_order.begin(), subtrees[0].a_order.end());
  for (vertex_t v = t.attach[0] - 1; v + 1 > base; --v) t.a_order.push_back(v);
  assert(t.a_order.size() == t.n);

  // b_order: [v_s..v_0], then for i = 0..j-1 subtree i against the segment
  // (v_i -> v_(i+1)], then subtree j whole.
  if (want_b) {
    t.b_order.reserve(t.n);
    for (vertex_t v = base; v <= t.attach[0]; ++v) t.b_order.push_back(v);
    for (int i = 0; i < j; ++i) {
      const auto seg = spine_range(t.attach[i], t.attach[i + 1]);
      interleave(t.b_order, subtrees[i].a_order, seg,
                 ceil_div(subtrees[i].n, std::size_t{1} << i));
    }
    t.b_order.insert(t.b_order.end(), subtrees[j].a_order.begin(), subtrees[j].a_order.end());
    assert(t.b_order.size() == t.n);
  }
  return t;
}

void check_level_params(int k, int j) {
  if (k < 1 || j < 1) {
    throw InvalidParams("level tree requires k >= 1 and j >= 1, got k=" + std::to_string(k) +
                        ", j=" + std::to_string(j));
  }
}

LevelTree path_level_tree(int j) {
  std::vector<Edge> edges;
  Built t = build_path(0, static_cast<std::size_t>(j), edges);
  LevelTree out;
  out.k = 1;
  out.j = j;
  out.graph = Graph(t.n, edges);
  out.canonical_layout = LinearLayout::identity(t.n);
  out.spine.resize(t.n);
  std::iota(out.spine.begin(), out.spine.end(), 0);
  out.height = t.height;
  out.root = t.root;
  return out;
}

}  // namespace

LevelTree level_tree(int k, int j) {
  check_level_params(k, j);
  if (k == 1) return path_level_tree(j);

  std::vector<Edge> edges;
  Built t = build_level(k, j, 0, edges, true);

  LevelTree out;
  out.k = k;
  out.j = j;
  out.graph = Graph(t.n, edges);
  out.canonical_layout = LinearLayout::from_order(std::move(t.b_order));
  out.spine = std::move(t.spine);
  out.subtree_roots = std::move(t.attach);
  out.height = t.height;
  out.root = t.root;
  return out;
}

LevelTree mirrored_level_tree(int k, int j) {
  check_level_params(k, j);
  if (k == 1) {
    // Two reflected paths joined at an end are just a longer path.
    LevelTree out = path_level_tree(2 * j);
    out.j = j;
    out.root = static_cast<vertex_t>(j);  // the shared midpoint
    out.height = static_cast<std::size_t>(j);
    return out;
  }

  std::vector<Edge> edges;
  Built one = build_level(k, j, 0, edges, false);
  Built two = build_level(k, j, static_cast<vertex_t>(one.n), edges, false);

  // Merge copy two's root into copy one's: ids above the duplicate shift
  // down by one.
  const vertex_t dup = two.root;
  const auto remap = [&](vertex_t v) { return v == dup ? one.root : (v > dup ? v - 1 : v); };
  for (auto& [u, v] : edges) {
    u = remap(u);
    v = remap(v);
  }
  const std::size_t n = one.n + two.n - 1;

  LevelTree out;
  out.k = k;
  out.j = j;
  out.graph = Graph(n, edges);
  out.height = one.height;
  out.root = one.root;

  // Layout: copy one's a_order reversed (so the shared root lands in the
  // middle), then copy two's a_order continuing from the root.
  std::vector<vertex_t> order(one.a_order.rbegin(), one.a_order.rend());
  for (std::size_t i = 1; i < two.a_order.size(); ++i) order.push_back(remap(two.a_order[i]));
  out.canonical_layout = LinearLayout::from_order(std::move(order));

  // Spine runs shallow end to shallow end through the shared root.
  out.spine = std::move(one.spine);
  for (auto it = two.spine.rbegin() + 1; it != two.spine.rend(); ++it) {
    out.spine.push_back(remap(*it));
  }

  // Attachment vertices of both copies; the shared root appears once.
  out.subtree_roots = std::move(one.attach);
  for (std::size_t i = 0; i + 1 < two.attach.size(); ++i) {
    out.subtree_roots.push_back(remap(two.attach[i]));
  }
  return out;
}

Graph caterpillar(int delta, int spine_len) {
  if (delta < 2 || spine_len < 2) {
    throw InvalidParams("caterpillar requires delta >= 2 and spine_len >= 2");
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine_len; ++i) {
    edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1));
  }
  vertex_t next = static_cast<vertex_t>(spine_len);
  for (int i = 1; i + 1 < spine_len; ++i) {
    for (int leaf = 0; leaf < delta - 2; ++leaf) {
      edges.emplace_back(static_cast<vertex_t>(i), next++);
    }
  }
  return Graph(next, edges);
}

GraphWithLayout star_subdivision(int s) {
  if (s < 2) throw InvalidParams("star subdivision requires s >= 2");
  const std::size_t su = static_cast<std::size_t>(s);
  const std::size_t n = 2 * su * su + su + 1;

  // Ids: center a = 0; then per path p = 1..s a block of 2s+1 ids holding
  // the subdivision vertices u_(p,1..s), the end vertex b_p, and its s
  // leaves.
  const auto u_id = [&](std::size_t p, std::size_t q) {
    return static_cast<vertex_t>(1 + (p - 1) * (2 * su + 1) + (q - 1));
  };
  const auto b_id = [&](std::size_t p) { return u_id(p, su + 1); };
  const auto leaf_id = [&](std::size_t p, std::size_t l) {
    return static_cast<vertex_t>(b_id(p) + l);  // l = 1..s
  };

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t p = 1; p <= su; ++p) {
    edges.emplace_back(0, u_id(p, 1));
    for (std::size_t q = 1; q < su; ++q) edges.emplace_back(u_id(p, q), u_id(p, q + 1));
    edges.emplace_back(u_id(p, su), b_id(p));
    for (std::size_t l = 1; l <= su; ++l) edges.emplace_back(b_id(p), leaf_id(p, l));
  }

  // Block layout, bandwidth O(s): block s holds the center; every later
  // block t also carries the (s-t)-th subdivision vertex of each path
  // below t, so each path hops one block per step and no edge stretches
  // further than a block and a half.
  std::vector<vertex_t> order;
  order.reserve(n);
  for (std::size_t l = 1; l <= su; ++l) order.push_back(leaf_id(su, l));
  order.push_back(b_id(su));
  order.push_back(0);
  for (std::size_t q = su; q >= 1; --q) order.push_back(u_id(su, q));
  for (std::size_t t = su - 1; t >= 1; --t) {
    for (std::size_t l = 1; l <= su; ++l) order.push_back(leaf_id(t, l));
    order.push_back(b_id(t));
    for (std::size_t i = 1; i < t; ++i) order.push_back(u_id(i, su - t));
    for (std::size_t q = su; q >= su - t; --q) order.push_back(u_id(t, q));
  }

  return GraphWithLayout{Graph(n, edges), LinearLayout::from_order(std::move(order))};
}

Graph baseline(BaselineKind kind, std::size_t n) {
  if (n < 1) throw InvalidParams("baseline families need n >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case BaselineKind::path:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1));
      }
      break;
    case BaselineKind::star:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<vertex_t>(i));
      break;
    case BaselineKind::cycle:
      if (n < 3) throw InvalidParams("a cycle needs n >= 3");
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1));
      }
      edges.emplace_back(0, static_cast<vertex_t>(n - 1));
      break;
    case BaselineKind::complete:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = i + 1; l < n; ++l) {
          edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(l));
        }
      }
      break;
  }
  return Graph(n, edges);
}

GraphWithLayout random_banded(std::size_t n, std::size_t b, double density, std::uint64_t seed) {
  if (b < 1 || b >= n) throw InvalidParams("random_banded requires 1 <= b < n");
  if (!(density > 0.0) || density > 1.0) {
    throw InvalidParams("random_banded requires 0 < density <= 1");
  }

  std::mt19937_64 rng(seed);
  const auto coin = [&rng, density] {
    // Top 53 bits as a uniform double in [0, 1); avoids distribution
    // classes whose output is not pinned by the standard.
    return (rng() >> 11) * 0x1.0p-53 < density;
  };

  std::vector<vertex_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](vertex_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 1; d <= b && i + d < n; ++d) {
      if (coin()) {
        edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(i + d));
        parent[find(static_cast<vertex_t>(i))] = find(static_cast<vertex_t>(i + d));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const vertex_t a = find(static_cast<vertex_t>(i));
    const vertex_t c = find(static_cast<vertex_t>(i + 1));
    if (a != c) {
      edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1));
      parent[a] = c;
    }
  }
  return GraphWithLayout{Graph(n, edges), LinearLayout::identity(n)};
}

}  // namespace bandkit
