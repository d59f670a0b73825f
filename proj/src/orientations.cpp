#include "orientdom/orientations.hpp"

#include <vector>

#include "orientdom/error.hpp"
#include "orientdom/products.hpp"

namespace orientdom {

namespace {

void require_independent(const UndirectedGraph& g, VertexSet set) {
  if (set & ~all_vertices(g.order())) throw Error(Errc::vertex_out_of_range, "independent set has out-of-range vertices");
  for (VertexSet s = set; s; s &= s - 1) {
    if (g.neighbors(lowest(s)) & set) throw Error(Errc::invalid_argument, "vertex set is not independent");
  }
}

}  // namespace

OrientationEnumerator::OrientationEnumerator(const UndirectedGraph& g, std::size_t max_edges) : base_(&g) {
  if (g.size() > max_edges) {
    throw Error(Errc::cap_exceeded, "graph has " + std::to_string(g.size()) + " edges; orientation enumeration is capped at " +
                                        std::to_string(max_edges) + " (raise the cap to override)");
  }
  if (g.size() > 63) throw Error(Errc::cap_exceeded, "orientation enumeration is limited to 63 edges");
}

MaskRange OrientationEnumerator::shard(std::size_t index, std::size_t shards) const {
  if (shards == 0 || index >= shards) throw Error(Errc::invalid_argument, "shard index out of range");
  const std::uint64_t total = count();
  const std::uint64_t base = total / shards;
  const std::uint64_t extra = total % shards;
  auto start = [&](std::uint64_t i) { return i * base + std::min<std::uint64_t>(i, extra); };
  return {start(index), start(index + 1)};
}

Digraph path_join_orientation(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw Error(Errc::invalid_argument, "path_join_orientation needs an even n >= 2");
  const auto hub = static_cast<VertexId>(n);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  // Path vertex x_j has id j - 1.
  for (VertexId i = 0; i < n; ++i) arcs.push_back(i % 2 == 0 ? Arc{hub, i} : Arc{i, hub});
  return Digraph::build(n + 1, arcs);
}

Digraph corona_orientation(const Orientation& g_opt, const UndirectedGraph& h, const Orientation& h_opt) {
  const UndirectedGraph& g = g_opt.base();
  const UndirectedGraph h_join = join(h, complete_graph(1));
  if (!(h_opt.base() == h_join)) {
    throw Error(Errc::shape_mismatch, "block orientation must be an orientation of H + K_1");
  }
  const auto product = corona(g, h);
  const auto apex = static_cast<VertexId>(h.order());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.size(); ++i) arcs.push_back(g_opt.arc(i));
  for (VertexId u = 0; u < g.order(); ++u) {
    const VertexId first = product.map.blocks[u].first;
    auto place = [&](VertexId v) { return v == apex ? u : first + v; };
    for (std::size_t i = 0; i < h_join.size(); ++i) {
      const Arc a = h_opt.arc(i);
      arcs.push_back({place(a.tail), place(a.head)});
    }
  }
  return Digraph::build(product.graph.order(), arcs);
}

Digraph cartesian_orientation(const Orientation& g_opt, const Orientation& h_any, VertexSet independent) {
  const UndirectedGraph& g = g_opt.base();
  const UndirectedGraph& h = h_any.base();
  require_independent(h, independent);
  const ProductVertexMap map(g.order(), h.order());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Arc a = g_opt.arc(i);
    for (VertexId y = 0; y < h.order(); ++y) arcs.push_back({map.id(a.tail, y), map.id(a.head, y)});
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Edge& e = h.edges()[i];
    Arc a = h_any.arc(i);
    if (independent & bit(e.u)) a = {e.u, e.v};
    else if (independent & bit(e.v)) a = {e.v, e.u};
    for (VertexId x = 0; x < g.order(); ++x) arcs.push_back({map.id(x, a.tail), map.id(x, a.head)});
  }
  return Digraph::build(g.order() * h.order(), arcs);
}

Digraph k3_box_k3_orientation() {
  // Grid position (column c, row r), c, r in 0..2, is vertex 3r + c, i.e.
  // (G-vertex r, H-vertex c) in the row-major product layout.
  return Digraph::build(9, {
                               {0, 1}, {1, 2}, {2, 0},  // bottom row
                               {3, 5}, {4, 3}, {5, 4},  // middle row
                               {6, 7}, {7, 8}, {8, 6},  // top row
                               {0, 3}, {3, 6}, {6, 0},  // left column
                               {4, 1}, {7, 4}, {1, 7},  // middle column
                               {2, 5}, {5, 8}, {8, 2},  // right column
                           });
}

Digraph prism_orientation(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_argument, "prism_orientation needs n >= 3");
  const ProductVertexMap map(n, 2);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i) {
    const auto next = static_cast<VertexId>((i + 1) % n);
    arcs.push_back({map.id(i, 0), map.id(next, 0)});
    arcs.push_back({map.id(i, 1), map.id(next, 1)});
    arcs.push_back({map.id(i, 0), map.id(i, 1)});
  }
  return Digraph::build(2 * n, arcs);
}

Digraph lex_orientation(const UndirectedGraph& g, VertexSet independent, const Orientation& h_opt) {
  require_independent(g, independent);
  const UndirectedGraph& h = h_opt.base();
  const ProductVertexMap map(g.order(), h.order());
  std::vector<Arc> arcs;
  for (VertexId x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Arc a = h_opt.arc(i);
      arcs.push_back({map.id(x, a.tail), map.id(x, a.head)});
    }
  }
  for (const Edge& e : g.edges()) {
    // e.u < e.v, so the default direction is from the lower-indexed copy.
    const bool reverse = (independent & bit(e.v)) != 0;
    const VertexId from = reverse ? e.v : e.u;
    const VertexId to = reverse ? e.u : e.v;
    for (VertexId a = 0; a < h.order(); ++a)
      for (VertexId b = 0; b < h.order(); ++b) arcs.push_back({map.id(from, a), map.id(to, b)});
  }
  return Digraph::build(g.order() * h.order(), arcs);
}

Digraph acyclic_lex_cycle_orientation(std::size_t k, std::size_t s) {
  if (k < 2 || s < 2) throw Error(Errc::invalid_argument, "acyclic_lex_cycle_orientation needs k >= 2 and s >= 2");
  const std::size_t layers = 2 * k + 1;
  const ProductVertexMap map(layers, s);
  std::vector<Arc> arcs;
  auto connect = [&](VertexId from, VertexId to) {
    for (VertexId a = 0; a < s; ++a)
      for (VertexId b = 0; b < s; ++b) arcs.push_back({map.id(from, a), map.id(to, b)});
  };
  for (VertexId i = 0; i + 1 < layers; ++i) connect(i, i + 1);
  connect(0, static_cast<VertexId>(layers - 1));
  return Digraph::build(layers * s, arcs);
}

Digraph k222_orientation() {
  // x_1..x_6 are ids 0..5; out-neighbourhoods as listed in the closed
  // out-neighbourhood table.
  return Digraph::build(6, {
                               {0, 4}, {0, 5},  // x1 -> x5, x6
                               {1, 3}, {1, 5},  // x2 -> x4, x6
                               {2, 0}, {2, 1},  // x3 -> x1, x2
                               {3, 0}, {3, 4},  // x4 -> x1, x5
                               {4, 1}, {4, 2},  // x5 -> x2, x3
                               {5, 2}, {5, 3},  // x6 -> x3, x4
                           });
}

}  // namespace orientdom
