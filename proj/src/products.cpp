#include "orientdom/products.hpp"

#include "orientdom/error.hpp"

namespace orientdom {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void check_product_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(Errc::cap_exceeded, "product would have " + std::to_string(n) + " vertices (limit " +
                                        std::to_string(kMaxVertices) + ")");
  }
}

void append_shifted(EdgeList& edges, const UndirectedGraph& g, VertexId offset) {
  for (const Edge& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
}

}  // namespace

Product<ProductVertexMap> cartesian(const UndirectedGraph& g, const UndirectedGraph& h) {
  check_product_order(g.order() * h.order());
  ProductVertexMap map(g.order(), h.order());
  EdgeList edges;
  for (VertexId x = 0; x < g.order(); ++x)
    for (const Edge& e : h.edges()) edges.emplace_back(map.id(x, e.u), map.id(x, e.v));
  for (const Edge& e : g.edges())
    for (VertexId y = 0; y < h.order(); ++y) edges.emplace_back(map.id(e.u, y), map.id(e.v, y));
  return {UndirectedGraph::build(g.order() * h.order(), edges), map};
}

Product<ProductVertexMap> lexicographic(const UndirectedGraph& g, const UndirectedGraph& h) {
  check_product_order(g.order() * h.order());
  ProductVertexMap map(g.order(), h.order());
  EdgeList edges;
  for (VertexId x = 0; x < g.order(); ++x)
    for (const Edge& e : h.edges()) edges.emplace_back(map.id(x, e.u), map.id(x, e.v));
  for (const Edge& e : g.edges())
    for (VertexId a = 0; a < h.order(); ++a)
      for (VertexId b = 0; b < h.order(); ++b) edges.emplace_back(map.id(e.u, a), map.id(e.v, b));
  return {UndirectedGraph::build(g.order() * h.order(), edges), map};
}

Digraph cartesian_digraph(const Digraph& g, const Digraph& h) {
  check_product_order(g.order() * h.order());
  const ProductVertexMap map(g.order(), h.order());
  std::vector<Arc> arcs;
  for (VertexId x = 0; x < g.order(); ++x)
    for (const Arc& a : h.arcs()) arcs.push_back({map.id(x, a.tail), map.id(x, a.head)});
  for (const Arc& a : g.arcs())
    for (VertexId y = 0; y < h.order(); ++y) arcs.push_back({map.id(a.tail, y), map.id(a.head, y)});
  return Digraph::build(g.order() * h.order(), arcs);
}

Product<GeneralizedLexMap> generalized_lexicographic(const UndirectedGraph& g,
                                                      std::span<const UndirectedGraph> blocks) {
  if (blocks.size() != g.order()) {
    throw Error(Errc::invalid_argument, "generalized lexicographic product needs one graph per vertex of G (got " +
                                            std::to_string(blocks.size()) + ", need " +
                                            std::to_string(g.order()) + ")");
  }
  GeneralizedLexMap map;
  std::size_t n = 0;
  for (const UndirectedGraph& b : blocks) {
    map.blocks.push_back({static_cast<VertexId>(n), b.order()});
    n += b.order();
  }
  check_product_order(n);
  EdgeList edges;
  for (std::size_t u = 0; u < blocks.size(); ++u) append_shifted(edges, blocks[u], map.blocks[u].first);
  for (const Edge& e : g.edges()) {
    const VertexRange& a = map.blocks[e.u];
    const VertexRange& b = map.blocks[e.v];
    for (std::size_t i = 0; i < a.count; ++i)
      for (std::size_t j = 0; j < b.count; ++j)
        edges.emplace_back(static_cast<VertexId>(a.first + i), static_cast<VertexId>(b.first + j));
  }
  return {UndirectedGraph::build(n, edges), map};
}

Product<GeneralizedLexMap> corona(const UndirectedGraph& g, const UndirectedGraph& h) {
  const std::size_t n = g.order() * (1 + h.order());
  check_product_order(n);
  GeneralizedLexMap map;
  EdgeList edges;
  append_shifted(edges, g, 0);
  for (VertexId u = 0; u < g.order(); ++u) {
    const auto first = static_cast<VertexId>(g.order() + u * h.order());
    map.blocks.push_back({first, h.order()});
    append_shifted(edges, h, first);
    for (VertexId i = 0; i < h.order(); ++i) edges.emplace_back(u, first + i);
  }
  return {UndirectedGraph::build(n, edges), map};
}

UndirectedGraph disjoint_union(const UndirectedGraph& g, const UndirectedGraph& h) {
  check_product_order(g.order() + h.order());
  EdgeList edges;
  append_shifted(edges, g, 0);
  append_shifted(edges, h, static_cast<VertexId>(g.order()));
  return UndirectedGraph::build(g.order() + h.order(), edges);
}

UndirectedGraph join(const UndirectedGraph& g, const UndirectedGraph& h) {
  check_product_order(g.order() + h.order());
  EdgeList edges;
  append_shifted(edges, g, 0);
  const auto offset = static_cast<VertexId>(g.order());
  append_shifted(edges, h, offset);
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = 0; b < h.order(); ++b) edges.emplace_back(a, offset + b);
  return UndirectedGraph::build(g.order() + h.order(), edges);
}

}  // namespace orientdom
