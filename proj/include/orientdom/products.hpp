#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom {

// Row-major layout of V(G) x V(H): vertex (g, h) gets id g * n(H) + h.
class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  ProductVertexMap(std::size_t g_order, std::size_t h_order) : g_order_(g_order), h_order_(h_order) {}

  std::size_t g_order() const { return g_order_; }
  std::size_t h_order() const { return h_order_; }
  VertexId id(VertexId g, VertexId h) const { return static_cast<VertexId>(g * h_order_ + h); }
  std::pair<VertexId, VertexId> coords(VertexId id) const {
    return {static_cast<VertexId>(id / h_order_), static_cast<VertexId>(id % h_order_)};
  }

 private:
  std::size_t g_order_ = 0;
  std::size_t h_order_ = 0;
};

struct VertexRange {
  VertexId first = 0;
  std::size_t count = 0;

  VertexSet set() const { return all_vertices(count) << first; }
};

// For each vertex u of the outer graph, the block of product vertices that
// replaced (generalized lexicographic) or was attached to (corona) u.
struct GeneralizedLexMap {
  std::vector<VertexRange> blocks;
};

template <typename Map>
struct Product {
  UndirectedGraph graph;
  Map map;
};

Product<ProductVertexMap> cartesian(const UndirectedGraph& g, const UndirectedGraph& h);
Product<ProductVertexMap> lexicographic(const UndirectedGraph& g, const UndirectedGraph& h);

// Cartesian product of digraphs: arcs (x,a)->(x,b) for a->b and (x,a)->(y,a)
// for x->y, same layout as the undirected product.
Digraph cartesian_digraph(const Digraph& g, const Digraph& h);

// `blocks` is indexed by V(G); blocks are laid out consecutively in that order.
Product<GeneralizedLexMap> generalized_lexicographic(const UndirectedGraph& g,
                                                      std::span<const UndirectedGraph> blocks);

// Vertices 0..n(G)-1 are G; the copy H_u occupies map.blocks[u].
Product<GeneralizedLexMap> corona(const UndirectedGraph& g, const UndirectedGraph& h);

// Vertices of G first, then vertices of H shifted by n(G).
UndirectedGraph join(const UndirectedGraph& g, const UndirectedGraph& h);

// Disjoint union with the same layout as join().
UndirectedGraph disjoint_union(const UndirectedGraph& g, const UndirectedGraph& h);

}  // namespace orientdom
