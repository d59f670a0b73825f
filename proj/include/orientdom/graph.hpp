#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orientdom {

using VertexId = std::uint32_t;

// Vertex subsets are single 64-bit words: bit v set <=> vertex v in the set.
// Every graph in this library has at most kMaxVertices vertices.
using VertexSet = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline constexpr VertexSet bit(VertexId v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexId lowest(VertexSet s) { return static_cast<VertexId>(std::countr_zero(s)); }

std::vector<VertexId> members(VertexSet s);
VertexSet to_set(std::span<const VertexId> vertices);

struct Edge {
  VertexId u = 0;  // u < v always
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class UndirectedGraph {
 public:
  // Validates and canonicalizes. Pairs may be given in either endpoint order;
  // self-loops, duplicates and out-of-range endpoints throw orientdom::Error.
  static UndirectedGraph build(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
  static UndirectedGraph build(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }

  // Canonical order: lexicographic on (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return static_cast<std::size_t>(popcount(adjacency_[v])); }
  bool adjacent(VertexId u, VertexId v) const { return (adjacency_[u] & bit(v)) != 0; }
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;
  bool has_isolated_vertex() const;

  // Part sizes for complete multipartite graphs built by family(); empty otherwise.
  const std::vector<std::size_t>& parts() const { return parts_; }
  UndirectedGraph with_parts(std::vector<std::size_t> parts) const;

  // Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
  UndirectedGraph induced(VertexSet keep) const;
  UndirectedGraph without_edge(std::size_t edge_index) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::size_t> parts_;
};

class Digraph {
 public:
  // Opposite arcs are allowed; self-loops and duplicate arcs are not.
  static Digraph build(std::size_t n, std::span<const Arc> arcs);
  static Digraph build(std::size_t n, std::initializer_list<Arc> arcs);

  std::size_t order() const { return order_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  VertexSet out_neighbors(VertexId v) const { return out_[v]; }
  VertexSet in_neighbors(VertexId v) const { return in_[v]; }
  VertexSet closed_out(VertexId v) const { return out_[v] | bit(v); }
  VertexSet closed_in(VertexId v) const { return in_[v] | bit(v); }
  std::size_t out_degree(VertexId v) const { return static_cast<std::size_t>(popcount(out_[v])); }
  std::size_t in_degree(VertexId v) const { return static_cast<std::size_t>(popcount(in_[v])); }
  bool has_arc(VertexId u, VertexId v) const { return (out_[u] & bit(v)) != 0; }
  bool has_opposite_arcs() const;

  // Forgets directions. Throws if the digraph has a pair of opposite arcs.
  UndirectedGraph underlying() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// An orientation of a base graph, one direction bit per edge in canonical edge
// order: bit i clear orients edge i from its smaller to its larger endpoint.
// Holds a non-owning pointer to the base graph, which must outlive it.
class Orientation {
 public:
  Orientation(const UndirectedGraph& base, std::uint64_t bits);

  // Recovers the orientation bits of `d` over `base`; throws shape_mismatch if
  // d is not an orientation of base.
  static Orientation of(const UndirectedGraph& base, const Digraph& d);

  const UndirectedGraph& base() const { return *base_; }
  std::uint64_t bits() const { return bits_; }
  Arc arc(std::size_t edge_index) const;
  Digraph digraph() const;

 private:
  const UndirectedGraph* base_;
  std::uint64_t bits_;
};

inline constexpr std::size_t kMaxOrientableEdges = 64;

// Graph families.
struct FamilySpec {
  enum class Kind { path, cycle, complete, empty, multipartite };
  Kind kind = Kind::path;
  std::vector<std::size_t> sizes;  // one entry except for multipartite

  static FamilySpec path(std::size_t n) { return {Kind::path, {n}}; }
  static FamilySpec cycle(std::size_t n) { return {Kind::cycle, {n}}; }
  static FamilySpec complete(std::size_t n) { return {Kind::complete, {n}}; }
  static FamilySpec empty(std::size_t n) { return {Kind::empty, {n}}; }
  static FamilySpec multipartite(std::vector<std::size_t> parts) {
    return {Kind::multipartite, std::move(parts)};
  }
};

// Multipartite vertices are laid out part by part with parts sorted
// ascending. Unsorted part sizes are sorted and a warning is appended to
// `warnings` when given.
UndirectedGraph family(const FamilySpec& spec, std::vector<std::string>* warnings = nullptr);

inline UndirectedGraph path_graph(std::size_t n) { return family(FamilySpec::path(n)); }
inline UndirectedGraph cycle_graph(std::size_t n) { return family(FamilySpec::cycle(n)); }
inline UndirectedGraph complete_graph(std::size_t n) { return family(FamilySpec::complete(n)); }
inline UndirectedGraph empty_graph(std::size_t n) { return family(FamilySpec::empty(n)); }
inline UndirectedGraph multipartite_graph(std::vector<std::size_t> parts) {
  return family(FamilySpec::multipartite(std::move(parts)));
}

}  // namespace orientdom
