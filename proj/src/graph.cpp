#include "orientdom/graph.hpp"

#include <algorithm>
#include <sstream>

#include "orientdom/error.hpp"

namespace orientdom {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::vertex_out_of_range: return "vertex out of range";
    case Errc::self_loop: return "self-loop";
    case Errc::duplicate_edge: return "duplicate edge";
    case Errc::empty_graph: return "empty graph";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse_error: return "parse error";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::shape_mismatch: return "shape mismatch";
  }
  return "unknown";
}

std::vector<VertexId> members(VertexSet s) {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet to_set(std::span<const VertexId> vertices) {
  VertexSet s = 0;
  for (VertexId v : vertices) {
    if (v >= kMaxVertices) throw Error(Errc::vertex_out_of_range, "vertex id exceeds 63");
    s |= bit(v);
  }
  return s;
}

namespace {

void check_order(std::size_t n) {
  if (n == 0) throw Error(Errc::empty_graph, "graphs must have at least one vertex");
  if (n > kMaxVertices) {
    throw Error(Errc::cap_exceeded, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}

std::string pair_text(VertexId u, VertexId v) {
  std::ostringstream os;
  os << '(' << u << ',' << v << ')';
  return os.str();
}

}  // namespace

UndirectedGraph UndirectedGraph::build(std::size_t n,
                                       std::span<const std::pair<VertexId, VertexId>> edges) {
  check_order(n);
  UndirectedGraph g;
  g.order_ = n;
  g.adjacency_.assign(n, 0);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(Errc::vertex_out_of_range, "endpoint out of range in " + pair_text(a, b));
    if (a == b) throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(a));
    if (g.adjacency_[a] & bit(b)) throw Error(Errc::duplicate_edge, "duplicate edge " + pair_text(a, b));
    g.adjacency_[a] |= bit(b);
    g.adjacency_[b] |= bit(a);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

UndirectedGraph UndirectedGraph::build(std::size_t n,
                                       std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

std::optional<std::size_t> UndirectedGraph::edge_index(VertexId u, VertexId v) const {
  if (u >= order_ || v >= order_ || !adjacent(u, v)) return std::nullopt;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  return static_cast<std::size_t>(it - edges_.begin());
}

bool UndirectedGraph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](VertexSet row) { return row == 0; });
}

UndirectedGraph UndirectedGraph::with_parts(std::vector<std::size_t> parts) const {
  UndirectedGraph g = *this;
  g.parts_ = std::move(parts);
  return g;
}

UndirectedGraph UndirectedGraph::induced(VertexSet keep) const {
  keep &= all_vertices(order_);
  std::vector<VertexId> relabel(order_, 0);
  VertexId next = 0;
  for (VertexId v : members(keep)) relabel[v] = next++;
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const Edge& e : edges_) {
    if ((keep & bit(e.u)) && (keep & bit(e.v))) kept.emplace_back(relabel[e.u], relabel[e.v]);
  }
  return build(next, kept);
}

UndirectedGraph UndirectedGraph::without_edge(std::size_t edge_index) const {
  if (edge_index >= edges_.size()) throw Error(Errc::invalid_argument, "edge index out of range");
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != edge_index) kept.emplace_back(edges_[i].u, edges_[i].v);
  }
  return build(order_, kept);
}

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
  check_order(n);
  Digraph d;
  d.order_ = n;
  d.out_.assign(n, 0);
  d.in_.assign(n, 0);
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw Error(Errc::vertex_out_of_range, "arc endpoint out of range in " + pair_text(a.tail, a.head));
    }
    if (a.tail == a.head) throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(a.tail));
    if (d.out_[a.tail] & bit(a.head)) {
      throw Error(Errc::duplicate_edge, "duplicate arc " + pair_text(a.tail, a.head));
    }
    d.out_[a.tail] |= bit(a.head);
    d.in_[a.head] |= bit(a.tail);
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  return d;
}

Digraph Digraph::build(std::size_t n, std::initializer_list<Arc> arcs) {
  return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

bool Digraph::has_opposite_arcs() const {
  for (VertexId v = 0; v < order_; ++v) {
    if (out_[v] & in_[v]) return true;
  }
  return false;
}

UndirectedGraph Digraph::underlying() const {
  if (has_opposite_arcs()) {
    throw Error(Errc::shape_mismatch, "digraph with opposite arcs is not an orientation");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(arcs_.size());
  for (const Arc& a : arcs_) edges.emplace_back(a.tail, a.head);
  return UndirectedGraph::build(order_, edges);
}

Orientation::Orientation(const UndirectedGraph& base, std::uint64_t bits) : base_(&base), bits_(bits) {
  const std::size_t m = base.size();
  if (m > kMaxOrientableEdges) {
    throw Error(Errc::cap_exceeded, "orientations are limited to 64 edges");
  }
  if (m < 64 && (bits >> m) != 0) {
    throw Error(Errc::shape_mismatch, "orientation bits exceed the edge count of the base graph");
  }
}

Orientation Orientation::of(const UndirectedGraph& base, const Digraph& d) {
  if (d.order() != base.order() || d.arc_count() != base.size()) {
    throw Error(Errc::shape_mismatch, "digraph does not match the base graph's order and size");
  }
  std::uint64_t bits = 0;
  const auto& edges = base.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool forward = d.has_arc(edges[i].u, edges[i].v);
    const bool backward = d.has_arc(edges[i].v, edges[i].u);
    if (forward == backward) {
      throw Error(Errc::shape_mismatch, "edge " + pair_text(edges[i].u, edges[i].v) + " is not oriented exactly once");
    }
    if (backward) bits |= std::uint64_t{1} << i;
  }
  return Orientation(base, bits);
}

Arc Orientation::arc(std::size_t edge_index) const {
  const Edge& e = base_->edges().at(edge_index);
  return ((bits_ >> edge_index) & 1) ? Arc{e.v, e.u} : Arc{e.u, e.v};
}

Digraph Orientation::digraph() const {
  std::vector<Arc> arcs;
  arcs.reserve(base_->size());
  for (std::size_t i = 0; i < base_->size(); ++i) arcs.push_back(arc(i));
  return Digraph::build(base_->order(), arcs);
}

UndirectedGraph family(const FamilySpec& spec, std::vector<std::string>* warnings) {
  using Kind = FamilySpec::Kind;
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (spec.kind != Kind::multipartite && spec.sizes.size() != 1) {
    throw Error(Errc::invalid_argument, "family takes exactly one size parameter");
  }
  switch (spec.kind) {
    case Kind::path: {
      const std::size_t n = spec.sizes[0];
      for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return UndirectedGraph::build(n, edges);
    }
    case Kind::cycle: {
      const std::size_t n = spec.sizes[0];
      if (n < 3) throw Error(Errc::invalid_argument, "cycle requires at least 3 vertices");
      for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, static_cast<VertexId>(n - 1));
      return UndirectedGraph::build(n, edges);
    }
    case Kind::complete: {
      const std::size_t n = spec.sizes[0];
      for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return UndirectedGraph::build(n, edges);
    }
    case Kind::empty:
      return UndirectedGraph::build(spec.sizes[0], edges);
    case Kind::multipartite: {
      std::vector<std::size_t> parts = spec.sizes;
      if (parts.size() < 2) throw Error(Errc::invalid_argument, "multipartite needs at least two parts");
      if (std::find(parts.begin(), parts.end(), std::size_t{0}) != parts.end()) {
        throw Error(Errc::invalid_argument, "multipartite part sizes must be positive");
      }
      if (!std::is_sorted(parts.begin(), parts.end())) {
        std::sort(parts.begin(), parts.end());
        if (warnings) warnings->push_back("multipartite part sizes were not non-decreasing; sorted");
      }
      std::size_t n = 0;
      for (std::size_t p : parts) n += p;
      if (n > kMaxVertices) throw Error(Errc::cap_exceeded, "multipartite graph too large");
      std::vector<std::size_t> part_of;
      for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
      for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
          if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
      return UndirectedGraph::build(n, edges).with_parts(std::move(parts));
    }
  }
  throw Error(Errc::invalid_argument, "unknown family");
}

}  // namespace orientdom
