#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "orientdom/graph.hpp"

namespace orientdom {

// Result of an exact search. gamma/rho fill witness_set; dom fills
// witness_orientation with orientation bits over the canonical edge order.
struct DomResult {
  std::size_t value = 0;
  VertexSet witness_set = 0;
  std::optional<std::uint64_t> witness_orientation;
  std::uint64_t nodes_explored = 0;
  std::map<std::string, std::uint64_t> pruned_by;
};

bool is_dominating(const Digraph& d, VertexSet s);
bool is_packing(const Digraph& d, VertexSet p);

// Exact gamma(D): branch on the undominated vertex with the fewest possible
// dominators; bound by counting undominated vertices whose dominator sets are
// pairwise disjoint.
DomResult gamma(const Digraph& d);

// Exact rho(D) as the independence number of the conflict graph in which two
// vertices clash when joined by an arc or sharing an in-neighbour.
DomResult rho(const Digraph& d);
UndirectedGraph packing_conflict_graph(const Digraph& d);

namespace detail {

// Low-level dominating-set search over closed out/in rows, shared by gamma()
// and the DOM search. Both spans have length n.
class DominatingSetSearch {
 public:
  DominatingSetSearch(std::span<const VertexSet> closed_out, std::span<const VertexSet> closed_in);

  // Some dominating set of size <= limit, if one exists.
  std::optional<VertexSet> find_within(std::size_t limit);

  // A minimum dominating set (first optimum in branching order).
  VertexSet minimum();

  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(VertexSet chosen, VertexSet dominated, VertexSet excluded, std::size_t size);
  VertexSet greedy() const;

  std::span<const VertexSet> out_;
  std::span<const VertexSet> in_;
  VertexSet all_ = 0;
  std::size_t best_size_ = 0;
  VertexSet best_ = 0;
  bool found_ = false;
  bool stop_on_first_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

}  // namespace orientdom
