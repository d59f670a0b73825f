#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom {

struct IndependentSetResult {
  std::size_t value = 0;
  VertexSet witness = 0;
  std::uint64_t nodes_explored = 0;
};

struct MatchingResult {
  std::size_t value = 0;
  std::vector<Edge> witness;
};

struct CoverNumbers {
  std::size_t beta = 0;
  std::optional<std::size_t> beta_prime;  // absent when G has an isolated vertex
};

struct Bipartition {
  VertexSet left = 0;
  VertexSet right = 0;
};

struct BipartiteCheck {
  bool bipartite = false;
  std::optional<Bipartition> parts;
};

struct InducedBipartiteResult {
  std::size_t value = 0;
  VertexSet witness = 0;
  Bipartition parts;
};

struct AcyclicCheck {
  bool acyclic = false;
  std::vector<VertexId> order;  // topological order when acyclic
  std::vector<VertexId> cycle;  // directed cycle v0 -> v1 -> ... -> v0 otherwise
};

struct InvariantReport {
  std::size_t alpha = 0;
  std::size_t alpha_prime = 0;
  std::size_t beta = 0;
  std::optional<std::size_t> beta_prime;
  std::size_t bip = 0;
  bool is_bipartite = false;
};

// Exact alpha(G). Branch and bound on a highest-degree candidate with a greedy
// clique-cover bound; the witness is the first optimum found.
IndependentSetResult independence_number(const UndirectedGraph& g);

// Exact alpha'(G) for general graphs by exhaustive search with pruning.
MatchingResult matching_number(const UndirectedGraph& g);

CoverNumbers cover_numbers(const UndirectedGraph& g);

BipartiteCheck is_bipartite(const UndirectedGraph& g);

// Whether the subgraph induced by `subset` is bipartite.
bool induces_bipartite(const UndirectedGraph& g, VertexSet subset, Bipartition* parts = nullptr);

inline constexpr std::size_t kDefaultBipCap = 20;

// bip(G), the order of a largest induced bipartite subgraph. Throws
// cap_exceeded for n > max_order.
InducedBipartiteResult max_induced_bipartite_order(const UndirectedGraph& g,
                                                   std::size_t max_order = kDefaultBipCap);

AcyclicCheck is_acyclic(const Digraph& d);

InvariantReport invariants(const UndirectedGraph& g, std::size_t bip_cap = kDefaultBipCap);

}  // namespace orientdom
