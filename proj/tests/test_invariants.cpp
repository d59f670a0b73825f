#include <doctest.h>

#include <bit>

#include "orientdom/invariants.hpp"
#include "orientdom/orientations.hpp"
#include "support.hpp"

using namespace orientdom;

namespace {

std::size_t brute_vertex_cover(const UndirectedGraph& g) {
  std::size_t best = g.order();
  for (VertexSet s = 0; s <= all_vertices(g.order()); ++s) {
    bool covers = true;
    for (const Edge& e : g.edges()) covers &= ((s >> e.u) & 1) || ((s >> e.v) & 1);
    if (covers) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

std::size_t brute_edge_cover(const UndirectedGraph& g) {
  std::size_t best = g.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
    VertexSet touched = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (m >> i & 1) touched |= bit(g.edges()[i].u) | bit(g.edges()[i].v);
    if (touched == all_vertices(g.order())) best = std::min<std::size_t>(best, std::popcount(m));
  }
  return best;
}

}  // namespace

TEST_CASE("alpha, alpha', bip and bipartiteness agree with brute force") {
  for (const auto& g : testing::corpus(11, 120, 9, 16)) {
    const auto p = testing::pairs(g);
    const auto a = independence_number(g);
    CHECK(a.value == oracle::alpha(g.order(), p));
    CHECK(static_cast<std::size_t>(popcount(a.witness)) == a.value);
    CHECK(oracle::independent(oracle::adjacency(g.order(), p), a.witness));

    const auto m = matching_number(g);
    CHECK(m.value == oracle::matching(p));
    REQUIRE(m.witness.size() == m.value);
    VertexSet used = 0;
    for (const Edge& e : m.witness) {
      CHECK(g.adjacent(e.u, e.v));
      CHECK((used & (bit(e.u) | bit(e.v))) == 0);
      used |= bit(e.u) | bit(e.v);
    }

    const auto b = max_induced_bipartite_order(g);
    CHECK(b.value == oracle::bip(g.order(), p));
    CHECK(induces_bipartite(g, b.witness));
    CHECK(static_cast<std::size_t>(popcount(b.witness)) == b.value);

    const auto bc = is_bipartite(g);
    CHECK(bc.bipartite == oracle::bipartite_subset(g.order(), p, all_vertices(g.order())));
    if (bc.bipartite) {
      REQUIRE(bc.parts.has_value());
      CHECK((bc.parts->left | bc.parts->right) == all_vertices(g.order()));
      CHECK((bc.parts->left & bc.parts->right) == 0);
      for (const Edge& e : g.edges()) CHECK(((bc.parts->left >> e.u) & 1) != ((bc.parts->left >> e.v) & 1));
    }
  }
}

TEST_CASE("Gallai identities hold with independently computed covers") {
  for (const auto& g : testing::corpus(12, 80, 8, 14)) {
    const auto c = cover_numbers(g);
    CHECK(c.beta == brute_vertex_cover(g));
    CHECK(independence_number(g).value + c.beta == g.order());
    CHECK(c.beta_prime.has_value() == !g.has_isolated_vertex());
    if (c.beta_prime) {
      CHECK(*c.beta_prime == brute_edge_cover(g));
      CHECK(matching_number(g).value + *c.beta_prime == g.order());
    }
  }
}

TEST_CASE("small invariants") {
  CHECK(independence_number(complete_graph(5)).value == 1);
  CHECK(independence_number(cycle_graph(7)).value == 3);
  CHECK(matching_number(cycle_graph(7)).value == 3);
  CHECK(matching_number(complete_graph(1)).value == 0);
  CHECK(max_induced_bipartite_order(complete_graph(5)).value == 2);
  CHECK(max_induced_bipartite_order(cycle_graph(5)).value == 4);
  CHECK(is_bipartite(cycle_graph(6)).bipartite);
  CHECK_FALSE(is_bipartite(cycle_graph(5)).bipartite);
  CHECK(testing::error_of([] { max_induced_bipartite_order(empty_graph(21)); }) == Errc::cap_exceeded);
  CHECK(max_induced_bipartite_order(empty_graph(21), 21).value == 21);

  const auto r = invariants(path_graph(4));
  CHECK(r.alpha == 2);
  CHECK(r.alpha_prime == 2);
  CHECK(r.beta == 2);
  CHECK(r.beta_prime == 2);
  CHECK(r.bip == 4);
  CHECK(r.is_bipartite);
}

TEST_CASE("acyclicity: order is topological, cycle is a real cycle") {
  auto check = [](const Digraph& d) {
    const auto a = is_acyclic(d);
    if (a.acyclic) {
      REQUIRE(a.order.size() == d.order());
      std::vector<std::size_t> pos(d.order(), d.order());
      for (std::size_t i = 0; i < a.order.size(); ++i) pos[a.order[i]] = i;
      for (std::size_t v = 0; v < d.order(); ++v) CHECK(pos[v] < d.order());
      for (const Arc& arc : d.arcs()) CHECK(pos[arc.tail] < pos[arc.head]);
    } else {
      REQUIRE(a.cycle.size() >= 2);
      for (std::size_t i = 0; i < a.cycle.size(); ++i)
        CHECK(d.has_arc(a.cycle[i], a.cycle[(i + 1) % a.cycle.size()]));
    }
    return a.acyclic;
  };
  CHECK(check(Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(check(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK_FALSE(check(Digraph::build(4, {{3, 0}, {1, 2}, {2, 1}})));
  for (const auto& g : testing::corpus(13, 40, 7, 12))
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); m += 5) check(Orientation(g, m).digraph());
  CHECK(is_acyclic(acyclic_lex_cycle_orientation(2, 2)).acyclic);
}
