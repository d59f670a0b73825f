#include <doctest.h>

#include <random>

#include "orientdom/domination.hpp"
#include "orientdom/invariants.hpp"
#include "orientdom/orientations.hpp"
#include "orientdom/products.hpp"
#include "support.hpp"

using namespace orientdom;

namespace {

// Random digraphs, opposite arcs included.
std::vector<Digraph> random_digraphs(std::uint64_t seed, std::size_t count, std::size_t max_order) {
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_order)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (u != v && std::bernoulli_distribution(p)(rng)) arcs.push_back({u, v});
    out.push_back(Digraph::build(n, arcs));
  }
  return out;
}

}  // namespace

TEST_CASE("gamma and rho match brute force on random digraphs") {
  for (const auto& d : random_digraphs(41, 300, 11)) {
    const auto arcs = testing::pairs(d);
    const DomResult g = gamma(d);
    CHECK(g.value == oracle::gamma(d.order(), arcs));
    CHECK(is_dominating(d, g.witness_set));
    CHECK(static_cast<std::size_t>(popcount(g.witness_set)) == g.value);

    const DomResult r = rho(d);
    CHECK(r.value == oracle::rho(d.order(), arcs));
    CHECK(is_packing(d, r.witness_set));
    CHECK(static_cast<std::size_t>(popcount(r.witness_set)) == r.value);
    CHECK(r.value <= g.value);
  }
}

TEST_CASE("gamma on larger orientations stays consistent with its witness") {
  for (const auto& g : testing::corpus(42, 20, 20, 40)) {
    std::mt19937_64 rng(g.size());
    const std::uint64_t mask = g.size() ? rng() & ((std::uint64_t{1} << g.size()) - 1) : 0;
    const Digraph d = Orientation(g, mask).digraph();
    const DomResult r = gamma(d);
    CHECK(is_dominating(d, r.witness_set));
    // No dominating set one smaller: dropping any witness vertex breaks it.
    for (VertexId v : members(r.witness_set)) CHECK_FALSE(is_dominating(d, r.witness_set & ~bit(v)));
  }
}

TEST_CASE("basic values") {
  CHECK(gamma(Digraph::build(4, {})).value == 4);
  CHECK(rho(Digraph::build(4, {})).value == 4);
  const auto c3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(gamma(c3).value == 2);
  CHECK(rho(c3).value == 1);
  const auto star = Digraph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(gamma(star).value == 1);
  CHECK(gamma(cartesian_digraph(c3, c3)).value == 3);
}

TEST_CASE("membership predicates") {
  const auto p = Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(is_dominating(p, bit(0) | bit(2)));
  CHECK_FALSE(is_dominating(p, bit(1) | bit(2)));
  CHECK(is_packing(p, bit(0) | bit(3)));
  CHECK_FALSE(is_packing(p, bit(0) | bit(1)));
  CHECK(is_packing(p, bit(0) | bit(2)));
  CHECK_FALSE(is_packing(p, bit(1) | bit(2)));
  CHECK(is_packing(p, 0));
}

TEST_CASE("packing conflict graph") {
  const auto d = Digraph::build(4, {{0, 1}, {0, 2}, {3, 2}});
  const auto c = packing_conflict_graph(d);
  CHECK(c.adjacent(0, 1));
  CHECK(c.adjacent(1, 2));
  CHECK(c.adjacent(2, 3));
  CHECK_FALSE(c.adjacent(0, 3));
  CHECK_FALSE(c.adjacent(1, 3));
}

TEST_CASE("rho equals gamma on every orientation of small trees") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : harness::labeled_trees(n)) {
      for (const Orientation o : OrientationEnumerator(t)) {
        const Digraph d = o.digraph();
        CHECK(rho(d).value == gamma(d).value);
      }
    }
  }
  CHECK(harness::labeled_trees(5).size() == 125);
}

TEST_CASE("tabulated orientations") {
  const auto d = acyclic_lex_cycle_orientation(2, 2);
  CHECK(gamma(d).value == 4);
  CHECK(rho(d).value == 3);
  // V1 plus (v3, w1), ..., (v_{2k-1}, w1) packs; layer i starts at id i * s.
  const VertexSet v1 = bit(0) | bit(1);
  CHECK(is_packing(d, v1 | bit(4)));
  CHECK(is_dominating(d, v1 | bit(2) | bit(4)));
  // At k = 2, v5 is the last layer, which V1 points into.
  CHECK_FALSE(is_packing(d, v1 | bit(4) | bit(8)));
  for (std::size_t s = 2; s <= 4; ++s) {
    const auto d3 = acyclic_lex_cycle_orientation(3, s);
    const VertexSet layer1 = all_vertices(s);
    const VertexSet p = layer1 | bit(static_cast<VertexId>(2 * s)) | bit(static_cast<VertexId>(4 * s));
    CHECK(is_packing(d3, p));
    CHECK(static_cast<std::size_t>(popcount(p)) == s + 2);
    CHECK(rho(d3).value == s + 2);
  }
  CHECK(gamma(k222_orientation()).value == 3);
  CHECK(gamma(k3_box_k3_orientation()).value == 4);
  for (std::size_t n : {2, 4, 6, 8}) CHECK(gamma(path_join_orientation(n)).value == n / 2 + 1);
  for (std::size_t n : {3, 4, 5, 6}) CHECK(gamma(prism_orientation(n)).value == n);
}
