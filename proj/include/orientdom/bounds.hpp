#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orientdom/dom.hpp"
#include "orientdom/graph.hpp"

namespace orientdom {

struct BoundsReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<std::string> lower_sources;
  std::vector<std::string> upper_sources;

  bool exact() const { return lower == upper; }
  bool contains(std::size_t v) const { return lower <= v && v <= upper; }
};

// alpha(G) <= DOM(G) <= n(G) - alpha'(G), with equality at alpha for bipartite
// G. A vertex cover `parts` of V(G) (not necessarily disjoint) tightens the
// upper bound to the sum of DOM over the induced pieces, computed with `options`.
BoundsReport dom_bounds(const UndirectedGraph& g, std::span<const VertexSet> parts = {},
                        const DomOptions& options = {});

// Interval for DOM(K_n) from the logarithmic bounds, rounded outward and
// with the lower end clamped to 1.
BoundsReport erdos_szekeres_bounds(std::size_t n);

struct CoronaEvaluation {
  std::size_t dom_g = 0;
  std::size_t dom_h = 0;
  std::size_t dom_h_plus_k1 = 0;
  std::size_t value = 0;
};

// DOM(G o H) from DOM(G), DOM(H) and DOM(H + K_1): n(G) DOM(H), plus DOM(G)
// when joining a universal vertex raises DOM(H).
CoronaEvaluation evaluate_corona_dom(const UndirectedGraph& g, const UndirectedGraph& h,
                                     const DomOptions& options = {});
std::size_t corona_dom(const UndirectedGraph& g, const UndirectedGraph& h, const DomOptions& options = {});

struct JoinCheck {
  std::size_t dom_g = 0;
  std::size_t dom_g_plus_k1 = 0;
};

// Throws std::logic_error if DOM(G + K_1) is not DOM(G) or DOM(G) + 1.
JoinCheck join_k1_check(const UndirectedGraph& g, const DomOptions& options = {});

// Closed form for DOM(K_{n1,n2,n3}). Unsorted sizes are sorted, with a
// warning appended when `warnings` is given.
std::size_t tripartite_dom(std::size_t n1, std::size_t n2, std::size_t n3,
                           std::vector<std::string>* warnings = nullptr);

// [n_k, max(n_k, k)] for K_{n1..nk}; exact n_k when n_k >= k or k = 2.
BoundsReport multipartite_dom_bounds(std::vector<std::size_t> parts, std::vector<std::string>* warnings = nullptr);

struct VizingReport {
  std::size_t dom_product = 0;
  std::size_t dom_g_times_dom_h = 0;
  bool holds = false;
  bool g_bipartite = false;
  bool h_bipartite = false;
};

// Exploratory check of DOM(G x H) >= DOM(G) DOM(H) for the Cartesian product.
VizingReport vizing_like_check(const UndirectedGraph& g, const UndirectedGraph& h, const DomOptions& options = {});

}  // namespace orientdom
