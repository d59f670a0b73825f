#include "orientdom/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "orientdom/error.hpp"
#include "orientdom/invariants.hpp"
#include "orientdom/products.hpp"

namespace orientdom {

namespace {

constexpr double kSnap = 1e-9;

// Round outward, treating values within 1e-9 of an integer as that integer.
long floor_snapped(double x) {
  const double r = std::round(x);
  return std::fabs(x - r) <= kSnap ? static_cast<long>(r) : static_cast<long>(std::floor(x));
}
long ceil_snapped(double x) {
  const double r = std::round(x);
  return std::fabs(x - r) <= kSnap ? static_cast<long>(r) : static_cast<long>(std::ceil(x));
}

}  // namespace

BoundsReport dom_bounds(const UndirectedGraph& g, std::span<const VertexSet> parts, const DomOptions& options) {
  BoundsReport r;
  r.lower = independence_number(g).value;
  r.lower_sources.push_back("alpha");
  r.upper = g.order() - matching_number(g).value;
  r.upper_sources.push_back("n - alpha'");
  if (is_bipartite(g).bipartite) {
    r.upper = r.lower;
    r.upper_sources = {"bipartite: alpha"};
  }
  if (!parts.empty()) {
    VertexSet covered = 0;
    for (VertexSet p : parts) covered |= p;
    if (covered != all_vertices(g.order())) {
      throw Error(Errc::invalid_argument, "partition does not cover every vertex");
    }
    std::size_t sum = 0;
    for (VertexSet p : parts) sum += dom(g.induced(p), options).value;
    if (sum < r.upper) {
      r.upper = sum;
      r.upper_sources = {"partition sum"};
    } else if (sum == r.upper) {
      r.upper_sources.push_back("partition sum");
    }
  }
  return r;
}

BoundsReport erdos_szekeres_bounds(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "logarithmic bounds need n >= 2");
  const double lg = std::log2(static_cast<double>(n));
  const double lglg = std::log2(lg);
  BoundsReport r;
  r.lower = static_cast<std::size_t>(std::max(1L, ceil_snapped(lg - 2.0 * lglg)));
  r.upper = static_cast<std::size_t>(std::max(1L, floor_snapped(lg - lglg + 2.0)));
  r.lower_sources.push_back("log2 n - 2 log2 log2 n (clamped to 1)");
  r.upper_sources.push_back("log2 n - log2 log2 n + 2");
  return r;
}

CoronaEvaluation evaluate_corona_dom(const UndirectedGraph& g, const UndirectedGraph& h, const DomOptions& options) {
  CoronaEvaluation e;
  e.dom_g = dom(g, options).value;
  e.dom_h = dom(h, options).value;
  e.dom_h_plus_k1 = dom(join(h, complete_graph(1)), options).value;
  e.value = e.dom_h * g.order();
  if (e.dom_h_plus_k1 == e.dom_h + 1) e.value += e.dom_g;
  return e;
}

std::size_t corona_dom(const UndirectedGraph& g, const UndirectedGraph& h, const DomOptions& options) {
  return evaluate_corona_dom(g, h, options).value;
}

JoinCheck join_k1_check(const UndirectedGraph& g, const DomOptions& options) {
  JoinCheck c;
  c.dom_g = dom(g, options).value;
  c.dom_g_plus_k1 = dom(join(g, complete_graph(1)), options).value;
  if (c.dom_g_plus_k1 != c.dom_g && c.dom_g_plus_k1 != c.dom_g + 1) {
    throw std::logic_error("DOM(G + K1) = " + std::to_string(c.dom_g_plus_k1) + " with DOM(G) = " +
                           std::to_string(c.dom_g));
  }
  return c;
}

std::size_t tripartite_dom(std::size_t n1, std::size_t n2, std::size_t n3, std::vector<std::string>* warnings) {
  std::array<std::size_t, 3> n{n1, n2, n3};
  if (n[0] == 0 || n[1] == 0 || n[2] == 0) throw Error(Errc::invalid_argument, "part sizes must be positive");
  if (!std::is_sorted(n.begin(), n.end())) {
    std::sort(n.begin(), n.end());
    if (warnings) warnings->push_back("tripartite part sizes were not non-decreasing; sorted");
  }
  if (n[2] >= 3) return n[2];
  if (n[0] == 2 && n[1] == 2 && n[2] == 2) return 3;
  return 2;
}

BoundsReport multipartite_dom_bounds(std::vector<std::size_t> parts, std::vector<std::string>* warnings) {
  if (parts.size() < 2) throw Error(Errc::invalid_argument, "multipartite needs at least two parts");
  if (std::find(parts.begin(), parts.end(), std::size_t{0}) != parts.end()) {
    throw Error(Errc::invalid_argument, "part sizes must be positive");
  }
  if (!std::is_sorted(parts.begin(), parts.end())) {
    std::sort(parts.begin(), parts.end());
    if (warnings) warnings->push_back("multipartite part sizes were not non-decreasing; sorted");
  }
  const std::size_t k = parts.size();
  const std::size_t largest = parts.back();
  BoundsReport r;
  r.lower = largest;
  r.lower_sources.push_back("n_k = alpha");
  if (k == 2) {
    r.upper = largest;
    r.upper_sources.push_back("complete bipartite");
  } else if (largest >= k) {
    r.upper = largest;
    r.upper_sources.push_back("n_k >= k");
  } else {
    r.upper = std::max(largest, k);
    r.upper_sources.push_back("max(n_k, k)");
  }
  return r;
}

VizingReport vizing_like_check(const UndirectedGraph& g, const UndirectedGraph& h, const DomOptions& options) {
  VizingReport r;
  r.dom_product = dom(cartesian(g, h).graph, options).value;
  r.dom_g_times_dom_h = dom(g, options).value * dom(h, options).value;
  r.holds = r.dom_product >= r.dom_g_times_dom_h;
  r.g_bipartite = is_bipartite(g).bipartite;
  r.h_bipartite = is_bipartite(h).bipartite;
  return r;
}

}  // namespace orientdom
