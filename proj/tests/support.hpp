#pragma once

#include <optional>
#include <random>

#include "oracles.hpp"
#include "orientdom/error.hpp"
#include "orientdom/graph.hpp"
#include "orientdom/harness/props.hpp"

namespace testing {

inline oracle::Pairs pairs(const orientdom::UndirectedGraph& g) {
  oracle::Pairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline oracle::Pairs pairs(const orientdom::Digraph& d) {
  oracle::Pairs out;
  for (const auto& a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

// The error code thrown by f, or nothing when f returns normally.
template <typename F>
std::optional<orientdom::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const orientdom::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<orientdom::UndirectedGraph> corpus(std::uint64_t seed, std::size_t count, std::size_t max_order,
                                                      std::size_t max_edges) {
  return orientdom::harness::random_corpus(seed, count, 1, max_order, max_edges);
}

}  // namespace testing
