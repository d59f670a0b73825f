#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orientdom/dom.hpp"
#include "orientdom/graph.hpp"

namespace orientdom::harness {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// G(n, p) style sample: n uniform in [min_order, max_order], edge density
// uniform in [0.15, 0.85], redrawn until it has at most max_edges edges.
UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t min_order, std::size_t max_order,
                             std::size_t max_edges);

// `count` random graphs from a generator seeded with `seed`.
std::vector<UndirectedGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t min_order,
                                           std::size_t max_order, std::size_t max_edges);

// Every labeled tree on n vertices (n^(n-2) of them, from Pruefer sequences).
std::vector<UndirectedGraph> labeled_trees(std::size_t n);

struct PropsOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 200;
  std::size_t max_order = 8;
  std::size_t max_edges = 14;
  std::size_t max_tree_order = 7;
  std::size_t partitions_per_graph = 3;
  std::size_t orientations_per_graph = 4;
  DomOptions dom;
};

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  bool passed() const { return violations == 0; }
};

// The randomized invariant suite: oracle equivalence, induced and spanning
// monotonicity, the partition bound, the alpha / n - alpha' sandwich,
// rho <= gamma, rho = gamma on oriented trees and witness certification.
std::vector<PropertyResult> run_props(const PropsOptions& options = {});

}  // namespace orientdom::harness
