#pragma once

#include <cstddef>

#include "orientdom/domination.hpp"
#include "orientdom/orientations.hpp"

namespace orientdom {

// The search packs (value, bitmask) into one 64-bit word, so at most 48
// edges can ever be searched regardless of max_edges.
inline constexpr std::size_t kHardEdgeLimit = 48;

struct DomOptions {
  std::size_t max_edges = kDefaultEdgeCap;
  std::size_t workers = 1;
};

// Exact DOM(G) = max gamma over all orientations, by depth-first search over
// edge directions. Subtrees are pruned once the directions fixed so far
// already admit a dominating set that small, and the search stops early at
// the ceiling n - alpha' (alpha for bipartite G).
//
// Work is split into contiguous bitmask shards run on `workers` OpenMP
// threads. The value and witness (smallest optimal bitmask) do not depend on
// the worker count; node and prune tallies do.
DomResult dom(const UndirectedGraph& g, const DomOptions& options = {});

// Single-threaded reference search over the whole mask space, kept for
// cross-checking dom() and for benchmarking.
DomResult dom_serial(const UndirectedGraph& g, const DomOptions& options = {});

inline constexpr std::size_t kOracleMaxEdges = 16;
inline constexpr std::size_t kOracleMaxOrder = 12;

// Brute force: every orientation, every vertex subset in increasing size.
// Shares no code with dom(). Throws cap_exceeded beyond 16 edges or 12
// vertices.
std::size_t dom_oracle(const UndirectedGraph& g);

}  // namespace orientdom
