#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "orientdom/graph.hpp"

namespace orientdom {

inline constexpr std::size_t kDefaultEdgeCap = 22;

// Contiguous block [first, last) of orientation bitmasks.
struct MaskRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  std::uint64_t size() const { return last - first; }
};

// All 2^|E| orientations of a graph in increasing bitmask order. Graphs with
// more than `max_edges` edges are refused; raising max_edges is the explicit
// override (hard limit 63).
class OrientationEnumerator {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Orientation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const UndirectedGraph* base, std::uint64_t mask) : base_(base), mask_(mask) {}

    Orientation operator*() const { return Orientation(*base_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const UndirectedGraph* base_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  class Range {
   public:
    Range(const UndirectedGraph* base, MaskRange masks) : base_(base), masks_(masks) {}
    iterator begin() const { return {base_, masks_.first}; }
    iterator end() const { return {base_, masks_.last}; }
    std::uint64_t size() const { return masks_.size(); }

   private:
    const UndirectedGraph* base_;
    MaskRange masks_;
  };

  explicit OrientationEnumerator(const UndirectedGraph& g, std::size_t max_edges = kDefaultEdgeCap);

  std::uint64_t count() const { return std::uint64_t{1} << base_->size(); }

  // Shard i of `shards` near-equal contiguous blocks; shards concatenate to
  // the whole mask space in order.
  MaskRange shard(std::size_t index, std::size_t shards) const;

  iterator begin() const { return {base_, 0}; }
  iterator end() const { return {base_, count()}; }
  Range range(MaskRange masks) const { return {base_, masks}; }

 private:
  const UndirectedGraph* base_;
};

// P_n + K_1 with path vertices x_1..x_n as ids 0..n-1 and hub n: path arcs
// forward, hub -> x_j for odd j, x_j -> hub for even j. n must be even.
Digraph path_join_orientation(std::size_t n);

// Orientation of corona(G, H): G-edges follow g_opt; each block H_u plus u is
// oriented by h_opt, an orientation of join(H, K_1) whose K_1 vertex plays u.
Digraph corona_orientation(const Orientation& g_opt, const UndirectedGraph& h, const Orientation& h_opt);

// Orientation of cartesian(G, H) from an orientation f of G, any orientation
// g of H and an independent set A of H: G-layers follow f, H-fibres leave A,
// other H-fibre edges follow g.
Digraph cartesian_orientation(const Orientation& g_opt, const Orientation& h_any, VertexSet independent);

// The nine-vertex orientation of K_3 x K_3 in which every out-degree is 2.
Digraph k3_box_k3_orientation();

// C_n x K_2: both cycle layers directed v_i -> v_{i+1}, rungs layer 0 -> 1.
Digraph prism_orientation(std::size_t n);

// Orientation of lexicographic(G, H): each H-copy follows h_opt, edges
// incident to a copy of u in A point away from it, and remaining cross edges
// run from the lower-indexed G-vertex's copy to the higher one.
Digraph lex_orientation(const UndirectedGraph& g, VertexSet independent, const Orientation& h_opt);

// Acyclic orientation of C_{2k+1} o K̄_s: layer i -> layer i+1 for i < 2k
// and layer 0 -> layer 2k.
Digraph acyclic_lex_cycle_orientation(std::size_t k, std::size_t s);

// K_{2,2,2} (parts {0,1},{2,3},{4,5}) oriented with domination number 3.
Digraph k222_orientation();

}  // namespace orientdom
