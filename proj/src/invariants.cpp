#include "orientdom/invariants.hpp"

#include <algorithm>

#include "orientdom/error.hpp"

namespace orientdom {

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const UndirectedGraph& g) : g_(g) {}

  IndependentSetResult run() {
    best_ = 0;
    best_set_ = 0;
    expand(0, 0, all_vertices(g_.order()));
    return {best_, best_set_, nodes_};
  }

 private:
  // Candidates partitioned greedily into cliques; an independent set meets
  // each clique at most once.
  std::size_t clique_cover_bound(VertexSet candidates) const {
    std::size_t cliques = 0;
    while (candidates) {
      VertexId v = lowest(candidates);
      VertexSet pool = candidates & g_.neighbors(v);
      candidates &= ~bit(v);
      while (pool) {
        VertexId w = lowest(pool);
        candidates &= ~bit(w);
        pool &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet chosen, std::size_t size, VertexSet candidates) {
    ++nodes_;
    // Isolated candidates always belong to some optimum.
    for (VertexSet c = candidates; c; c &= c - 1) {
      VertexId v = lowest(c);
      if ((g_.neighbors(v) & candidates) == 0) {
        chosen |= bit(v);
        ++size;
        candidates &= ~bit(v);
      }
    }
    if (candidates == 0) {
      if (size > best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(candidates) <= best_) return;

    VertexId pivot = lowest(candidates);
    int pivot_degree = -1;
    for (VertexSet c = candidates; c; c &= c - 1) {
      VertexId v = lowest(c);
      int d = popcount(g_.neighbors(v) & candidates);
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    expand(chosen | bit(pivot), size + 1, candidates & ~g_.neighbors(pivot) & ~bit(pivot));
    expand(chosen, size, candidates & ~bit(pivot));
  }

  const UndirectedGraph& g_;
  std::size_t best_ = 0;
  VertexSet best_set_ = 0;
  std::uint64_t nodes_ = 0;
};

class MatchingSearch {
 public:
  explicit MatchingSearch(const UndirectedGraph& g) : g_(g) {}

  MatchingResult run() {
    std::vector<Edge> current;
    expand(all_vertices(g_.order()), current);
    return {best_.size(), best_};
  }

 private:
  void expand(VertexSet free, std::vector<Edge>& current) {
    // Drop vertices with no free neighbour; they can never be matched.
    VertexSet live = 0;
    for (VertexSet f = free; f; f &= f - 1) {
      VertexId v = lowest(f);
      if (g_.neighbors(v) & free) live |= bit(v);
    }
    if (live == 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + static_cast<std::size_t>(popcount(live)) / 2 <= best_.size()) return;
    // Some maximum matching covers a minimum-degree live vertex, so branching
    // over its incident edges loses nothing.
    VertexId v = lowest(live);
    int min_degree = 65;
    for (VertexSet l = live; l; l &= l - 1) {
      VertexId w = lowest(l);
      int d = popcount(g_.neighbors(w) & live);
      if (d < min_degree) {
        min_degree = d;
        v = w;
      }
    }
    for (VertexSet nb = g_.neighbors(v) & live; nb; nb &= nb - 1) {
      VertexId w = lowest(nb);
      current.push_back({std::min(v, w), std::max(v, w)});
      expand(live & ~bit(v) & ~bit(w), current);
      current.pop_back();
    }
  }

  const UndirectedGraph& g_;
  std::vector<Edge> best_;
};

}  // namespace

IndependentSetResult independence_number(const UndirectedGraph& g) {
  return IndependentSetSearch(g).run();
}

MatchingResult matching_number(const UndirectedGraph& g) {
  MatchingResult r = MatchingSearch(g).run();
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

CoverNumbers cover_numbers(const UndirectedGraph& g) {
  CoverNumbers c;
  c.beta = g.order() - independence_number(g).value;
  if (!g.has_isolated_vertex()) c.beta_prime = g.order() - matching_number(g).value;
  return c;
}

bool induces_bipartite(const UndirectedGraph& g, VertexSet subset, Bipartition* parts) {
  VertexSet left = 0, right = 0;
  VertexSet unseen = subset;
  while (unseen) {
    VertexId root = lowest(unseen);
    VertexSet frontier = bit(root);
    left |= frontier;
    unseen &= ~frontier;
    bool on_left = true;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
      next &= subset;
      VertexSet& same = on_left ? left : right;
      VertexSet& other = on_left ? right : left;
      if (next & same) return false;
      next &= ~other;
      other |= next;
      unseen &= ~next;
      frontier = next;
      on_left = !on_left;
    }
  }
  if (parts) *parts = {left, right};
  return true;
}

BipartiteCheck is_bipartite(const UndirectedGraph& g) {
  Bipartition parts;
  if (!induces_bipartite(g, all_vertices(g.order()), &parts)) return {false, std::nullopt};
  return {true, parts};
}

InducedBipartiteResult max_induced_bipartite_order(const UndirectedGraph& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw Error(Errc::cap_exceeded, "bip search limited to " + std::to_string(max_order) + " vertices");
  }
  for (std::size_t k = n; k >= 1; --k) {
    // Gosper's hack over k-subsets of n, increasing numerically.
    VertexSet subset = all_vertices(k);
    const VertexSet limit = all_vertices(n);
    while (true) {
      Bipartition parts;
      if (induces_bipartite(g, subset, &parts)) return {k, subset, parts};
      if (k == n) break;
      VertexSet c = subset & (~subset + 1);
      VertexSet r = subset + c;
      if (r == 0 || (r & ~limit)) break;
      subset = (((r ^ subset) >> 2) / c) | r;
      if (subset & ~limit) break;
    }
  }
  return {};
}

AcyclicCheck is_acyclic(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::size_t> indegree(n);
  for (VertexId v = 0; v < n; ++v) indegree[v] = d.in_degree(v);
  AcyclicCheck out;
  std::vector<VertexId> ready;
  for (VertexId v = n; v-- > 0;) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  VertexSet placed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    out.order.push_back(v);
    placed |= bit(v);
    for (VertexSet s = d.out_neighbors(v); s; s &= s - 1) {
      VertexId w = lowest(s);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (out.order.size() == n) {
    out.acyclic = true;
    return out;
  }
  // Every unplaced vertex keeps an unplaced in-neighbour; walking backwards
  // must revisit a vertex.
  const VertexSet rest = all_vertices(n) & ~placed;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<VertexId> walk;
  VertexId v = lowest(rest);
  while (seen_at[v] == n) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    v = lowest(d.in_neighbors(v) & rest);
  }
  std::vector<VertexId> back(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
  out.cycle.assign(back.rbegin(), back.rend());
  out.order.clear();
  return out;
}

InvariantReport invariants(const UndirectedGraph& g, std::size_t bip_cap) {
  InvariantReport r;
  r.alpha = independence_number(g).value;
  r.alpha_prime = matching_number(g).value;
  r.beta = g.order() - r.alpha;
  if (!g.has_isolated_vertex()) r.beta_prime = g.order() - r.alpha_prime;
  r.is_bipartite = is_bipartite(g).bipartite;
  r.bip = r.is_bipartite ? g.order() : max_induced_bipartite_order(g, bip_cap).value;
  return r;
}

}  // namespace orientdom
