#include "orientdom/domination.hpp"

#include <vector>

#include "orientdom/invariants.hpp"

namespace orientdom {

namespace detail {

DominatingSetSearch::DominatingSetSearch(std::span<const VertexSet> closed_out, std::span<const VertexSet> closed_in)
    : out_(closed_out), in_(closed_in), all_(all_vertices(closed_out.size())) {}

VertexSet DominatingSetSearch::greedy() const {
  VertexSet chosen = 0, dominated = 0;
  while (dominated != all_) {
    VertexId pick = 0;
    int gain = -1;
    for (VertexId v = 0; v < out_.size(); ++v) {
      int g = popcount(out_[v] & ~dominated);
      if (g > gain) {
        gain = g;
        pick = v;
      }
    }
    chosen |= bit(pick);
    dominated |= out_[pick];
  }
  return chosen;
}

std::optional<VertexSet> DominatingSetSearch::find_within(std::size_t limit) {
  if (limit == 0) return std::nullopt;
  const VertexSet g = greedy();
  if (static_cast<std::size_t>(popcount(g)) <= limit) return g;
  best_size_ = limit + 1;
  found_ = false;
  stop_on_first_ = true;
  expand(0, 0, 0, 0);
  if (!found_) return std::nullopt;
  return best_;
}

VertexSet DominatingSetSearch::minimum() {
  best_ = greedy();
  best_size_ = static_cast<std::size_t>(popcount(best_));
  found_ = false;
  stop_on_first_ = false;
  expand(0, 0, 0, 0);
  return best_;
}

void DominatingSetSearch::expand(VertexSet chosen, VertexSet dominated, VertexSet excluded, std::size_t size) {
  ++nodes_;
  if (dominated == all_) {
    if (size < best_size_) {
      best_size_ = size;
      best_ = chosen;
      found_ = true;
    }
    return;
  }
  if (size + 1 >= best_size_) return;

  const VertexSet undominated = all_ & ~dominated;
  VertexId pivot = 0;
  int fewest = 65;
  std::size_t bound = 0;
  VertexSet used = 0;
  for (VertexSet u = undominated; u; u &= u - 1) {
    const VertexId v = lowest(u);
    const VertexSet options = in_[v] & ~excluded;
    const int count = popcount(options);
    if (count == 0) return;
    if (count < fewest) {
      fewest = count;
      pivot = v;
    }
    if ((options & used) == 0) {
      ++bound;
      used |= options;
    }
  }
  if (size + bound >= best_size_) return;

  for (VertexSet opts = in_[pivot] & ~excluded; opts; opts &= opts - 1) {
    const VertexId d = lowest(opts);
    expand(chosen | bit(d), dominated | out_[d], excluded, size + 1);
    if (stop_on_first_ && found_) return;
    excluded |= bit(d);
  }
}

}  // namespace detail

bool is_dominating(const Digraph& d, VertexSet s) {
  VertexSet covered = 0;
  for (VertexSet t = s & all_vertices(d.order()); t; t &= t - 1) covered |= d.closed_out(lowest(t));
  return covered == all_vertices(d.order());
}

bool is_packing(const Digraph& d, VertexSet p) {
  VertexSet in_union = 0;
  for (VertexSet t = p; t; t &= t - 1) {
    const VertexId v = lowest(t);
    if (d.out_neighbors(v) & p) return false;
    if (d.in_neighbors(v) & in_union) return false;
    in_union |= d.in_neighbors(v);
  }
  return true;
}

DomResult gamma(const Digraph& d) {
  std::vector<VertexSet> out(d.order()), in(d.order());
  for (VertexId v = 0; v < d.order(); ++v) {
    out[v] = d.closed_out(v);
    in[v] = d.closed_in(v);
  }
  detail::DominatingSetSearch search(out, in);
  DomResult r;
  r.witness_set = search.minimum();
  r.value = static_cast<std::size_t>(popcount(r.witness_set));
  r.nodes_explored = search.nodes();
  return r;
}

UndirectedGraph packing_conflict_graph(const Digraph& d) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId x = 0; x < d.order(); ++x) {
    for (VertexId y = x + 1; y < d.order(); ++y) {
      const bool joined = d.has_arc(x, y) || d.has_arc(y, x);
      const bool shared = (d.in_neighbors(x) & d.in_neighbors(y)) != 0;
      if (joined || shared) edges.emplace_back(x, y);
    }
  }
  return UndirectedGraph::build(d.order(), edges);
}

DomResult rho(const Digraph& d) {
  const auto best = independence_number(packing_conflict_graph(d));
  DomResult r;
  r.value = best.value;
  r.witness_set = best.witness;
  r.nodes_explored = best.nodes_explored;
  return r;
}

}  // namespace orientdom
