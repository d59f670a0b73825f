#include "orientdom/dom.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orientdom/error.hpp"
#include "orientdom/invariants.hpp"

namespace orientdom {

namespace {

// Incumbent key: value in the high 16 bits, complemented mask in the low 48,
// so a larger key is a larger value or, on ties, a smaller mask.
constexpr std::uint64_t kMaskField = (std::uint64_t{1} << 48) - 1;

std::uint64_t pack(std::size_t value, std::uint64_t mask) {
  return (static_cast<std::uint64_t>(value) << 48) | (kMaskField - mask);
}
std::size_t key_value(std::uint64_t key) { return static_cast<std::size_t>(key >> 48); }
std::uint64_t key_mask(std::uint64_t key) { return kMaskField - (key & kMaskField); }

struct Tally {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned_ceiling = 0;
  std::uint64_t pruned_dominated = 0;
};

class LocalIncumbent {
 public:
  explicit LocalIncumbent(std::uint64_t key) : key_(key) {}
  std::uint64_t load() const { return key_; }
  void offer(std::uint64_t key) { key_ = std::max(key_, key); }

 private:
  std::uint64_t key_;
};

class SharedIncumbent {
 public:
  explicit SharedIncumbent(std::uint64_t key) : key_(key) {}
  std::uint64_t load() const { return key_.load(std::memory_order_relaxed); }
  void offer(std::uint64_t key) {
    std::uint64_t seen = key_.load(std::memory_order_relaxed);
    while (key > seen && !key_.compare_exchange_weak(seen, key, std::memory_order_relaxed)) {
    }
  }

 private:
  std::atomic<std::uint64_t> key_;
};

struct SearchSetup {
  std::size_t ceiling = 0;
  std::uint64_t initial_key = 0;
};

SearchSetup prepare(const UndirectedGraph& g, const DomOptions& options) {
  if (g.size() > options.max_edges) {
    throw Error(Errc::cap_exceeded, "graph has " + std::to_string(g.size()) + " edges; DOM search is capped at " +
                                        std::to_string(options.max_edges) + " (raise --max-edges to override)");
  }
  if (g.size() > kHardEdgeLimit) {
    throw Error(Errc::cap_exceeded, "DOM search is limited to " + std::to_string(kHardEdgeLimit) + " edges");
  }
  const std::size_t alpha = independence_number(g).value;
  SearchSetup s;
  s.ceiling = is_bipartite(g).bipartite ? alpha : g.order() - matching_number(g).value;
  // Orientations with gamma below alpha can never be optimal.
  s.initial_key = pack(alpha - 1, 0);
  return s;
}

template <typename Incumbent>
class OrientationSearch {
 public:
  OrientationSearch(const UndirectedGraph& g, std::size_t ceiling, Incumbent& incumbent)
      : edges_(g.edges()), n_(g.order()), ceiling_(static_cast<long>(ceiling)), incumbent_(incumbent) {
    for (VertexId v = 0; v < n_; ++v) out_[v] = in_[v] = bit(v);
  }

  // Fixes edge i to direction `reversed`.
  void apply(std::size_t i, bool reversed) {
    const auto [t, h] = endpoints(i, reversed);
    out_[t] |= bit(h);
    in_[h] |= bit(t);
  }
  void undo(std::size_t i, bool reversed) {
    const auto [t, h] = endpoints(i, reversed);
    out_[t] &= ~bit(h);
    in_[h] &= ~bit(t);
  }

  // Searches every orientation agreeing with `prefix` on edges above `top`;
  // edges 0..top are still free.
  void descend(long top, std::uint64_t prefix) {
    ++tally_.nodes;
    const std::uint64_t best = incumbent_.load();
    const long value = static_cast<long>(key_value(best));
    // Largest gamma that cannot improve on the incumbent anywhere in this
    // subtree, whose smallest mask is `prefix`.
    const long threshold = prefix < key_mask(best) ? value - 1 : value;
    if (threshold >= ceiling_) {
      ++tally_.pruned_ceiling;
      return;
    }
    if (top < 0) {
      ++tally_.leaves;
      detail::DominatingSetSearch search(rows_out(), rows_in());
      incumbent_.offer(pack(static_cast<std::size_t>(popcount(search.minimum())), prefix));
      return;
    }
    if (threshold >= 1) {
      detail::DominatingSetSearch search(rows_out(), rows_in());
      if (search.find_within(static_cast<std::size_t>(threshold))) {
        ++tally_.pruned_dominated;
        return;
      }
    }
    const auto i = static_cast<std::size_t>(top);
    for (bool reversed : {false, true}) {
      apply(i, reversed);
      descend(top - 1, prefix | (static_cast<std::uint64_t>(reversed) << i));
      undo(i, reversed);
    }
  }

  const Tally& tally() const { return tally_; }

 private:
  std::pair<VertexId, VertexId> endpoints(std::size_t i, bool reversed) const {
    return reversed ? std::pair{edges_[i].v, edges_[i].u} : std::pair{edges_[i].u, edges_[i].v};
  }
  std::span<const VertexSet> rows_out() const { return {out_.data(), n_}; }
  std::span<const VertexSet> rows_in() const { return {in_.data(), n_}; }

  const std::vector<Edge>& edges_;
  std::size_t n_;
  long ceiling_;
  Incumbent& incumbent_;
  std::array<VertexSet, kMaxVertices> out_{};
  std::array<VertexSet, kMaxVertices> in_{};
  Tally tally_;
};

DomResult make_result(std::uint64_t key, const Tally& t) {
  DomResult r;
  r.value = key_value(key);
  r.witness_orientation = key_mask(key);
  r.nodes_explored = t.nodes;
  r.pruned_by["ceiling"] = t.pruned_ceiling;
  r.pruned_by["dominated"] = t.pruned_dominated;
  r.pruned_by["leaves"] = t.leaves;
  return r;
}

std::size_t shard_bits(std::size_t edges, std::size_t workers) {
  if (workers <= 1) return 0;
  // About 16 shards per worker for dynamic load balancing.
  const auto wanted = static_cast<std::size_t>(std::bit_width(workers * 16 - 1));
  return std::min({edges, wanted, std::size_t{16}});
}

}  // namespace

DomResult dom_serial(const UndirectedGraph& g, const DomOptions& options) {
  const SearchSetup setup = prepare(g, options);
  LocalIncumbent incumbent(setup.initial_key);
  OrientationSearch search(g, setup.ceiling, incumbent);
  search.descend(static_cast<long>(g.size()) - 1, 0);
  return make_result(incumbent.load(), search.tally());
}

DomResult dom(const UndirectedGraph& g, const DomOptions& options) {
  const SearchSetup setup = prepare(g, options);
  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  const std::size_t m = g.size();
  const std::size_t bits = shard_bits(m, workers);
  const std::size_t free_edges = m - bits;
  const auto shards = static_cast<std::int64_t>(std::uint64_t{1} << bits);

  SharedIncumbent incumbent(setup.initial_key);
  std::uint64_t nodes = 0, leaves = 0, pruned_ceiling = 0, pruned_dominated = 0;

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers)) \
    reduction(+ : nodes, leaves, pruned_ceiling, pruned_dominated)
  for (std::int64_t s = 0; s < shards; ++s) {
    OrientationSearch search(g, setup.ceiling, incumbent);
    const auto shard = static_cast<std::uint64_t>(s);
    for (std::size_t b = 0; b < bits; ++b) search.apply(free_edges + b, (shard >> b) & 1);
    search.descend(static_cast<long>(free_edges) - 1, shard << free_edges);
    nodes += search.tally().nodes;
    leaves += search.tally().leaves;
    pruned_ceiling += search.tally().pruned_ceiling;
    pruned_dominated += search.tally().pruned_dominated;
  }
  return make_result(incumbent.load(), {nodes, leaves, pruned_ceiling, pruned_dominated});
}

std::size_t dom_oracle(const UndirectedGraph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  if (m > kOracleMaxEdges || n > kOracleMaxOrder) {
    throw Error(Errc::cap_exceeded, "oracle limited to 16 edges and 12 vertices");
  }
  const std::uint32_t everyone = (std::uint32_t{1} << n) - 1;

  // Subsets listed by increasing size.
  std::vector<std::uint32_t> subsets(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  std::vector<std::uint32_t> covered(subsets.size());
  std::vector<std::uint32_t> reach(n);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t v = 0; v < n; ++v) reach[v] = std::uint32_t{1} << v;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t from = g.edges()[i].u, to = g.edges()[i].v;
      if ((mask >> i) & 1) std::swap(from, to);
      reach[from] |= std::uint32_t{1} << to;
    }
    covered[0] = 0;
    for (std::uint32_t s : subsets) {
      if (s != 0) {
        const int low = std::countr_zero(s);
        covered[s] = covered[s & (s - 1)] | reach[static_cast<std::size_t>(low)];
      }
      if (covered[s] == everyone) {
        best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
        break;
      }
    }
  }
  return best;
}

}  // namespace orientdom
