#include "orientdom/harness/props.hpp"

#include <algorithm>
#include <sstream>

#include "orientdom/domination.hpp"
#include "orientdom/error.hpp"
#include "orientdom/invariants.hpp"
#include "orientdom/orientations.hpp"

namespace orientdom::harness {

namespace {

std::string describe(const UndirectedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " E={";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ' ';
    os << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  os << '}';
  return os.str();
}

std::string describe(const UndirectedGraph& g, std::uint64_t mask) {
  return describe(g) + " orientation=" + std::to_string(mask);
}

PropertyResult named(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

void record(PropertyResult& r, bool ok, const std::string& context) {
  ++r.checked;
  if (ok) return;
  if (r.violations++ == 0) r.first_violation = context;
}

// Calls f on each k-subset of {0..n-1}.
template <typename F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(VertexSet{0});
    return;
  }
  VertexSet s = all_vertices(k);
  const VertexSet limit = all_vertices(n);
  while (true) {
    f(s);
    const VertexSet c = s & (~s + 1);
    const VertexSet r = s + c;
    if (r == 0 || (r & ~limit)) return;
    s = (((r ^ s) >> 2) / c) | r;
    if (s & ~limit) return;
  }
}

bool gamma_witness_certified(const Digraph& d, const DomResult& g, bool exhaustive) {
  if (!is_dominating(d, g.witness_set) || static_cast<std::size_t>(popcount(g.witness_set)) != g.value) return false;
  if (!exhaustive || g.value == 0) return true;
  bool smaller_dominates = false;
  for_each_subset_of_size(d.order(), g.value - 1, [&](VertexSet s) { smaller_dominates |= is_dominating(d, s); });
  return !smaller_dominates;
}

bool rho_witness_certified(const Digraph& d, const DomResult& r, bool exhaustive) {
  if (!is_packing(d, r.witness_set) || static_cast<std::size_t>(popcount(r.witness_set)) != r.value) return false;
  if (!exhaustive) return true;
  bool larger_packs = false;
  for_each_subset_of_size(d.order(), r.value + 1, [&](VertexSet s) { larger_packs |= is_packing(d, s); });
  return !larger_packs;
}

}  // namespace

UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t min_order, std::size_t max_order,
                             std::size_t max_edges) {
  if (min_order == 0 || min_order > max_order) throw Error(Errc::invalid_argument, "bad order range");
  std::uniform_int_distribution<std::size_t> order(min_order, max_order);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    if (edges.size() <= max_edges) return UndirectedGraph::build(n, edges);
  }
}

std::vector<UndirectedGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t min_order,
                                           std::size_t max_order, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<UndirectedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, min_order, max_order, max_edges));
  return out;
}

std::vector<UndirectedGraph> labeled_trees(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "trees need at least one vertex");
  if (n == 1) return {UndirectedGraph::build(1, {})};
  if (n == 2) return {UndirectedGraph::build(2, {{0, 1}})};
  std::vector<UndirectedGraph> trees;
  std::vector<VertexId> code(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (VertexId c : code) ++degree[c];
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId c : code) {
      VertexId leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    VertexId a = 0;
    while (degree[a] != 1) ++a;
    VertexId b = a + 1;
    while (degree[b] != 1) ++b;
    edges.emplace_back(a, b);
    trees.push_back(UndirectedGraph::build(n, edges));

    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return trees;
}

std::vector<PropertyResult> run_props(const PropsOptions& options) {
  PropertyResult oracle = named("oracle equivalence: dom = dom_oracle");
  PropertyResult induced = named("induced monotonicity: dom(G - v) <= dom(G)");
  PropertyResult spanning = named("spanning monotonicity: dom(G) <= dom(G - e)");
  PropertyResult partition = named("partition bound: dom(G) <= dom(G[V1]) + dom(G[V2])");
  PropertyResult sandwich = named("sandwich: alpha <= dom <= n - alpha', lower bound tight when bipartite");
  PropertyResult packing = named("rho <= gamma on corpus orientations");
  PropertyResult trees = named("rho = gamma on every orientation of every tree");
  PropertyResult witnesses = named("witness certification for gamma and rho");

  const auto corpus = random_corpus(options.seed, options.count, 1, options.max_order, options.max_edges);
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);

  for (const UndirectedGraph& g : corpus) {
    const DomResult best = dom(g, options.dom);
    const std::size_t value = best.value;
    const std::string where = describe(g);

    record(oracle, value == dom_oracle(g), where + " dom=" + std::to_string(value));

    for (VertexId v = 0; v < g.order() && g.order() > 1; ++v) {
      const UndirectedGraph h = g.induced(all_vertices(g.order()) & ~bit(v));
      record(induced, dom(h, options.dom).value <= value, where + " minus vertex " + std::to_string(v));
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
      record(spanning, value <= dom(g.without_edge(e), options.dom).value, where + " minus edge " + std::to_string(e));
    }
    if (g.order() > 1) {
      std::uniform_int_distribution<VertexSet> pick(1, all_vertices(g.order()) - 1);
      for (std::size_t i = 0; i < options.partitions_per_graph; ++i) {
        const VertexSet left = pick(rng);
        const VertexSet right = all_vertices(g.order()) & ~left;
        const std::size_t sum = dom(g.induced(left), options.dom).value + dom(g.induced(right), options.dom).value;
        record(partition, value <= sum, where + " part=" + std::to_string(left));
      }
    }

    const std::size_t alpha = independence_number(g).value;
    const std::size_t alpha_prime = matching_number(g).value;
    const bool bipartite = is_bipartite(g).bipartite;
    record(sandwich, alpha <= value && value <= g.order() - alpha_prime && (!bipartite || value == alpha), where);

    std::vector<std::uint64_t> masks{*best.witness_orientation};
    if (g.size() > 0) {
      std::uniform_int_distribution<std::uint64_t> any_mask(0, (std::uint64_t{1} << g.size()) - 1);
      for (std::size_t i = 0; i < options.orientations_per_graph; ++i) masks.push_back(any_mask(rng));
    }
    for (std::uint64_t mask : masks) {
      const Digraph d = Orientation(g, mask).digraph();
      const DomResult gm = gamma(d);
      const DomResult rh = rho(d);
      record(packing, rh.value <= gm.value, describe(g, mask));
      const bool exhaustive = d.order() <= 10;
      record(witnesses, gamma_witness_certified(d, gm, exhaustive) && rho_witness_certified(d, rh, exhaustive),
             describe(g, mask));
    }
  }

  for (std::size_t n = 1; n <= options.max_tree_order; ++n) {
    const auto all = labeled_trees(n);
    std::uint64_t checked = 0, violations = 0;
    std::string first;
    const auto count = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(static_cast<int>(std::max<std::size_t>(1, options.dom.workers))) \
    reduction(+ : checked, violations)
    for (std::int64_t t = 0; t < count; ++t) {
      const UndirectedGraph& tree = all[static_cast<std::size_t>(t)];
      for (const Orientation o : OrientationEnumerator(tree)) {
        const Digraph d = o.digraph();
        ++checked;
        if (rho(d).value != gamma(d).value) {
          ++violations;
#pragma omp critical(orientdom_props_first)
          if (first.empty()) first = describe(tree, o.bits());
        }
      }
    }
    trees.checked += checked;
    if (trees.violations == 0 && violations > 0) trees.first_violation = first;
    trees.violations += violations;
  }

  return {oracle, induced, spanning, partition, sandwich, packing, trees, witnesses};
}

}  // namespace orientdom::harness
