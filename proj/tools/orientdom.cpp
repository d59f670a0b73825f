#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "orientdom/bounds.hpp"
#include "orientdom/dom.hpp"
#include "orientdom/error.hpp"
#include "orientdom/graph_io.hpp"
#include "orientdom/harness/cache.hpp"
#include "orientdom/harness/expression.hpp"
#include "orientdom/harness/props.hpp"
#include "orientdom/harness/verify.hpp"
#include "orientdom/invariants.hpp"
#include "orientdom/orientations.hpp"
#include "orientdom/products.hpp"

namespace {

using namespace orientdom;

struct Globals {
  std::size_t max_edges = kDefaultEdgeCap;
  std::size_t workers = 1;
  std::uint64_t seed = harness::kDefaultSeed;
  std::string cache_dir;
  bool porcelain = false;

  DomOptions dom() const { return {max_edges, workers}; }
};

class Printer {
 public:
  explicit Printer(bool porcelain) : sep_(porcelain ? '\t' : ' ') {}
  template <typename T>
  void line(const std::string& key, const T& value) const {
    std::cout << key << sep_ << value << '\n';
  }

 private:
  char sep_;
};

std::string ids(VertexSet s) {
  std::string out;
  for (VertexId v : members(s)) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

// "k=2,s=3" -> {k: 2, s: 3}. A comma only separates parameters when the next
// parameter name and '=' follow it, so values may hold expressions such as
// g=cart(path:3,complete:3).
std::map<std::string, std::string> split_params(const std::string& text) {
  std::map<std::string, std::string> out;
  if (text.empty()) return out;
  static const std::regex next_param(",(?=[A-Za-z_][A-Za-z0-9_]*=)");
  std::sregex_token_iterator it(text.begin(), text.end(), next_param, -1), end;
  for (; it != end; ++it) {
    const std::string item = *it;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(Errc::invalid_argument, "bad parameter '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  std::size_t count(const std::string& name) {
    const std::string& text = take(name);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != text.size() || text.empty())
      throw Error(Errc::invalid_argument, "parameter " + name + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  UndirectedGraph graph(const std::string& name) { return harness::parse_graph_expression(take(name)); }
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  void finish() const {
    for (const auto& [name, value] : values_)
      if (!used_.count(name)) throw Error(Errc::invalid_argument, "unused parameter '" + name + "'");
  }

 private:
  const std::string& take(const std::string& name) {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error(Errc::invalid_argument, "missing parameter '" + name + "'");
    used_[name] = true;
    return it->second;
  }
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> used_;
};

UndirectedGraph load_graph(const std::string& file, const std::string& expr) {
  if (!file.empty() && !expr.empty()) throw Error(Errc::invalid_argument, "give either --graph or --expr, not both");
  if (!expr.empty()) return harness::parse_graph_expression(expr);
  if (file.empty()) throw Error(Errc::invalid_argument, "a graph is required (--graph or --expr)");
  if (file == "-") return read_graph(std::cin);
  return read_graph_file(file);
}

Digraph load_digraph(const std::string& file) {
  if (file == "-") return read_digraph(std::cin);
  return read_digraph_file(file);
}

template <typename T>
void emit(const T& value, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << to_text(value);
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::invalid_argument, "cannot write " + out);
  f << to_text(value);
}

std::optional<harness::DomCache> open_cache(const Globals& g) {
  std::string dir = g.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(harness::kCacheDirEnv)) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return harness::DomCache(dir);
}

Digraph build_scheme(std::string scheme, Params& p, const std::string& base_file, const Globals& g) {
  const std::string suffix = "_orientation";
  if (scheme.size() > suffix.size() && scheme.ends_with(suffix)) scheme.resize(scheme.size() - suffix.size());
  const DomOptions opts = g.dom();
  auto optimal_bits = [&](const UndirectedGraph& graph) { return *dom(graph, opts).witness_orientation; };

  if (scheme == "path_join") return path_join_orientation(p.count("n"));
  if (scheme == "prism") return prism_orientation(p.count("n"));
  if (scheme == "k3_box_k3") return k3_box_k3_orientation();
  if (scheme == "k222") return k222_orientation();
  if (scheme == "acyclic_lex_cycle") {
    const std::size_t k = p.count("k");
    return acyclic_lex_cycle_orientation(k, p.count("s"));
  }
  if (scheme == "corona") {
    const UndirectedGraph gg = p.graph("g"), h = p.graph("h");
    const UndirectedGraph hk = join(h, complete_graph(1));
    return corona_orientation(Orientation(gg, optimal_bits(gg)), h, Orientation(hk, optimal_bits(hk)));
  }
  if (scheme == "cartesian") {
    const UndirectedGraph gg = p.graph("g"), h = p.graph("h");
    const std::uint64_t h_bits = p.has("hbits") ? p.count("hbits") : 0;
    return cartesian_orientation(Orientation(gg, optimal_bits(gg)), Orientation(h, h_bits),
                                 independence_number(h).witness);
  }
  if (scheme == "lex") {
    const UndirectedGraph gg = p.graph("g"), h = p.graph("h");
    return lex_orientation(gg, independence_number(gg).witness, Orientation(h, optimal_bits(h)));
  }
  if (scheme == "mask") {
    if (base_file.empty()) throw Error(Errc::invalid_argument, "scheme mask needs --base");
    const UndirectedGraph base = read_graph_file(base_file);
    if (base.size() > kMaxOrientableEdges - 1) throw Error(Errc::cap_exceeded, "too many edges to orient");
    const std::uint64_t bits = p.count("bits");
    if (base.size() < 64 && (bits >> base.size()) != 0)
      throw Error(Errc::invalid_argument, "bits has more positions than the base graph has edges");
    return Orientation(base, bits).digraph();
  }
  throw Error(Errc::invalid_argument, "unknown scheme '" + scheme + "'");
}

int run_dom(const Globals& g, const UndirectedGraph& graph) {
  const Printer out(g.porcelain);
  auto cache = open_cache(g);
  if (cache) {
    const auto hit = cache->lookup(graph);
    for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
    if (hit) {
      out.line("value", *hit);
      out.line("source", "cache");
      return 0;
    }
  }
  const DomResult r = dom(graph, g.dom());
  out.line("value", r.value);
  out.line("witness", *r.witness_orientation);
  out.line("explored", r.nodes_explored);
  for (const auto& [reason, n] : r.pruned_by) out.line("pruned_" + reason, n);
  if (cache) {
    cache->store(graph, r.value);
    out.line("source", "search");
  }
  return 0;
}

int run_bounds(const Globals& g, const UndirectedGraph& graph, const std::string& partition) {
  std::vector<VertexSet> parts;
  if (!partition.empty()) {
    std::stringstream blocks(partition);
    std::string block;
    while (std::getline(blocks, block, ';')) {
      std::stringstream items(block);
      std::string item;
      VertexSet s = 0;
      while (std::getline(items, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(item, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != item.size() || v >= graph.order())
          throw Error(Errc::invalid_argument, "bad vertex '" + item + "' in --partition");
        s |= bit(static_cast<VertexId>(v));
      }
      parts.push_back(s);
    }
  }
  const BoundsReport b = dom_bounds(graph, parts, g.dom());
  const Printer out(g.porcelain);
  out.line("lower", b.lower);
  out.line("upper", b.upper);
  for (const auto& s : b.lower_sources) out.line("lower_source", s);
  for (const auto& s : b.upper_sources) out.line("upper_source", s);
  if (b.exact()) out.line("value", b.lower);
  return 0;
}

int run_props(const Globals& g, std::size_t count) {
  harness::PropsOptions opts;
  opts.seed = g.seed;
  opts.count = count;
  opts.dom = g.dom();
  const auto results = harness::run_props(opts);
  bool ok = true;
  for (const auto& r : results) {
    ok &= r.passed();
    if (g.porcelain) {
      std::cout << r.name << '\t' << r.checked << '\t' << r.violations << '\t' << (r.passed() ? "PASS" : "FAIL") << '\t'
                << r.first_violation << '\n';
    } else {
      std::cout << (r.passed() ? "PASS  " : "FAIL  ") << r.name << " (" << r.checked << " checks, " << r.violations
                << " violations)\n";
      if (!r.passed()) std::cout << "      first: " << r.first_violation << '\n';
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orientable domination toolkit: graph products, orientations and exact DOM search"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-edges", g.max_edges, "Edge cap for exhaustive orientation search")
      ->check(CLI::Range(std::size_t{0}, kHardEdgeLimit));
  app.add_option("--workers", g.workers, "OpenMP worker threads for DOM search")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized corpora");
  app.add_option("--cache-dir", g.cache_dir, std::string("DOM cache directory (default: $") + harness::kCacheDirEnv + ")");
  app.add_flag("--porcelain", g.porcelain, "Tab-separated machine-readable output");

  std::string expr, out_file, scheme, params, base_file, graph_file, digraph_file, partition, suite = "all";
  std::size_t props_count = 200;

  auto* construct = app.add_subcommand("construct", "Build a graph from an expression and write it as 'ug' text");
  construct->add_option("expression", expr, "e.g. cart(path:3,complete:3)")->required();
  construct->add_option("--out", out_file, "Output file (default stdout)");

  auto* orient = app.add_subcommand("orient", "Build a named orientation scheme and write it as 'dg' text");
  orient->add_option("--scheme", scheme, "path_join, prism, k3_box_k3, k222, acyclic_lex_cycle, corona, cartesian, lex, mask")
      ->required();
  orient->add_option("--params", params, "Comma-separated name=value list, e.g. k=2,s=2");
  orient->add_option("--base", base_file, "Base graph file for the mask scheme");
  orient->add_option("--out", out_file, "Output file (default stdout)");

  auto* dom_cmd = app.add_subcommand("dom", "Exact DOM(G) by orientation search");
  dom_cmd->add_option("--graph", graph_file, "Graph file ('-' for stdin)");
  dom_cmd->add_option("--expr", expr, "Graph expression instead of a file");

  auto* gamma_cmd = app.add_subcommand("gamma", "Domination number of a digraph");
  gamma_cmd->add_option("--digraph", digraph_file, "Digraph file ('-' for stdin)")->required();

  auto* rho_cmd = app.add_subcommand("rho", "Packing number of a digraph");
  rho_cmd->add_option("--digraph", digraph_file, "Digraph file ('-' for stdin)")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on DOM(G)");
  bounds_cmd->add_option("--graph", graph_file, "Graph file ('-' for stdin)");
  bounds_cmd->add_option("--expr", expr, "Graph expression instead of a file");
  bounds_cmd->add_option("--partition", partition, "Vertex cover for the sum bound, e.g. '0,1,2;3,4'");

  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suites");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->check(CLI::IsMember(harness::verify_suites()));

  auto* props_cmd = app.add_subcommand("props", "Randomized invariant suite");
  props_cmd->add_option("--count", props_count, "Number of random graphs")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) {
      emit(harness::parse_graph_expression(expr), out_file);
    } else if (*orient) {
      Params p(split_params(params));
      const Digraph d = build_scheme(scheme, p, base_file, g);
      p.finish();
      emit(d, out_file);
    } else if (*dom_cmd) {
      return run_dom(g, load_graph(graph_file, expr));
    } else if (*gamma_cmd || *rho_cmd) {
      const Digraph d = load_digraph(digraph_file);
      const DomResult r = *gamma_cmd ? gamma(d) : rho(d);
      const Printer out(g.porcelain);
      out.line("value", r.value);
      out.line("witness", ids(r.witness_set));
      out.line("explored", r.nodes_explored);
    } else if (*bounds_cmd) {
      return run_bounds(g, load_graph(graph_file, expr), partition);
    } else if (*verify_cmd) {
      harness::VerifyOptions opts;
      opts.dom = g.dom();
      opts.seed = g.seed;
      const auto cases = harness::run_verify(suite, opts);
      harness::print_report(std::cout, cases, g.porcelain);
      return harness::exit_code(cases);
    } else if (*props_cmd) {
      return run_props(g, props_count);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
