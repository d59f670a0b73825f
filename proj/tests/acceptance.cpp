// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orientdom/bounds.hpp"
#include "orientdom/dom.hpp"
#include "orientdom/harness/props.hpp"
#include "orientdom/invariants.hpp"
#include "orientdom/orientations.hpp"
#include "orientdom/products.hpp"

using namespace orientdom;

namespace {

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      log_ << "    failed: " << what << '\n';
    }
    ++checks_;
  }
  bool ok() const { return ok_; }
  std::size_t checks() const { return checks_; }

 private:
  std::ostringstream& log_;
  bool ok_ = true;
  std::size_t checks_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string n_str(std::size_t v) { return std::to_string(v); }

Orientation optimal(const UndirectedGraph& g) { return Orientation(g, *dom(g).witness_orientation); }

void complete_graphs(Criterion& c, std::string& note) {
  c.expect(dom(complete_graph(2)).value == 1, "DOM(K2) = 1");
  c.expect(dom(complete_graph(3)).value == 2, "DOM(K3) = 2");
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t v = dom(complete_graph(n)).value;
    const double s = seconds_since(t0);
    const BoundsReport b = erdos_szekeres_bounds(n);
    c.expect(b.contains(v), "DOM(K" + n_str(n) + ") = " + n_str(v) + " in [" + n_str(b.lower) + "," + n_str(b.upper) + "]");
    note += " K" + n_str(n) + "=" + n_str(v);
    if (n == 7) {
      c.expect(s < 120.0, "K7 within 2 minutes");
      note += " (K7 " + std::to_string(s).substr(0, 5) + "s)";
    }
  }
}

void paths(Criterion& c, std::string&) {
  for (std::size_t n : {2, 4, 6}) {
    c.expect(dom(path_graph(n)).value == n / 2, "DOM(P" + n_str(n) + ") = n/2");
    c.expect(dom(join(path_graph(n), complete_graph(1))).value == n / 2 + 1, "DOM(P" + n_str(n) + " + K1) = n/2 + 1");
  }
  for (std::size_t n : {2, 4, 6, 8})
    c.expect(gamma(path_join_orientation(n)).value == n / 2 + 1, "gamma(path-join orientation, n=" + n_str(n) + ")");
}

void cartesian_small(Criterion& c, std::string&) {
  const auto p3 = path_graph(3), k3 = complete_graph(3);
  c.expect(dom(cartesian(p3, k3).graph).value == 4, "DOM(P3 x K3) = 4");
  c.expect(dom(cartesian(k3, k3).graph).value == 4, "DOM(K3 x K3) = 4");
  const Digraph d = k3_box_k3_orientation();
  c.expect(gamma(d).value == 4, "gamma(K3 x K3 orientation) = 4");
  bool two = true;
  for (VertexId v = 0; v < d.order(); ++v) two &= d.out_degree(v) == 2;
  c.expect(two, "every out-degree is 2");
}

void prisms(Criterion& c, std::string&) {
  for (std::size_t n = 3; n <= 6; ++n) {
    c.expect(dom(cartesian(cycle_graph(n), complete_graph(2)).graph).value == n, "DOM(C" + n_str(n) + " x K2) = n");
    c.expect(gamma(prism_orientation(n)).value == n, "gamma(prism orientation, n=" + n_str(n) + ") = n");
  }
}

// 50 seeded random graphs, n <= 7, with at most 28 edges in G x K2.
void prism_corpus(Criterion& c, std::string& note) {
  constexpr std::size_t kProductEdges = 28;
  std::mt19937_64 rng(harness::kDefaultSeed);
  DomOptions opts;
  opts.max_edges = kProductEdges;
  std::size_t bipartite = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    UndirectedGraph g = harness::random_graph(rng, 2, 7, kProductEdges);
    while (2 * g.size() + g.order() > kProductEdges) g = harness::random_graph(rng, 2, 7, kProductEdges);
    const std::size_t v = dom(cartesian(g, complete_graph(2)).graph, opts).value;
    const std::size_t b = max_induced_bipartite_order(g).value;
    c.expect(b <= v && v <= g.order(), "bip <= DOM(G x K2) <= n on graph " + n_str(i));
    if (is_bipartite(g).bipartite) {
      ++bipartite;
      c.expect(v == g.order(), "DOM(G x K2) = n for bipartite graph " + n_str(i));
    }
  }
  note = " " + n_str(bipartite) + " of 50 bipartite";
}

void coronas(Criterion& c, std::string& note) {
  const std::vector<UndirectedGraph> gs{complete_graph(1), path_graph(2), path_graph(3), complete_graph(3)};
  const std::vector<UndirectedGraph> hs{complete_graph(1), path_graph(2)};
  std::size_t pairs = 0;
  for (const auto& g : gs) {
    for (const auto& h : hs) {
      const UndirectedGraph k = corona(g, h).graph;
      if (k.size() > 16) continue;
      ++pairs;
      const std::size_t formula = corona_dom(g, h);
      c.expect(dom(k).value == formula, "DOM(G o H) = formula, pair " + n_str(pairs));
      c.expect(dom_oracle(k) == formula, "oracle agrees, pair " + n_str(pairs));
    }
  }
  note = " " + n_str(pairs) + " pairs";
}

void tripartite(Criterion& c, std::string& note) {
  std::size_t cases = 0;
  for (std::size_t a = 1; a <= 20; ++a)
    for (std::size_t b = a; a * b <= 20; ++b)
      for (std::size_t d = b; a * b + a * d + b * d <= 20; ++d) {
        ++cases;
        c.expect(dom(multipartite_graph({a, b, d})).value == tripartite_dom(a, b, d),
                 "K_{" + n_str(a) + "," + n_str(b) + "," + n_str(d) + "}");
      }
  c.expect(tripartite_dom(1, 1, 1) == 2 && tripartite_dom(1, 1, 2) == 2 && tripartite_dom(1, 2, 2) == 2 &&
               tripartite_dom(2, 2, 2) == 3 && tripartite_dom(1, 2, 3) == 3 && tripartite_dom(2, 2, 3) == 3,
           "listed tripartite values");
  c.expect(gamma(k222_orientation()).value == 3, "gamma(K222 orientation) = 3");
  note = " " + n_str(cases) + " instances";
}

void multipartite_rec(std::vector<std::size_t>& parts, Criterion& c, std::size_t& cases) {
  std::size_t total = 0, squares = 0;
  for (std::size_t p : parts) {
    total += p;
    squares += p * p;
  }
  if (parts.size() >= 2) {
    ++cases;
    const BoundsReport b = multipartite_dom_bounds(parts);
    const std::size_t v = dom(multipartite_graph(parts)).value;
    const std::size_t nk = parts.back(), k = parts.size();
    c.expect(nk <= v && v <= std::max(nk, k), "bounds for instance " + n_str(cases));
    c.expect(b.contains(v), "reported interval for instance " + n_str(cases));
    if (nk >= k) c.expect(v == nk, "equality n_k for instance " + n_str(cases));
  }
  for (std::size_t next = parts.empty() ? 1 : parts.back();; ++next) {
    const std::size_t t = total + next, sq = squares + next * next;
    if ((t * t - sq) / 2 > 18 || (parts.empty() && next * next > 18)) break;
    parts.push_back(next);
    multipartite_rec(parts, c, cases);
    parts.pop_back();
  }
}

void multipartite(Criterion& c, std::string& note) {
  std::vector<std::size_t> parts;
  std::size_t cases = 0;
  multipartite_rec(parts, c, cases);
  note = " " + n_str(cases) + " instances";
}

void counterexample(Criterion& c, std::string& note) {
  for (const auto& [k, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Digraph d = acyclic_lex_cycle_orientation(k, s);
    const std::string at = " at (" + n_str(k) + "," + n_str(s) + ")";
    c.expect(is_acyclic(d).acyclic, "acyclic" + at);
    const std::size_t g = gamma(d).value, r = rho(d).value;
    c.expect(g == s + 2 * k - 2, "gamma = s + 2k - 2" + at);
    c.expect(r == s + k - 1, "rho = s + k - 1" + at);
    c.expect(g != r, "gamma != rho" + at);
    if (k == 3 && s == 3) {
      const double secs = seconds_since(t0);
      c.expect(secs < 60.0, "(3,3) within 1 minute");
      note = " (3,3) " + std::to_string(secs).substr(0, 5) + "s";
    }
  }
}

void lexicographic_bounds(Criterion& c, std::string& note) {
  const std::vector<UndirectedGraph> fs{complete_graph(2), empty_graph(2), path_graph(3), complete_graph(3),
                                        empty_graph(3),    cycle_graph(4),  cycle_graph(5)};
  std::size_t pairs = 0;
  for (const auto& g : fs) {
    for (const auto& h : fs) {
      const UndirectedGraph l = lexicographic(g, h).graph;
      if (l.size() > 20) continue;
      ++pairs;
      const std::size_t v = dom(l).value, dg = dom(g).value, dh = dom(h).value;
      c.expect(independence_number(g).value * dh <= v, "lower bound, pair " + n_str(pairs));
      c.expect(v <= std::min(dg * h.order(), dh * g.order()), "upper bound, pair " + n_str(pairs));
    }
  }
  const UndirectedGraph c5 = cycle_graph(5), s2 = empty_graph(2);
  const std::size_t exact = dom(lexicographic(c5, s2).graph).value;
  c.expect(4 <= exact && exact <= 5, "DOM(C5[2K1]) in [4,5]");
  c.expect(gamma(lex_orientation(c5, independence_number(c5).witness, optimal(s2))).value >= 4,
           "lexicographic orientation reaches alpha(C5) DOM(2K1)");
  note = " " + n_str(pairs) + " pairs, DOM(C5[2K1]) = " + n_str(exact);
}

void properties(Criterion& c, std::string& note) {
  const auto results = harness::run_props();
  std::uint64_t checks = 0;
  for (const auto& r : results) {
    checks += r.checked;
    c.expect(r.passed(), r.name + " (first violation: " + r.first_violation + ")");
    c.expect(r.checked > 0, r.name + " ran");
  }
  note = " " + std::to_string(checks) + " property checks";
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&, std::string&)> run;
  };
  const std::vector<Entry> criteria{
      {"complete graphs: DOM(K2)=1, DOM(K3)=2, K4..K7 inside the log interval", complete_graphs},
      {"paths: DOM(P_n)=n/2, DOM(P_n+K1)=n/2+1, path-join orientation", paths},
      {"DOM(P3 x K3)=4, DOM(K3 x K3)=4, 2-out-regular orientation with gamma 4", cartesian_small},
      {"prisms: DOM(C_n x K2)=n and the prism orientation, n=3..6", prisms},
      {"bip(G) <= DOM(G x K2) <= n(G) on 50 seeded random graphs", prism_corpus},
      {"corona formula against search and brute force", coronas},
      {"tripartite closed form for all instances with <= 20 edges", tripartite},
      {"multipartite interval n_k..max(n_k,k), equality when n_k >= k", multipartite},
      {"acyclic orientation of C_{2k+1}[sK1] with gamma != rho", counterexample},
      {"lexicographic product bounds and DOM(C5[2K1])", lexicographic_bounds},
      {"randomized property suite, zero violations", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    Criterion c(log);
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c, note);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    failures += !c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name << " ["
              << c.checks() << " checks" << (note.empty() ? "" : ",") << note << ", " << std::to_string(secs).substr(0, 6) << "s]\n"
              << log.str() << std::flush;
  }
  return failures ? 1 : 0;
}
