// Wall-clock comparison of the serial reference search and the sharded
// OpenMP search on a few fixed graphs.
#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "orientdom/dom.hpp"
#include "orientdom/harness/expression.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Benchmark serial vs parallel DOM search"};
  std::vector<std::string> exprs{"complete:6", "cart(cycle:5,complete:2)", "cart(path:3,complete:3)",
                                 "lex(cycle:5,empty:2)", "multi:2,2,3"};
  std::vector<std::size_t> workers{1, 2, 4};
  std::size_t repeats = 3;
  app.add_option("--expr", exprs, "Graph expressions to time");
  app.add_option("--workers", workers, "Worker counts for the parallel search");
  app.add_option("--repeats", repeats, "Runs per measurement (best is reported)")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  using clock = std::chrono::steady_clock;
  auto best_ms = [&](auto&& run) {
    double best = 0;
    for (std::size_t i = 0; i < repeats; ++i) {
      const auto t0 = clock::now();
      run();
      const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      if (i == 0 || ms < best) best = ms;
    }
    return best;
  };

  std::cout << "max OpenMP threads: " << omp_get_max_threads() << '\n';
  std::cout << std::left << std::setw(28) << "graph" << std::setw(6) << "|E|" << std::setw(6) << "DOM" << std::setw(14)
            << "serial ms";
  for (std::size_t w : workers) std::cout << std::setw(14) << ("w=" + std::to_string(w) + " ms");
  std::cout << '\n';

  int status = 0;
  for (const std::string& e : exprs) {
    const auto g = orientdom::harness::parse_graph_expression(e);
    orientdom::DomOptions opts;
    opts.max_edges = orientdom::kHardEdgeLimit;
    orientdom::DomResult reference;
    const double serial = best_ms([&] { reference = orientdom::dom_serial(g, opts); });
    std::cout << std::left << std::setw(28) << e << std::setw(6) << g.size() << std::setw(6) << reference.value
              << std::setw(14) << std::fixed << std::setprecision(2) << serial;
    for (std::size_t w : workers) {
      opts.workers = w;
      orientdom::DomResult r;
      std::cout << std::setw(14) << best_ms([&] { r = orientdom::dom(g, opts); });
      if (r.value != reference.value || r.witness_orientation != reference.witness_orientation) status = 1;
    }
    std::cout << '\n';
  }
  if (status) std::cerr << "parallel and serial results differ\n";
  return status;
}
