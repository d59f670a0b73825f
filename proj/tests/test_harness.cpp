#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orientdom/harness/cache.hpp"
#include "orientdom/harness/expression.hpp"
#include "orientdom/harness/props.hpp"
#include "orientdom/harness/verify.hpp"
#include "orientdom/products.hpp"
#include "support.hpp"

using namespace orientdom;
using namespace orientdom::harness;
using testing::error_of;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string parse_error_text(const std::string& expr) {
  try {
    parse_graph_expression(expr);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph expressions") {
  CHECK(parse_graph_expression("path:4") == path_graph(4));
  CHECK(parse_graph_expression("multi:1,2,2") == multipartite_graph({1, 2, 2}));
  CHECK(parse_graph_expression("cart(path:3,complete:3)") == cartesian(path_graph(3), complete_graph(3)).graph);
  CHECK(parse_graph_expression("lex(cycle:5,empty:2)") == lexicographic(cycle_graph(5), empty_graph(2)).graph);
  CHECK(parse_graph_expression("corona(complete:3,path:2)") == corona(complete_graph(3), path_graph(2)).graph);
  CHECK(parse_graph_expression("join(path:4,complete:1)") == join(path_graph(4), complete_graph(1)));
  CHECK(parse_graph_expression(" union( path:2 , multi:1,2 ) ") ==
        disjoint_union(path_graph(2), multipartite_graph({1, 2})));
  CHECK(parse_graph_expression("cart(lex(path:2,empty:2),complete:2)") ==
        cartesian(lexicographic(path_graph(2), empty_graph(2)).graph, complete_graph(2)).graph);
}

TEST_CASE("expression errors carry a column") {
  CHECK(parse_error_text("cart(path:3").find("column") != std::string::npos);
  CHECK(parse_error_text("tree:4").find("column 1") != std::string::npos);
  CHECK(parse_error_text("path:").find("column") != std::string::npos);
  CHECK(parse_error_text("path:3 x").find("column") != std::string::npos);
  CHECK_FALSE(parse_error_text("cycle:2").empty());
  CHECK_FALSE(parse_error_text("").empty());
}

TEST_CASE("cache stores, hits and keys by labeled graph") {
  TempDir dir("orientdom-cache-test");
  const auto p = path_graph(4);
  {
    DomCache cache(dir.path);
    CHECK_FALSE(cache.lookup(p).has_value());
    cache.store(p, 2);
  }
  DomCache again(dir.path);
  CHECK(again.lookup(p) == 2u);
  // Same graph, different labels: 0-2-1-3 is also a path but hashes differently.
  CHECK_FALSE(again.lookup(UndirectedGraph::build(4, {{0, 2}, {2, 1}, {1, 3}})).has_value());
  CHECK(DomCache::key(p).size() == 16);
  CHECK(DomCache::key(p) == DomCache::key(path_graph(4)));
  CHECK(DomCache::key(p) != DomCache::key(cycle_graph(4)));

  DomCache bumped(dir.path, "orientdom-dom-next");
  CHECK_FALSE(bumped.lookup(p).has_value());
}

TEST_CASE("corrupt cache lines are skipped with a warning") {
  TempDir dir("orientdom-cache-corrupt");
  const auto k3 = complete_graph(3);
  {
    std::ofstream out(dir.path / "dom-cache.tsv");
    out << "garbage line\n" << DomCache::key(k3) << "\tnot-a-number\t" << kSolverVersion << '\n';
    out << DomCache::key(k3) << '\t' << 2 << '\t' << kSolverVersion << '\n';
  }
  DomCache cache(dir.path);
  CHECK(cache.lookup(k3) == 2u);
  CHECK(cache.warnings().size() == 2);
}

TEST_CASE("verify suites") {
  CHECK(verify_suites().back() == "all");
  CHECK(error_of([] { run_verify("nosuch"); }) == Errc::invalid_argument);

  const auto cases = run_verify("tripartite");
  CHECK(exit_code(cases) == 0);
  bool saw_222 = false;
  for (const auto& c : cases) {
    CHECK(c.suite == "tripartite");
    CHECK(c.status == CaseStatus::pass);
    saw_222 |= c.description.find("K_{2,2,2}") != std::string::npos && c.expected.lower == 3;
  }
  CHECK(saw_222);

  const auto counter = run_verify("counterexample");
  CHECK(counter.size() == 16);
  CHECK(exit_code(counter) == 0);
}

TEST_CASE("cases over the edge cap are skipped, not dropped") {
  const auto cases = run_verify("bounds");
  std::size_t skipped = 0;
  for (const auto& c : cases) {
    if (c.status != CaseStatus::skipped) continue;
    ++skipped;
    CHECK(c.description.find("K9") != std::string::npos);
    CHECK(c.expected.text() == "3");
    CHECK_FALSE(c.computed.has_value());
  }
  CHECK(skipped == 1);
  CHECK(exit_code(cases) == 0);
}

TEST_CASE("report formats and exit codes") {
  std::vector<VerifyCase> cases{{"s", "first", Expected::exactly(2), 2u, CaseStatus::pass},
                                {"s", "second", Expected::between(1, 3), std::nullopt, CaseStatus::skipped}};
  std::ostringstream porcelain;
  print_report(porcelain, cases, true);
  CHECK(porcelain.str() == "s\tfirst\t2\t2\tPASS\ns\tsecond\t[1,3]\t-\tSKIPPED\n");
  std::ostringstream table;
  print_report(table, cases, false);
  CHECK(table.str().find("2 cases: 1 passed, 0 failed, 1 skipped") != std::string::npos);
  CHECK(exit_code(cases) == 0);
  cases.push_back({"s", "third", Expected::exactly(1), 2u, CaseStatus::fail});
  CHECK(exit_code(cases) == 1);
  CHECK(exit_code({}) == 0);
}

TEST_CASE("verify output does not depend on workers") {
  VerifyOptions one, four;
  four.dom.workers = 4;
  std::ostringstream a, b;
  print_report(a, run_verify("lex", one), true);
  print_report(b, run_verify("lex", four), true);
  CHECK(a.str() == b.str());
}

TEST_CASE("small property run is clean and reproducible") {
  PropsOptions opts;
  opts.count = 15;
  opts.max_tree_order = 5;
  const auto first = run_props(opts);
  const auto second = run_props(opts);
  REQUIRE(first.size() == 8);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK_MESSAGE(first[i].passed(), first[i].name << ": " << first[i].first_violation);
    CHECK(first[i].checked > 0);
    CHECK(first[i].checked == second[i].checked);
  }
}

TEST_CASE("random corpora are seeded") {
  CHECK(random_corpus(5, 10, 1, 8, 14) == random_corpus(5, 10, 1, 8, 14));
  for (const auto& g : random_corpus(5, 50, 2, 8, 14)) {
    CHECK(g.order() >= 2);
    CHECK(g.order() <= 8);
    CHECK(g.size() <= 14);
  }
  CHECK(labeled_trees(4).size() == 16);
  for (const auto& t : labeled_trees(6)) CHECK(t.size() == 5);
}
