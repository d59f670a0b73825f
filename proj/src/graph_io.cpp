#include "orientdom/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "orientdom/error.hpp"

namespace orientdom {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
  }
};

bool read_count(std::istringstream& fields, std::size_t& value) {
  long long raw = 0;
  if (!(fields >> raw) || raw < 0) return false;
  value = static_cast<std::size_t>(raw);
  return true;
}

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
};

Header read_header(LineReader& reader, const std::string& tag) {
  std::string line;
  if (!reader.next(line)) reader.fail("missing '" + tag + " <n> <m>' header");
  std::istringstream fields(line);
  std::string word;
  Header h;
  if (!(fields >> word) || word != tag) reader.fail("expected header '" + tag + " <n> <m>'");
  if (!read_count(fields, h.n) || !read_count(fields, h.m)) reader.fail("malformed header counts");
  if (fields >> word) reader.fail("trailing text after header");
  if (h.n == 0) reader.fail("vertex count must be positive");
  if (h.n > kMaxVertices) reader.fail("vertex count exceeds " + std::to_string(kMaxVertices));
  return h;
}

std::vector<std::pair<VertexId, VertexId>> read_pairs(LineReader& reader, const Header& h) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string line;
  for (std::size_t i = 0; i < h.m; ++i) {
    if (!reader.next(line)) {
      reader.fail("expected " + std::to_string(h.m) + " edge lines, found " + std::to_string(i));
    }
    std::istringstream fields(line);
    std::size_t u = 0, v = 0;
    std::string extra;
    if (!read_count(fields, u) || !read_count(fields, v) || (fields >> extra)) {
      reader.fail("expected two non-negative vertex ids");
    }
    if (u >= h.n || v >= h.n) reader.fail("vertex id out of range [0, " + std::to_string(h.n) + ")");
    if (u == v) reader.fail("self-loop at vertex " + std::to_string(u));
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (reader.next(line)) reader.fail("more lines than the header's count of " + std::to_string(h.m));
  return pairs;
}

template <typename T>
T build_or_rethrow(LineReader& reader, auto&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    throw Error(Errc::parse_error, "line " + std::to_string(reader.line_no) + ": " + e.what());
  }
}

}  // namespace

UndirectedGraph read_graph(std::istream& in) {
  LineReader reader{in};
  const Header h = read_header(reader, "ug");
  const auto pairs = read_pairs(reader, h);
  return build_or_rethrow<UndirectedGraph>(reader, [&] { return UndirectedGraph::build(h.n, pairs); });
}

Digraph read_digraph(std::istream& in) {
  LineReader reader{in};
  const Header h = read_header(reader, "dg");
  const auto pairs = read_pairs(reader, h);
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [u, v] : pairs) arcs.push_back({u, v});
  return build_or_rethrow<Digraph>(reader, [&] { return Digraph::build(h.n, arcs); });
}

UndirectedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return read_graph(in);
}

Digraph read_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return read_digraph(in);
}

void write_graph(std::ostream& out, const UndirectedGraph& g) {
  out << "ug " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "dg " << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string to_text(const UndirectedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string to_text(const Digraph& d) {
  std::ostringstream os;
  write_digraph(os, d);
  return os.str();
}

}  // namespace orientdom
