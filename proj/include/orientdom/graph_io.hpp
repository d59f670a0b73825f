#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "orientdom/graph.hpp"

namespace orientdom {

// Text formats:
//   ug <n> <m>      followed by m lines "u v" (undirected edge, written u < v
//                   in canonical order)
//   dg <n> <m>      followed by m lines "u v" (arc u -> v)
// Malformed input throws Error(Errc::parse_error) with a "line N:" prefix.
UndirectedGraph read_graph(std::istream& in);
Digraph read_digraph(std::istream& in);
UndirectedGraph read_graph_file(const std::filesystem::path& path);
Digraph read_digraph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const UndirectedGraph& g);
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_text(const UndirectedGraph& g);
std::string to_text(const Digraph& d);

}  // namespace orientdom
