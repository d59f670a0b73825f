#pragma once

#include <string_view>

#include "orientdom/graph.hpp"

namespace orientdom::harness {

// Parses graph expressions such as
//   path:4  cycle:5  complete:3  empty:2  multi:1,2,2
//   cart(path:3,complete:3)  lex(cycle:5,empty:2)
//   corona(complete:3,path:2)  join(path:4,complete:1)
// Operations nest freely. Throws Error(Errc::parse_error) with the column of
// the offending character.
UndirectedGraph parse_graph_expression(std::string_view text);

}  // namespace orientdom::harness
