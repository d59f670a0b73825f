#include "orientdom/harness/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "orientdom/error.hpp"
#include "orientdom/products.hpp"

namespace orientdom::harness {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  UndirectedGraph parse() {
    UndirectedGraph g = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  UndirectedGraph expression() {
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    skip_space();
    if (peek() == ':') {
      ++pos_;
      return family_of(name, at);
    }
    if (peek() != '(') fail("expected ':' or '(' after '" + name + "'");
    ++pos_;
    UndirectedGraph left = expression();
    expect(',');
    UndirectedGraph right = expression();
    expect(')');
    if (name == "cart") return cartesian(left, right).graph;
    if (name == "lex") return lexicographic(left, right).graph;
    if (name == "corona") return corona(left, right).graph;
    if (name == "join") return join(left, right);
    if (name == "union") return disjoint_union(left, right);
    fail_at(at, "unknown operation '" + name + "'");
  }

  UndirectedGraph family_of(const std::string& name, std::size_t at) {
    if (name == "multi") {
      std::vector<std::size_t> parts{number()};
      // A comma followed by a digit continues the part list; anything else
      // belongs to an enclosing operation.
      while (peek() == ',' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        parts.push_back(number());
      }
      return multipartite_graph(parts);
    }
    const std::size_t n = number();
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "empty") return empty_graph(n);
    fail_at(at, "unknown family '" + name + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family or operation name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return value;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw Error(Errc::parse_error, "column " + std::to_string(at + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

UndirectedGraph parse_graph_expression(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    throw Error(Errc::parse_error, std::string(text) + ": " + e.what());
  }
}

}  // namespace orientdom::harness
