#pragma once

#include <stdexcept>
#include <string>

namespace orientdom {

enum class Errc {
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  empty_graph,
  invalid_argument,
  parse_error,
  cap_exceeded,
  shape_mismatch,
};

const char* to_string(Errc code);

// Every validation failure in the library is reported as an Error carrying
// one of the codes above, so callers can tell e.g. a self-loop from a
// duplicate edge without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace orientdom
