#pragma once

#include <string>
#include <string_view>

#include "tuza/multigraph.hpp"

namespace tuza {

// Malformed input; line() is 1-based, 0 when no line applies.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: `p <n>` once, then `e <u> <v> <w>` lines with 0-based ids.
// `#` starts a comment; blank lines are ignored; repeated pairs sum weights.
Multigraph parse_graph(std::string_view text);

// Canonical text: header then one line per edge in canonical order.
std::string emit_graph(const Multigraph& g);

Multigraph read_graph_file(const std::string& path);

}  // namespace tuza
