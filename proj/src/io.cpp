#include "tuza/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tuza {

ParseError::ParseError(int line, const std::string& what)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long long integer(const std::string& t, int line) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "not an integer: '" + t + "'");
  }
  if (used != t.size()) throw ParseError(line, "not an integer: '" + t + "'");
  return v;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'p <n>'");
      if (n >= 0) throw ParseError(line_no, "duplicate 'p' line");
      long long v = integer(tok[1], line_no);
      if (v < 0 || v > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      n = static_cast<int>(v);
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "'e' line before 'p' line");
      if (tok.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <w>'");
      long long u = integer(tok[1], line_no);
      long long v = integer(tok[2], line_no);
      long long w = integer(tok[3], line_no);
      if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "loop edge");
      if (w < 0) throw ParseError(line_no, "negative weight");
      edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    } else {
      throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError(0, "missing 'p' line");
  return Multigraph(n, edges);
}

std::string emit_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace tuza
