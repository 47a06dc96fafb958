#include "tritail/edgelist.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tritail {

namespace {

[[noreturn]] void fail(int line_no, const std::string& line, const std::string& what) {
  throw std::runtime_error("edge list, line " + std::to_string(line_no) + ": " + what +
                           " (got \"" + line + "\")");
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;

  // Header first: n=<int>.
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream hs(line);
    char c1 = 0, c2 = 0;
    if (!(hs >> c1 >> c2) || c1 != 'n' || c2 != '=') fail(line_no, line, "expected header n=<int>");
    if (!(hs >> n)) fail(line_no, line, "expected integer after n=");
    std::string rest;
    if (hs >> rest) fail(line_no, line, "trailing content after header");
    if (n < 1) fail(line_no, line, "vertex count must be >= 1");
    break;
  }
  if (n < 0) throw std::runtime_error("edge list: missing header n=<int>");

  Graph g(n);
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream es(line);
    int u = 0, v = 0;
    if (!(es >> u >> v)) fail(line_no, line, "expected edge \"u v\"");
    std::string rest;
    if (es >> rest) fail(line_no, line, "trailing content after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, line, "endpoint out of range");
    if (u == v) fail(line_no, line, "self-loop");
    g.add_edge(u, v);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n=" << g.n() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) out << u << " " << v << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace tritail
