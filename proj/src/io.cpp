#include "mecenum/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mecenum {

namespace {

std::runtime_error parse_error(const std::string& what, const std::string& line) {
  return std::runtime_error("malformed graph input: " + what + " in line '" + line + "'");
}

}  // namespace

Pdag read_pdag(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  Pdag g;
  int edges_read = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n >> m;
      if (ls.fail() || tag != "pdag" || n < 0 || m < 0)
        throw parse_error("expected header 'pdag <n> <m>'", line);
      g = Pdag(n);
      continue;
    }
    Vertex u, v;
    std::string op;
    ls >> u >> op >> v;
    if (ls.fail()) throw parse_error("expected '<u> -> <v>' or '<u> -- <v>'", line);
    if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error("vertex id out of range", line);
    try {
      if (op == "->")
        g.add_directed(u, v);
      else if (op == "--")
        g.add_undirected(u, v);
      else
        throw parse_error("unknown edge operator '" + op + "'", line);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line);
    }
    ++edges_read;
  }
  if (n < 0) throw std::runtime_error("malformed graph input: missing 'pdag <n> <m>' header");
  if (edges_read != m)
    throw std::runtime_error("malformed graph input: header announces " + std::to_string(m) +
                             " edges, found " + std::to_string(edges_read));
  return g;
}

Pdag read_pdag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_pdag(in);
}

Pdag parse_pdag(const std::string& text) {
  std::istringstream in(text);
  return read_pdag(in);
}

void write_pdag(std::ostream& out, const Pdag& g) {
  struct Line {
    Vertex lo, hi;
    int kind;  // 0 directed, 1 undirected
    Vertex from, to;
  };
  std::vector<Line> lines;
  for (auto [u, v] : g.directed_edges())
    lines.push_back({std::min(u, v), std::max(u, v), 0, u, v});
  for (auto [u, v] : g.undirected_edges()) lines.push_back({u, v, 1, u, v});
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::tie(a.lo, a.hi, a.kind) < std::tie(b.lo, b.hi, b.kind);
  });
  out << "pdag " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Line& l : lines)
    out << l.from << (l.kind == 0 ? " -> " : " -- ") << l.to << '\n';
}

std::string to_text(const Pdag& g) {
  std::ostringstream out;
  write_pdag(out, g);
  return out.str();
}

std::string to_dot(const Pdag& g) {
  std::ostringstream out;
  out << "digraph g {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.directed_edges()) out << "  " << u << " -> " << v << ";\n";
  for (auto [u, v] : g.undirected_edges())
    out << "  " << u << " -> " << v << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mecenum
