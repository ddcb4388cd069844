#include "flaglab/topology/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace flaglab {

Face parse_face(const std::string& line) {
  std::vector<Vertex> vs;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end && *p == ' ') ++p;
  while (p < end) {
    Vertex v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p) throw InputError("malformed facet line: '" + line + "'");
    vs.push_back(v);
    p = next;
    while (p < end && (*p == ' ' || *p == '\r')) ++p;
  }
  return Face(std::move(vs));
}

SimplicialComplex read_complex(std::istream& in, std::size_t n_hint) {
  std::vector<Face> facets;
  std::size_t n = n_hint;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \r") == std::string::npos) continue;
    Face f = parse_face(line);
    for (Vertex v : f) n = std::max<std::size_t>(n, std::size_t{v} + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(n, facets);
}

void write_complex(std::ostream& out, const SimplicialComplex& x) {
  out << "# n=" << x.vertex_count() << " dim=" << x.dimension();
  if (x.bounded()) out << " dim_cap=" << x.dim_cap();
  out << '\n';
  for (const Face& f : x.facets()) out << f.to_string() << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') continue;
      if (line.find_first_not_of(" \r") == std::string::npos) continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("graph file: missing 'n m' header");
  std::size_t n = 0, m = 0;
  {
    const char* p = line.data();
    const char* end = p + line.size();
    auto r1 = std::from_chars(p, end, n);
    p = r1.ptr;
    while (p < end && *p == ' ') ++p;
    auto r2 = std::from_chars(p, end, m);
    if (r1.ec != std::errc() || r2.ec != std::errc()) throw InputError("graph file: bad header '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) throw InputError("graph file: expected " + std::to_string(m) + " edges");
    const char* p = line.data();
    const char* end = p + line.size();
    Vertex u = 0, v = 0;
    auto r1 = std::from_chars(p, end, u);
    p = r1.ptr;
    while (p < end && *p == ' ') ++p;
    auto r2 = std::from_chars(p, end, v);
    if (r1.ec != std::errc() || r2.ec != std::errc()) throw InputError("graph file: bad edge line '" + line + "'");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace flaglab
