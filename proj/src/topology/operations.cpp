#include "flaglab/topology/operations.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace flaglab {
namespace {

// Depth-first enumeration of cliques in increasing vertex order. Preorder over
// the sorted candidate trie visits the cliques of every fixed size in
// lexicographic order.
// A clique has at most max degree + 1 vertices, which bounds any cap
// (including kUnbounded) by something that can be allocated.
int effective_cap(const Graph& g, int dim_cap) {
  std::size_t top = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) top = std::max(top, g.degree(v));
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(dim_cap, -1) + 1), top + 1)) - 1;
}

template <typename Visit>
void enumerate_cliques(const Graph& g, int dim_cap, Visit&& visit) {
  dim_cap = effective_cap(g, dim_cap);
  if (dim_cap < 0) return;
  const std::size_t max_size = static_cast<std::size_t>(dim_cap) + 1;
  std::vector<Vertex> clique;
  std::vector<std::vector<Vertex>> cand(max_size + 1);

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    visit(std::span<const Vertex>(clique));
    if (clique.size() == max_size) return;
    const auto& here = cand[depth];
    for (std::size_t i = 0; i < here.size(); ++i) {
      const Vertex w = here[i];
      auto nb = g.neighbors(w);
      auto& next = cand[depth + 1];
      next.clear();
      std::set_intersection(here.begin() + static_cast<std::ptrdiff_t>(i) + 1, here.end(),
                            std::upper_bound(nb.begin(), nb.end(), w), nb.end(),
                            std::back_inserter(next));
      clique.push_back(w);
      self(self, depth + 1);
      clique.pop_back();
    }
  };

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    cand[1].assign(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
    clique.assign(1, v);
    recurse(recurse, 1);
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g, int dim_cap) {
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(effective_cap(g, dim_cap) + 1));
  enumerate_cliques(g, dim_cap, [&](std::span<const Vertex> c) {
    auto& layer = layers[c.size() - 1];
    layer.insert(layer.end(), c.begin(), c.end());
  });
  return SimplicialComplex::from_sorted_layers(g.vertex_count(), std::move(layers), dim_cap);
}

std::vector<std::size_t> clique_counts(const Graph& g, int dim_cap) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(effective_cap(g, dim_cap) + 1), 0);
  enumerate_cliques(g, dim_cap, [&](std::span<const Vertex> c) { ++counts[c.size() - 1]; });
  return counts;
}

SimplicialComplex link(const SimplicialComplex& x, const Face& sigma) {
  if (!x.contains(sigma)) throw InputError("link: face {" + sigma.to_string() + "} is not in the complex");
  const int s = sigma.dimension();
  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> rest;
  for (int k = s + 1; k <= x.dimension(); ++k) {
    std::vector<Vertex> layer;
    for (std::size_t i = 0; i < x.face_count(k); ++i) {
      auto tau = x.face(k, i);
      if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
      rest.clear();
      std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
      layer.insert(layer.end(), rest.begin(), rest.end());
    }
    layers.push_back(std::move(layer));
  }
  // Deleting the same subset from lexicographically sorted supersets keeps
  // them sorted: the first differing position never holds a vertex of sigma.
  const int cap = x.bounded() ? x.dim_cap() - (s + 1) : SimplicialComplex::kUnbounded;
  return SimplicialComplex::from_sorted_layers(x.vertex_count(), std::move(layers), cap);
}

SimplicialComplex flag_closure(const SimplicialComplex& x, int dim_cap) {
  return clique_complex(x.graph(), dim_cap);
}

namespace {

// For every d-face, the indices of its (d-1)-faces; grouping d-faces by a
// shared facet gives the dual-graph adjacency.
std::vector<std::vector<std::size_t>> faces_by_facet(const SimplicialComplex& x, int d) {
  std::vector<std::vector<std::size_t>> by_facet(x.face_count(d - 1));
  std::vector<Vertex> buf(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < x.face_count(d); ++j) {
    auto f = x.face(d, j);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) buf[w++] = f[i];
      }
      if (auto idx = x.index_of(buf)) by_facet[*idx].push_back(j);
    }
  }
  return by_facet;
}

}  // namespace

DualGraph dual_graph(const SimplicialComplex& x, int d) {
  if (d < 1) throw InputError("dual_graph: d must be at least 1");
  DualGraph g;
  g.d = d;
  g.node_count = x.face_count(d);
  for (const auto& group : faces_by_facet(x, d)) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) g.links.emplace_back(group[a], group[b]);
    }
  }
  std::sort(g.links.begin(), g.links.end());
  return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const SimplicialComplex& x,
                                                                    int d) {
  if (d < 1) throw InputError("strongly_connected_components: d must be at least 1");
  const std::size_t m = x.face_count(d);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& group : faces_by_facet(x, d)) {
    for (std::size_t a = 1; a < group.size(); ++a) {
      const std::size_t r1 = find(group[0]), r2 = find(group[a]);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  }
  // Roots are the smallest member, so scanning in index order yields the
  // components already sorted by their first face.
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(m, static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t r = find(j);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(j);
  }
  return comps;
}

Graph component_graph(const SimplicialComplex& x, int d, const std::vector<std::size_t>& faces) {
  std::vector<Edge> edges;
  for (std::size_t j : faces) {
    auto f = x.face(d, j);
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace_back(f[a], f[b]);
    }
  }
  return Graph(x.vertex_count(), edges);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.bounded() && b.dimension() > a.dim_cap()) throw InputError("disjoint_union: second complex exceeds the cap");
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(std::max(a.dimension(), b.dimension()) + 1));
  for (int k = 0; k < static_cast<int>(layers.size()); ++k) {
    auto& out = layers[static_cast<std::size_t>(k)];
    auto la = a.layer(k);
    auto lb = b.layer(k);
    out.assign(la.begin(), la.end());
    for (Vertex v : lb) out.push_back(v + shift);
  }
  return SimplicialComplex::from_sorted_layers(a.vertex_count() + b.vertex_count(), std::move(layers), a.dim_cap());
}

SimplicialComplex projective_plane6() {
  const std::vector<Face> facets = {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                    {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  return SimplicialComplex::from_facets(6, facets);
}

}  // namespace flaglab
