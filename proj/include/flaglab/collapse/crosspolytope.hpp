#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace flaglab {

/// One embedded copy of the (d+1)-dimensional cross-polytope graph: d+1
/// antipodal pairs (a < b), sorted by their first vertex. Vertices from
/// different pairs are adjacent in the host graph.
struct CrossPolytopeHit {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  /// No antipodal pair is an edge, so the copy is an induced subgraph.
  bool induced = false;

  Face vertex_set() const;
  friend bool operator==(const CrossPolytopeHit&, const CrossPolytopeHit&) = default;
};

/// Every subgraph copy, once per pairing (not once per automorphism), in
/// lexicographic order of the pair lists.
std::vector<CrossPolytopeHit> detect_crosspolytopes(const Graph& g, int d, bool induced_only = false);

/// Embedded and induced copy counts without keeping the hits.
struct CrossPolytopeCount {
  std::size_t embedded = 0;
  std::size_t induced = 0;
};
CrossPolytopeCount count_crosspolytopes(const Graph& g, int d);

/// The cross-polytope graph on 2d+2 vertices; vertex 2i is antipodal to 2i+1.
Graph crosspolytope_graph(int d);

}  // namespace flaglab
