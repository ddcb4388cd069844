#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace flaglab {

/// Clique (flag) complex of g truncated at dim_cap: the k-faces are the
/// (k+1)-cliques of g for k <= dim_cap. Faces come out in lexicographic order.
SimplicialComplex clique_complex(const Graph& g, int dim_cap);

/// Number of (k+1)-cliques of g for k = 0..dim_cap, without materializing them.
/// The vector stops at the largest clique size when that comes first.
std::vector<std::size_t> clique_counts(const Graph& g, int dim_cap);

/// lk_x(sigma) = { tau \ sigma : sigma <= tau in x }, on the same labels. The
/// cap drops by dim(sigma) + 1. Throws InputError when sigma is not in x.
SimplicialComplex link(const SimplicialComplex& x, const Face& sigma);

/// Clique complex of the 1-skeleton of x, truncated at dim_cap.
SimplicialComplex flag_closure(const SimplicialComplex& x, int dim_cap);

/// Nodes are the d-faces of a complex (by index into its d-layer); two nodes
/// are linked when the faces share a (d-1)-face.
struct DualGraph {
  int d = 0;
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;  // i < j, sorted
};

DualGraph dual_graph(const SimplicialComplex& x, int d);

/// Connected components of dual_graph(x, d), each a sorted list of d-face
/// indices; components are ordered by their smallest face.
std::vector<std::vector<std::size_t>> strongly_connected_components(const SimplicialComplex& x,
                                                                    int d);

/// Graph spanned by the edges of the listed d-faces of x.
Graph component_graph(const SimplicialComplex& x, int d, const std::vector<std::size_t>& faces);

/// a followed by b with b's labels shifted up by a.vertex_count(). The cap is
/// a's; b must fit under it.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// The 6-vertex, 10-triangle triangulation of the real projective plane.
SimplicialComplex projective_plane6();

}  // namespace flaglab
