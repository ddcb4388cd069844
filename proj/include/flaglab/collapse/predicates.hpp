#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flaglab/topology/complex.hpp"

namespace flaglab {

/// Sufficient conditions for a free fundamental group of a 2-complex with
/// higher faces. Unset entries were not decided.
struct PredicateReport {
  /// (1) no face of dimension 5 or more.
  std::optional<bool> dimension_at_most_4;
  /// (2) every embedded octahedral 2-sphere has all 8 triangles maximal.
  std::optional<bool> crosspolytope_triangles_maximal;
  /// (3) no tetrahedron and 4-simplex meet in exactly a triangle.
  std::optional<bool> no_tetrahedron_meets_4simplex_in_triangle;
  /// (4) 3-collapsible.
  std::optional<bool> three_collapsible;
  /// (5) asphericity of bounded subcomplexes; never evaluated.
  std::optional<bool> bounded_subcomplexes_aspherical;
  /// (6) every subgraph on at most `density_vertex_bound` vertices has
  /// density < 25/12.
  std::optional<bool> small_subgraphs_sparse;
  std::size_t density_vertex_bound = 0;
  /// Human-readable notes: counterexamples, or why a check is undecided.
  std::vector<std::string> notes;

  /// All evaluated conditions hold (undecided ones are ignored).
  bool evaluated_hold() const;
};

struct PredicateOptions {
  std::size_t density_vertex_bound = 10;
  std::size_t subset_budget = 2'000'000;
  std::size_t exact_vertex_limit = 14;
  std::size_t exact_budget = 200'000;
};

PredicateReport check_pi1_preconditions(const SimplicialComplex& x, const PredicateOptions& opts = {});

struct SphereCheck {
  bool sphere_free = true;
  /// Triangles of a 2-sphere that does not bound a stored tetrahedron.
  std::vector<Face> witness;
  /// The search hit its node budget before finishing.
  bool exhausted = false;
};

/// Looks for triangulated 2-spheres on at most vmax vertices in the
/// 2-skeleton; the only ones allowed are boundaries of tetrahedra of x.
SphereCheck essentially_2sphere_free(const SimplicialComplex& x, std::size_t vmax = 7,
                                     std::size_t budget = 5'000'000);

}  // namespace flaglab
