#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace flaglab {

using Rational = boost::rational<std::int64_t>;

struct DensityReport {
  /// max e(H)/v(H) over nonempty subgraphs H.
  Rational rho{0};
  /// Sorted vertex set whose induced subgraph attains rho.
  std::vector<Vertex> witness;
  bool strictly_balanced = false;
};

/// Exact maximum subgraph density by parametric minimum cuts. Throws
/// InputError on a graph without vertices.
DensityReport essential_density(const Graph& g);

/// Density is attained by g itself and by no proper subgraph.
bool is_strictly_balanced(const Graph& g);

struct CBoundedReport {
  int d = 0;
  Rational c{0};
  /// Entry i-1 holds the largest number of i-faces on one (i-1)-face, i = 1..d-1.
  std::vector<std::size_t> max_degree;
  /// c^i n^{1-i/d}, for display; the pass decision is exact.
  std::vector<double> bound;
  bool pass = true;
};

CBoundedReport c_bounded_check(const SimplicialComplex& x, int d, Rational c);

/// Largest number of i-faces containing a single (i-1)-face of x.
std::size_t max_face_degree(const SimplicialComplex& x, int i);

/// essential density < d + 1/(4+4d), compared exactly. True for a graph
/// without vertices.
bool density_bound_audit(const Graph& g, int d);

/// d + 1/(4+4d)
Rational density_threshold(int d);

}  // namespace flaglab
