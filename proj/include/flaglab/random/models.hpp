#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flaglab/random/rng.hpp"
#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace flaglab {

/// Each k-subset of {0..n-1} kept independently with probability p, visited
/// in lexicographic order with geometric skips. Returns the kept subsets as
/// a flat sorted array of k-tuples.
std::vector<Vertex> sample_subsets(std::size_t n, std::size_t k, double p, Rng& rng);

/// Erdos-Renyi G(n, p). Throws InputError unless 0 <= p <= 1.
Graph sample_gnp(std::size_t n, double p, RngSpec spec);
Graph sample_gnp(std::size_t n, double p, Rng& rng);

/// Clique complex of sample_gnp(n, p) truncated at dim_cap.
SimplicialComplex sample_flag_complex(std::size_t n, double p, int dim_cap, RngSpec spec);

/// Complete (d-1)-skeleton on n vertices plus each d-face with probability
/// p. For d = 1 this draws exactly the edges sample_gnp draws.
SimplicialComplex sample_linial_meshulam(std::size_t n, int d, double p, RngSpec spec);

/// Published numerical constants for the model and derived quantities.
struct ReferenceConstants {
  int d = 0;
  /// Approximate values of gamma_d and c_d, known for 2 <= d <= 5.
  std::optional<double> gamma;
  std::optional<double> c_threshold;
  /// 1 / (2^{2d+1} d).
  double epsilon = 0;

  /// Expected number of d-dimensional cross-polytope copies in the limit:
  /// c^{2d(d+1)} / (2^{d+1} (d+1)!).
  double poisson_mean(double c) const;
  /// Throw InputError when d is outside the tabulated range.
  double gamma_d() const;
  double c_d() const;
};

/// Requires d >= 1.
ReferenceConstants reference_constants(int d);

/// 2^{d+1} (d+1)!, the symmetry count of the cross-polytope graph.
std::uint64_t crosspolytope_automorphisms(int d);

/// Exact finite-n mean of the embedded copy count: (n)_{2d+2} p^{2d(d+1)}
/// divided by the symmetry count.
double expected_crosspolytope_count(std::size_t n, int d, double p);

/// 1 - sqrt(1 - c) exp(c/2 + c^2/4): limiting probability that G(n, c/n)
/// contains a cycle, for 0 <= c < 1.
double cycle_probability_limit(double c);

}  // namespace flaglab
