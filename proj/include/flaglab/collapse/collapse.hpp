#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flaglab/topology/complex.hpp"

namespace flaglab {

/// Removal of a free face together with its unique proper coface.
struct CollapseStep {
  Face free_face;
  Face coface;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

enum class CollapseStatus { collapsed_below_d, almost_collapsed, stuck };

const char* to_string(CollapseStatus s);

struct CollapseOutcome {
  std::vector<CollapseStep> steps;
  SimplicialComplex residual;
  CollapseStatus status = CollapseStatus::stuck;
  /// Vertex sets (2d+2 labels each) of the cross-polytope boundaries left in
  /// the residual when status is almost_collapsed.
  std::vector<Face> surviving_crosspolytopes;
  /// For almost_d_collapse: index of the first strongly connected component
  /// that could not be collapsed.
  std::optional<std::size_t> stuck_component;
};

/// Thrown when a step sequence does not apply to a complex.
class IllegalCollapse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrderPolicy {
  enum class Kind { lexicographic, random };
  Kind kind = Kind::lexicographic;
  /// Attempts for the random policy; each uses a seed derived from the call's.
  int retries = 8;

  static OrderPolicy lexicographic() { return {}; }
  static OrderPolicy random(int retries = 8) { return {Kind::random, retries}; }
};

/// Applies collapse steps whose free face has dimension >= d-1 until none is
/// left. Higher cofaces go first; among equals the lexicographic policy takes
/// the smallest coface, the random one a seeded pseudo-random order. Status
/// is collapsed_below_d or stuck; under the random policy the first of
/// `retries` attempts that succeeds is returned (else the last attempt).
CollapseOutcome greedy_d_collapse(const SimplicialComplex& x, int d,
                                  OrderPolicy policy = OrderPolicy::lexicographic(),
                                  std::uint64_t seed = 0);

/// Lifts a (d-1)-collapse of lk(v) to x by adding v to every step. On
/// success status is collapsed_below_d and v lies in no face of dimension
/// >= d; otherwise status is stuck and no steps are returned.
CollapseOutcome collapse_around_vertex(const SimplicialComplex& x, Vertex v, int d);

/// Collapses each strongly connected d-component's flag closure on its own and
/// concatenates the steps in component order. Components that end as a single
/// cross-polytope boundary are reported in the census. x must be a flag
/// complex materialized through dimension d+1 at least.
CollapseOutcome almost_d_collapse(const SimplicialComplex& x, int d, std::uint64_t seed = 0);

enum class Decision { yes, no, budget_exhausted };

const char* to_string(Decision d);

inline constexpr std::size_t kDefaultExactBudget = 200000;

/// Exhaustive search for a collapse sequence removing every face of
/// dimension >= d. `budget` caps the number of search nodes expanded.
Decision is_d_collapsible_exact(const SimplicialComplex& x, int d,
                                std::size_t budget = kDefaultExactBudget);

/// Same search, returning the witnessing sequence on success.
std::optional<std::vector<CollapseStep>> find_d_collapse(const SimplicialComplex& x, int d,
                                                         std::size_t budget = kDefaultExactBudget);

/// Applies steps in order, checking each is legal at its moment of
/// application. Throws IllegalCollapse naming the first bad step.
SimplicialComplex replay(const SimplicialComplex& x, const std::vector<CollapseStep>& steps);

/// Trace format: one step per line, "free face -> coface", each in facet format.
void write_trace(std::ostream& out, const std::vector<CollapseStep>& steps);
std::vector<CollapseStep> read_trace(std::istream& in);

}  // namespace flaglab
