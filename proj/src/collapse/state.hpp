#pragma once

// Mutable view of a complex used by every collapse routine: faces get global
// ids (dimension-major, lexicographic inside a dimension), and each face
// tracks whether it is alive and how many alive cofaces it has.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flaglab/collapse/collapse.hpp"

namespace flaglab::detail {

using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = static_cast<FaceId>(-1);

class CollapseState {
 public:
  explicit CollapseState(SimplicialComplex x);

  const SimplicialComplex& complex() const { return x_; }
  int top_dimension() const { return x_.dimension(); }
  std::size_t face_total() const { return dim_of_.size(); }

  FaceId id(int k, std::size_t index) const { return static_cast<FaceId>(offset_[static_cast<std::size_t>(k)] + index); }
  std::optional<FaceId> find(std::span<const Vertex> sorted) const;
  int dim(FaceId f) const { return dim_of_[f]; }
  std::span<const Vertex> vertices(FaceId f) const {
    return x_.face(dim_of_[f], f - offset_[static_cast<std::size_t>(dim_of_[f])]);
  }
  std::span<const FaceId> facets(FaceId f) const;
  std::span<const FaceId> cofaces(FaceId f) const {
    return {cofaces_.data() + coface_start_[f], cofaces_.data() + coface_start_[f + 1]};
  }

  bool alive(FaceId f) const { return alive_[f] != 0; }
  std::uint32_t alive_cofaces(FaceId f) const { return alive_cofaces_[f]; }
  std::size_t alive_count(int k) const { return alive_per_dim_[static_cast<std::size_t>(k)]; }
  /// Largest dimension with an alive face, or -1.
  int alive_dimension() const;

  /// The unique alive coface when f is alive and free, else kNoFace.
  FaceId free_partner(FaceId f) const;
  bool legal(FaceId sigma, FaceId tau) const { return alive(sigma) && free_partner(sigma) == tau; }
  /// Removes sigma and tau; the caller guarantees legality.
  void apply(FaceId sigma, FaceId tau);

  /// Alive faces, with the original cap.
  SimplicialComplex residual() const;

  CollapseStep step(FaceId sigma, FaceId tau) const {
    return {Face(vertices(sigma)), Face(vertices(tau))};
  }

  struct Snapshot {
    std::vector<std::uint8_t> alive;
    std::vector<std::uint32_t> alive_cofaces;
    std::vector<std::size_t> alive_per_dim;
  };
  Snapshot snapshot() const { return {alive_, alive_cofaces_, alive_per_dim_}; }
  void restore(const Snapshot& s) {
    alive_ = s.alive;
    alive_cofaces_ = s.alive_cofaces;
    alive_per_dim_ = s.alive_per_dim;
  }
  const std::vector<std::uint8_t>& alive_flags() const { return alive_; }

 private:
  void kill(FaceId f);

  SimplicialComplex x_;
  std::vector<std::size_t> offset_;  // first id per dimension, plus the total
  std::vector<int> dim_of_;
  std::vector<FaceId> facet_ids_;     // width k+1 for a k-face, k >= 1
  std::vector<std::size_t> facet_start_;
  std::vector<std::size_t> coface_start_;
  std::vector<FaceId> cofaces_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> alive_cofaces_;
  std::vector<std::size_t> alive_per_dim_;
};

/// Pairs (sigma, tau) in application order, as ids of one state.
using IdSteps = std::vector<std::pair<FaceId, FaceId>>;

/// Greedy run on an existing state, appending to `steps`. Only free faces of
/// dimension >= min_free_dim are used. Returns true when no face of dimension
/// >= min_free_dim + 1 is left.
bool greedy_run(CollapseState& state, int min_free_dim, OrderPolicy::Kind kind,
                std::uint64_t seed, IdSteps& steps);

/// Exhaustive search on a state; on `yes` the state is left collapsed and the
/// witnessing steps are appended.
Decision exact_run(CollapseState& state, int d, std::size_t budget, IdSteps& steps);

/// (d-1)-collapse of the link of v in the current state, lifted; applied to
/// the state on success. Tries greedy orders first, then exhaustive search on
/// small links.
bool collapse_around(CollapseState& state, Vertex v, int d, std::uint64_t seed, IdSteps& steps);

std::uint64_t mix64(std::uint64_t x);

}  // namespace flaglab::detail
