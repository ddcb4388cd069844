#include "state.hpp"

#include <algorithm>

namespace flaglab::detail {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CollapseState::CollapseState(SimplicialComplex x) : x_(std::move(x)) {
  const int top = x_.dimension();
  offset_.assign(static_cast<std::size_t>(top + 2), 0);
  for (int k = 0; k <= top; ++k) {
    offset_[static_cast<std::size_t>(k) + 1] = offset_[static_cast<std::size_t>(k)] + x_.face_count(k);
  }
  const std::size_t total = offset_.back();
  dim_of_.resize(total);
  for (int k = 0; k <= top; ++k) {
    std::fill(dim_of_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(k)]),
              dim_of_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(k) + 1]), k);
  }

  facet_start_.assign(total + 1, 0);
  for (std::size_t f = 0; f < total; ++f) {
    facet_start_[f + 1] = facet_start_[f] + (dim_of_[f] >= 1 ? static_cast<std::size_t>(dim_of_[f] + 1) : 0);
  }
  facet_ids_.resize(facet_start_.back());
  coface_start_.assign(total + 1, 0);
  std::vector<Vertex> buf;
  for (int k = 1; k <= top; ++k) {
    buf.resize(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < x_.face_count(k); ++i) {
      const FaceId f = id(k, i);
      auto vs = x_.face(k, i);
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) {
          if (j != drop) buf[w++] = vs[j];
        }
        const FaceId g = id(k - 1, *x_.index_of(buf));
        facet_ids_[facet_start_[f] + drop] = g;
        ++coface_start_[g + 1];
      }
    }
  }
  for (std::size_t f = 0; f < total; ++f) coface_start_[f + 1] += coface_start_[f];
  cofaces_.resize(coface_start_.back());
  std::vector<std::size_t> fill(coface_start_.begin(), coface_start_.end() - 1);
  for (FaceId f = 0; f < total; ++f) {
    for (FaceId g : facets(f)) cofaces_[fill[g]++] = f;
  }

  alive_.assign(total, 1);
  alive_cofaces_.resize(total);
  for (FaceId f = 0; f < total; ++f) alive_cofaces_[f] = static_cast<std::uint32_t>(cofaces(f).size());
  alive_per_dim_.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) alive_per_dim_[static_cast<std::size_t>(k)] = x_.face_count(k);
}

std::span<const FaceId> CollapseState::facets(FaceId f) const {
  return {facet_ids_.data() + facet_start_[f], facet_ids_.data() + facet_start_[f + 1]};
}

std::optional<FaceId> CollapseState::find(std::span<const Vertex> sorted) const {
  auto idx = x_.index_of(sorted);
  if (!idx) return std::nullopt;
  return id(static_cast<int>(sorted.size()) - 1, *idx);
}

int CollapseState::alive_dimension() const {
  for (int k = top_dimension(); k >= 0; --k) {
    if (alive_per_dim_[static_cast<std::size_t>(k)] > 0) return k;
  }
  return -1;
}

FaceId CollapseState::free_partner(FaceId f) const {
  if (!alive_[f] || alive_cofaces_[f] != 1) return kNoFace;
  // One alive coface of codimension one means no alive superface at all:
  // a larger one would bring a second codimension-one coface along.
  for (FaceId g : cofaces(f)) {
    if (alive_[g]) return g;
  }
  return kNoFace;
}

void CollapseState::kill(FaceId f) {
  alive_[f] = 0;
  --alive_per_dim_[static_cast<std::size_t>(dim_of_[f])];
  for (FaceId g : facets(f)) --alive_cofaces_[g];
}

void CollapseState::apply(FaceId sigma, FaceId tau) {
  kill(tau);
  kill(sigma);
}

SimplicialComplex CollapseState::residual() const {
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(std::max(top_dimension() + 1, 0)));
  for (int k = 0; k <= top_dimension(); ++k) {
    auto& layer = layers[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < x_.face_count(k); ++i) {
      if (!alive_[id(k, i)]) continue;
      auto vs = x_.face(k, i);
      layer.insert(layer.end(), vs.begin(), vs.end());
    }
  }
  return SimplicialComplex::from_sorted_layers(x_.vertex_count(), std::move(layers), x_.dim_cap());
}

}  // namespace flaglab::detail
