#pragma once

#include <climits>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flaglab/topology/graph.hpp"

namespace flaglab {

/// A simplex as a strictly increasing list of vertex labels.
class Face {
 public:
  Face() = default;
  /// Sorts the labels; throws InputError on a repeated label.
  explicit Face(std::vector<Vertex> vertices);
  Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}
  explicit Face(std::span<const Vertex> sorted_vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;
  /// The face with v added (v must not already be present).
  Face with(Vertex v) const;
  /// The face with v removed (no-op when absent).
  Face without(Vertex v) const;

  std::string to_string() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Faces stratified by dimension, downward closed. Within one dimension the
/// faces are kept in lexicographic order in a flat array, so a face is
/// addressed by (dimension, index) and found by binary search.
///
/// dim_cap records how far a clique complex was materialized: faces above it
/// were never enumerated. Complexes built from explicit facets are unbounded.
class SimplicialComplex {
 public:
  static constexpr int kUnbounded = INT_MAX;

  SimplicialComplex() = default;

  /// Downward closure of `facets`, truncated at dim_cap. Throws InputError on
  /// a label >= n.
  static SimplicialComplex from_facets(std::size_t n, std::span<const Face> facets,
                                       int dim_cap = kUnbounded);

  /// Takes per-dimension flat vertex arrays that are already sorted,
  /// deduplicated and downward closed. Used by the clique enumerator and the
  /// collapse engine; checked only in debug builds.
  static SimplicialComplex from_sorted_layers(std::size_t n,
                                              std::vector<std::vector<Vertex>> layers,
                                              int dim_cap);

  std::size_t vertex_count() const { return n_; }
  int dim_cap() const { return dim_cap_; }
  bool bounded() const { return dim_cap_ != kUnbounded; }

  /// Largest dimension with at least one face; -1 when there are no faces.
  int dimension() const { return static_cast<int>(layers_.size()) - 1; }

  std::size_t face_count(int k) const {
    return k < 0 || k > dimension() ? 0 : layers_[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
  }
  std::size_t total_faces() const;

  /// f_0, ..., f_top where top = max(dimension(), upto).
  std::vector<std::size_t> f_vector(int upto = -1) const;

  std::span<const Vertex> face(int k, std::size_t index) const {
    const auto width = static_cast<std::size_t>(k + 1);
    return {layers_[static_cast<std::size_t>(k)].data() + index * width, width};
  }
  Face face_at(int k, std::size_t index) const { return Face(face(k, index)); }
  std::vector<Face> faces(int k) const;

  /// Raw lexicographically sorted vertex array of the k-faces.
  std::span<const Vertex> layer(int k) const {
    return k < 0 || k > dimension() ? std::span<const Vertex>{} : std::span<const Vertex>(layers_[static_cast<std::size_t>(k)]);
  }

  std::optional<std::size_t> index_of(std::span<const Vertex> sorted_vertices) const;
  std::optional<std::size_t> index_of(const Face& f) const { return index_of(f.vertices()); }
  bool contains(const Face& f) const { return index_of(f).has_value(); }

  /// True when faces may exist above what was materialized: the cap is finite
  /// and there is at least one face of dimension dim_cap.
  bool truncated() const { return bounded() && face_count(dim_cap_) > 0; }

  /// Faces of dimension <= k (the cap is lowered to k).
  SimplicialComplex skeleton(int k) const;

  /// The 1-skeleton as a graph on vertex_count() labels.
  Graph graph() const;

  /// Maximal faces in (dimension, lexicographic) order.
  std::vector<Face> facets() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.layers_ == b.layers_;
  }

 private:
  std::size_t n_ = 0;
  int dim_cap_ = kUnbounded;
  std::vector<std::vector<Vertex>> layers_;
};

/// Lexicographic comparison of two equal-length sorted vertex tuples.
inline bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace flaglab
