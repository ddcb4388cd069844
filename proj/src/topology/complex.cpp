#include "flaglab/topology/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace flaglab {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("face has a repeated vertex");
  }
}

Face::Face(std::span<const Vertex> sorted_vertices)
    : vertices_(sorted_vertices.begin(), sorted_vertices.end()) {}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Face Face::with(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() + 1);
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  out.insert(out.end(), vertices_.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, vertices_.end());
  return Face(std::span<const Vertex>(out));
}

Face Face::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (Vertex w : vertices_) {
    if (w != v) out.push_back(w);
  }
  return Face(std::span<const Vertex>(out));
}

std::string Face::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vertices_[i]);
  }
  return s;
}

namespace {

void trim_layers(std::vector<std::vector<Vertex>>& layers) {
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
}

// Sorts the fixed-width tuples of one layer lexicographically and drops
// duplicates.
void sort_layer(std::vector<Vertex>& flat, std::size_t width) {
  const std::size_t count = flat.size() / width;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto tuple = [&](std::size_t i) { return std::span<const Vertex>(flat.data() + i * width, width); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(tuple(a), tuple(b)); });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < count; ++k) {
    auto t = tuple(order[k]);
    if (k > 0 && std::equal(t.begin(), t.end(), tuple(order[k - 1]).begin())) continue;
    out.insert(out.end(), t.begin(), t.end());
  }
  flat = std::move(out);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t n, std::span<const Face> facets,
                                                 int dim_cap) {
  SimplicialComplex x;
  x.n_ = n;
  x.dim_cap_ = dim_cap;
  int top = -1;
  for (const Face& f : facets) {
    for (Vertex v : f) {
      if (v >= n) throw InputError("face label " + std::to_string(v) + " outside 0.." + std::to_string(n) + "-1");
    }
    top = std::max(top, std::min(f.dimension(), dim_cap));
  }
  if (top < 0) return x;
  x.layers_.resize(static_cast<std::size_t>(top) + 1);
  std::vector<Vertex> sub;
  for (const Face& f : facets) {
    const auto size = f.size();
    if (size == 0) continue;
    // Every nonempty subset of f up to the cap, via bitmask enumeration. Facets
    // read from files are small; larger ones are truncated by the cap first.
    if (size > 30) throw InputError("facet too large to close downward");
    const std::uint32_t full = (1u << size) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int k = std::popcount(mask) - 1;
      if (k > top) continue;
      sub.clear();
      for (std::size_t i = 0; i < size; ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      auto& layer = x.layers_[static_cast<std::size_t>(k)];
      layer.insert(layer.end(), sub.begin(), sub.end());
      if (mask == full) break;
    }
  }
  for (std::size_t k = 0; k < x.layers_.size(); ++k) sort_layer(x.layers_[k], k + 1);
  trim_layers(x.layers_);
  return x;
}

SimplicialComplex SimplicialComplex::from_sorted_layers(std::size_t n,
                                                        std::vector<std::vector<Vertex>> layers,
                                                        int dim_cap) {
  SimplicialComplex x;
  x.n_ = n;
  x.dim_cap_ = dim_cap;
  x.layers_ = std::move(layers);
  if (dim_cap != kUnbounded && static_cast<int>(x.layers_.size()) > dim_cap + 1) {
    x.layers_.resize(static_cast<std::size_t>(dim_cap) + 1);
  }
  trim_layers(x.layers_);
#ifndef NDEBUG
  for (int k = 0; k <= x.dimension(); ++k) {
    for (std::size_t i = 1; i < x.face_count(k); ++i) assert(lex_less(x.face(k, i - 1), x.face(k, i)));
  }
#endif
  return x;
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t total = 0;
  for (int k = 0; k <= dimension(); ++k) total += face_count(k);
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector(int upto) const {
  const int top = std::max(dimension(), upto);
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  for (int k = 0; k <= dimension(); ++k) f[static_cast<std::size_t>(k)] = face_count(k);
  return f;
}

std::vector<Face> SimplicialComplex::faces(int k) const {
  std::vector<Face> out;
  out.reserve(face_count(k));
  for (std::size_t i = 0; i < face_count(k); ++i) out.push_back(face_at(k, i));
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> sorted) const {
  const int k = static_cast<int>(sorted.size()) - 1;
  if (k < 0 || k > dimension()) return std::nullopt;
  std::size_t lo = 0, hi = face_count(k);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_less(face(k, mid), sorted)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < face_count(k) && std::equal(sorted.begin(), sorted.end(), face(k, lo).begin())) return lo;
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  SimplicialComplex x;
  x.n_ = n_;
  x.dim_cap_ = std::min(dim_cap_, k);
  const auto keep = static_cast<std::size_t>(std::max(0, std::min(k, dimension()) + 1));
  x.layers_.assign(layers_.begin(), layers_.begin() + static_cast<std::ptrdiff_t>(std::min(keep, layers_.size())));
  if (k < 0) x.layers_.clear();
  return x;
}

Graph SimplicialComplex::graph() const {
  std::vector<Edge> edges;
  edges.reserve(face_count(1));
  for (std::size_t i = 0; i < face_count(1); ++i) {
    auto e = face(1, i);
    edges.emplace_back(e[0], e[1]);
  }
  return Graph(n_, edges);
}

std::vector<Face> SimplicialComplex::facets() const {
  // A face is maximal when it is not a facet of any face one dimension up.
  std::vector<Face> out;
  for (int k = 0; k <= dimension(); ++k) {
    std::vector<bool> covered(face_count(k), false);
    std::vector<Vertex> buf(static_cast<std::size_t>(k + 1));
    for (std::size_t j = 0; j < face_count(k + 1); ++j) {
      auto up = face(k + 1, j);
      for (std::size_t drop = 0; drop < up.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < up.size(); ++i) {
          if (i != drop) buf[w++] = up[i];
        }
        if (auto idx = index_of(buf)) covered[*idx] = true;
      }
    }
    for (std::size_t i = 0; i < face_count(k); ++i) {
      if (!covered[i]) out.push_back(face_at(k, i));
    }
  }
  return out;
}

}  // namespace flaglab
