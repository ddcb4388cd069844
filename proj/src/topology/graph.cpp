#include "flaglab/topology/graph.hpp"

#include <algorithm>
#include <string>

namespace flaglab {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(2 * canon.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Pairs are sorted, so each list receives its smaller neighbors first and
  // then its larger ones, both in increasing order.
  for (auto [u, v] : canon) {
    neighbors_[fill[u]++] = v;
    neighbors_[fill[v]++] = u;
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count() || u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : neighbors(keep[i])) {
      auto it = std::lower_bound(keep.begin(), keep.end(), w);
      if (it != keep.end() && *it == w) {
        auto j = static_cast<Vertex>(it - keep.begin());
        if (j > i) sub.emplace_back(static_cast<Vertex>(i), j);
      }
    }
  }
  return Graph(keep.size(), sub);
}

}  // namespace flaglab
