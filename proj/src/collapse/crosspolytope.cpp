#include "flaglab/collapse/crosspolytope.hpp"

#include <algorithm>
#include <iterator>

namespace flaglab {

Face CrossPolytopeHit::vertex_set() const {
  std::vector<Vertex> vs;
  for (auto [a, b] : pairs) {
    vs.push_back(a);
    vs.push_back(b);
  }
  return Face(std::move(vs));
}

Graph crosspolytope_graph(int d) {
  if (d < 0) throw InputError("crosspolytope_graph: d must be nonnegative");
  const auto m = static_cast<Vertex>(2 * d + 2);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = a + 1; b < m; ++b) {
      if (a / 2 != b / 2) edges.emplace_back(a, b);
    }
  }
  return Graph(m, edges);
}

namespace {

// A copy is named by its pairing. Its smallest vertex u and u's partner w
// form the first pair; the remaining d pairs lie in the common neighborhood
// of u and w above u and are chosen in increasing order of their smaller
// vertex, so each pairing is produced exactly once.
template <typename Emit>
void enumerate(const Graph& g, int d, bool induced_only, Emit&& emit) {
  if (d < 1) throw InputError("detect_crosspolytopes: d must be at least 1");
  const std::size_t n = g.vertex_count();
  const std::size_t need = static_cast<std::size_t>(2 * d);
  if (n < need + 2) return;
  std::vector<std::uint32_t> codegree(n, 0);
  std::vector<Vertex> touched;
  std::vector<Vertex> common;
  std::vector<std::pair<Vertex, Vertex>> chosen;
  std::vector<Vertex> used;

  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto above = std::upper_bound(nu.begin(), nu.end(), u);
    if (static_cast<std::size_t>(nu.end() - above) < need) continue;
    touched.clear();
    for (auto it = above; it != nu.end(); ++it) {
      auto nx = g.neighbors(*it);
      for (auto jt = std::upper_bound(nx.begin(), nx.end(), u); jt != nx.end(); ++jt) {
        if (codegree[*jt]++ == 0) touched.push_back(*jt);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex w : touched) {
      if (codegree[w] < need) continue;
      const bool uw_edge = g.has_edge(u, w);
      if (induced_only && uw_edge) continue;
      common.clear();
      auto nw = g.neighbors(w);
      std::set_intersection(above, nu.end(), std::upper_bound(nw.begin(), nw.end(), u), nw.end(),
                            std::back_inserter(common));
      chosen.assign(1, {u, w});
      used.assign({u, w});
      bool all_induced = !uw_edge;

      auto extend = [&](auto&& self, std::size_t first) -> void {
        if (chosen.size() == static_cast<std::size_t>(d + 1)) {
          emit(chosen, all_induced);
          return;
        }
        for (std::size_t i = first; i < common.size(); ++i) {
          const Vertex a = common[i];
          if (std::find(used.begin(), used.end(), a) != used.end()) continue;
          bool ok = true;
          for (std::size_t p = 1; p < chosen.size() && ok; ++p) {
            ok = g.has_edge(a, chosen[p].first) && g.has_edge(a, chosen[p].second);
          }
          if (!ok) continue;
          for (std::size_t j = i + 1; j < common.size(); ++j) {
            const Vertex b = common[j];
            if (std::find(used.begin(), used.end(), b) != used.end()) continue;
            const bool ab_edge = g.has_edge(a, b);
            if (induced_only && ab_edge) continue;
            bool ok2 = true;
            for (std::size_t p = 1; p < chosen.size() && ok2; ++p) {
              ok2 = g.has_edge(b, chosen[p].first) && g.has_edge(b, chosen[p].second);
            }
            if (!ok2) continue;
            chosen.emplace_back(a, b);
            const bool saved = all_induced;
            all_induced = all_induced && !ab_edge;
            used.push_back(a);
            used.push_back(b);
            self(self, i + 1);
            used.resize(used.size() - 2);
            all_induced = saved;
            chosen.pop_back();
          }
        }
      };
      extend(extend, 0);
    }
    for (Vertex t : touched) codegree[t] = 0;
  }
}

}  // namespace

std::vector<CrossPolytopeHit> detect_crosspolytopes(const Graph& g, int d, bool induced_only) {
  std::vector<CrossPolytopeHit> hits;
  enumerate(g, d, induced_only, [&](const std::vector<std::pair<Vertex, Vertex>>& pairs, bool induced) {
    hits.push_back({pairs, induced});
  });
  std::sort(hits.begin(), hits.end(), [](const CrossPolytopeHit& a, const CrossPolytopeHit& b) { return a.pairs < b.pairs; });
  return hits;
}

CrossPolytopeCount count_crosspolytopes(const Graph& g, int d) {
  CrossPolytopeCount c;
  enumerate(g, d, false, [&](const std::vector<std::pair<Vertex, Vertex>>&, bool induced) {
    ++c.embedded;
    if (induced) ++c.induced;
  });
  return c;
}

}  // namespace flaglab
