#include "flaglab/collapse/predicates.hpp"

#include <algorithm>
#include <numeric>

#include "flaglab/collapse/collapse.hpp"
#include "flaglab/collapse/crosspolytope.hpp"
#include "flaglab/density/density.hpp"
#include "flaglab/topology/operations.hpp"
#include "state.hpp"

namespace flaglab {

bool PredicateReport::evaluated_hold() const {
  for (const auto& c : {dimension_at_most_4, crosspolytope_triangles_maximal,
                        no_tetrahedron_meets_4simplex_in_triangle, three_collapsible,
                        bounded_subcomplexes_aspherical, small_subgraphs_sparse}) {
    if (c.has_value() && !*c) return false;
  }
  return true;
}

namespace {

bool in_tetrahedron(const SimplicialComplex& x, const Graph& g, std::span<const Vertex> tri,
                    std::span<const Vertex> avoid = {}) {
  if (x.dimension() < 3) return false;
  for (Vertex z : g.neighbors(tri[0])) {
    if (std::find(tri.begin(), tri.end(), z) != tri.end()) continue;
    if (std::find(avoid.begin(), avoid.end(), z) != avoid.end()) continue;
    std::vector<Vertex> t(tri.begin(), tri.end());
    t.insert(std::upper_bound(t.begin(), t.end(), z), z);
    if (x.index_of(t)) return true;
  }
  return false;
}

// Connected vertex subsets of size <= k, each visited once (ESU scheme:
// extensions only add vertices above the root that are exclusive neighbors of
// the newest vertex).
class DenseSubsetSearch {
 public:
  DenseSubsetSearch(const Graph& g, std::size_t k, std::size_t budget) : g_(g), k_(k), budget_(budget) {}

  /// A set with 12 e >= 25 v, nullopt when none exists, or an empty vector
  /// when the budget ran out.
  std::optional<std::vector<Vertex>> run() {
    const std::size_t n = g_.vertex_count();
    in_sub_.assign(n, false);
    for (Vertex v = 0; v < n; ++v) {
      sub_.assign(1, v);
      in_sub_[v] = true;
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(v)) {
        if (u > v) ext.push_back(u);
      }
      extend(ext, v, 0);
      in_sub_[v] = false;
      if (found_ || exhausted_) break;
    }
    if (exhausted_) return std::vector<Vertex>{};
    if (found_) return hit_;
    return std::nullopt;
  }

 private:
  void extend(std::vector<Vertex> ext, Vertex root, std::size_t edges) {
    if (found_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (12 * edges >= 25 * sub_.size()) {
      found_ = true;
      hit_ = sub_;
      std::sort(hit_.begin(), hit_.end());
      return;
    }
    if (sub_.size() == k_) return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      std::size_t gained = 0;
      for (Vertex u : g_.neighbors(w)) {
        if (in_sub_[u]) {
          ++gained;
          continue;
        }
        if (u <= root) continue;
        bool exclusive = true;
        for (Vertex s : sub_) {
          if (g_.has_edge(u, s)) {
            exclusive = false;
            break;
          }
        }
        if (exclusive && std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
      }
      sub_.push_back(w);
      in_sub_[w] = true;
      extend(std::move(next), root, edges + gained);
      in_sub_[w] = false;
      sub_.pop_back();
      if (found_ || exhausted_) return;
    }
  }

  const Graph& g_;
  std::size_t k_, budget_, nodes_ = 0;
  std::vector<Vertex> sub_;
  std::vector<bool> in_sub_;
  std::vector<Vertex> hit_;
  bool found_ = false, exhausted_ = false;
};

// Vertices of degree >= 3 after repeated peeling; a smallest dense set lives there.
std::vector<Vertex> three_core(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < 3) {
      gone[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w] && --deg[w] < 3) {
        gone[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return keep;
}

}  // namespace

PredicateReport check_pi1_preconditions(const SimplicialComplex& x, const PredicateOptions& opts) {
  PredicateReport r;
  r.density_vertex_bound = opts.density_vertex_bound;
  const Graph g = x.graph();

  // (1)
  if (!x.bounded() || x.dim_cap() >= 5 || !x.truncated()) {
    r.dimension_at_most_4 = x.dimension() <= 4;
  } else {
    // Capped below 5 with faces at the cap: read the answer off the 1-skeleton.
    r.dimension_at_most_4 = clique_counts(g, 5).size() <= 5;
    r.notes.push_back("dimension read from 6-cliques of the 1-skeleton");
  }
  if (!*r.dimension_at_most_4) r.notes.push_back("(1) fails: a face of dimension >= 5 exists");

  // (2)
  r.crosspolytope_triangles_maximal = true;
  for (const auto& hit : detect_crosspolytopes(g, 2)) {
    std::vector<std::vector<Vertex>> tris;
    bool embedded = true;
    for (int mask = 0; mask < 8 && embedded; ++mask) {
      std::vector<Vertex> t;
      for (int p = 0; p < 3; ++p) {
        const auto& pr = hit.pairs[static_cast<std::size_t>(p)];
        t.push_back((mask >> p) & 1 ? pr.second : pr.first);
      }
      std::sort(t.begin(), t.end());
      embedded = x.index_of(t).has_value();
      tris.push_back(std::move(t));
    }
    if (!embedded) continue;
    for (const auto& t : tris) {
      if (in_tetrahedron(x, g, t)) {
        r.crosspolytope_triangles_maximal = false;
        r.notes.push_back("(2) fails: octahedron on {" + hit.vertex_set().to_string() + "} has triangle {" +
                          Face(std::span<const Vertex>(t)).to_string() + "} inside a tetrahedron");
        break;
      }
    }
    if (!*r.crosspolytope_triangles_maximal) break;
  }

  // (3)
  r.no_tetrahedron_meets_4simplex_in_triangle = true;
  for (std::size_t i = 0; i < x.face_count(4) && *r.no_tetrahedron_meets_4simplex_in_triangle; ++i) {
    auto s = x.face(4, i);
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        std::vector<Vertex> tri;
        for (int c = 0; c < 5; ++c) {
          if (c != a && c != b) tri.push_back(s[static_cast<std::size_t>(c)]);
        }
        if (in_tetrahedron(x, g, tri, s)) {
          r.no_tetrahedron_meets_4simplex_in_triangle = false;
          r.notes.push_back("(3) fails at 4-simplex {" + Face(s).to_string() + "}");
          a = b = 5;
        }
      }
    }
  }

  // (4)
  bool collapsed = greedy_d_collapse(x, 3).status == CollapseStatus::collapsed_below_d ||
                   greedy_d_collapse(x, 3, OrderPolicy::random(), 1).status == CollapseStatus::collapsed_below_d;
  if (collapsed) {
    r.three_collapsible = true;
  } else {
    std::size_t active = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) active += g.degree(v) > 0;
    if (active <= opts.exact_vertex_limit) {
      const Decision dec = is_d_collapsible_exact(x, 3, opts.exact_budget);
      if (dec != Decision::budget_exhausted) r.three_collapsible = dec == Decision::yes;
      else r.notes.push_back("(4) undecided: exhaustive search ran out of budget");
    } else {
      r.notes.push_back("(4) undecided: greedy collapse stuck and complex too large for exhaustive search");
    }
  }

  // (5) never evaluated.

  // (6)
  if (g.vertex_count() == 0 || essential_density(g).rho < Rational(25, 12)) {
    r.small_subgraphs_sparse = true;
  } else {
    const auto core = three_core(g);
    const Graph h = g.induced(core);
    auto hit = DenseSubsetSearch(h, opts.density_vertex_bound, opts.subset_budget).run();
    if (!hit) {
      r.small_subgraphs_sparse = true;
    } else if (hit->empty()) {
      r.notes.push_back("(6) undecided: subset search ran out of budget");
    } else {
      r.small_subgraphs_sparse = false;
      std::vector<Vertex> labels;
      for (Vertex v : *hit) labels.push_back(core[v]);
      r.notes.push_back("(6) fails on {" + Face(std::span<const Vertex>(labels)).to_string() + "}");
    }
  }
  return r;
}

SphereCheck essentially_2sphere_free(const SimplicialComplex& x, std::size_t vmax, std::size_t budget) {
  if (vmax < 4) throw InputError("essentially_2sphere_free: vmax must be at least 4");
  SphereCheck out;
  if (x.dimension() < 2) return out;
  detail::CollapseState s(x.skeleton(2));
  const std::size_t n = x.vertex_count();
  const std::size_t max_tris = 2 * vmax - 4;
  std::vector<std::uint8_t> edge_use(s.face_total(), 0);
  std::vector<std::uint32_t> vertex_use(n, 0);
  std::size_t vertices = 0;
  std::vector<detail::FaceId> chosen;
  std::vector<bool> picked(s.face_total(), false);
  std::size_t nodes = 0;

  auto add = [&](detail::FaceId t, int sign) {
    picked[t] = sign > 0;
    for (detail::FaceId e : s.facets(t)) edge_use[e] = static_cast<std::uint8_t>(edge_use[e] + sign);
    for (Vertex v : s.vertices(t)) {
      if (sign > 0 && vertex_use[v]++ == 0) ++vertices;
      if (sign < 0 && --vertex_use[v] == 0) --vertices;
    }
  };

  // Closed and every edge in two triangles; a sphere needs each vertex link
  // to be one cycle and Euler characteristic 2.
  auto is_sphere = [&]() {
    std::vector<Vertex> vs;
    for (auto t : chosen) {
      for (Vertex v : s.vertices(t)) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const long chi = static_cast<long>(vs.size()) - static_cast<long>(3 * chosen.size() / 2) +
                     static_cast<long>(chosen.size());
    if (chi != 2) return false;
    for (Vertex v : vs) {
      std::vector<std::pair<Vertex, Vertex>> link;
      for (auto t : chosen) {
        auto tv = s.vertices(t);
        if (std::find(tv.begin(), tv.end(), v) == tv.end()) continue;
        std::vector<Vertex> other;
        for (Vertex w : tv) {
          if (w != v) other.push_back(w);
        }
        link.emplace_back(other[0], other[1]);
      }
      // Walk the cycle from the first link edge.
      std::size_t steps = 0;
      Vertex start = link[0].first, prev = link[0].first, cur = link[0].second;
      std::vector<bool> used(link.size(), false);
      used[0] = true;
      while (cur != start) {
        bool moved = false;
        for (std::size_t i = 0; i < link.size(); ++i) {
          if (used[i]) continue;
          if (link[i].first == cur || link[i].second == cur) {
            used[i] = true;
            prev = cur;
            cur = link[i].first == cur ? link[i].second : link[i].first;
            moved = true;
            break;
          }
        }
        if (!moved) return false;
        ++steps;
      }
      (void)prev;
      if (steps + 1 != link.size()) return false;
    }
    return true;
  };

  auto bounds_tetrahedron = [&]() {
    if (chosen.size() != 4) return false;
    std::vector<Vertex> vs;
    for (auto t : chosen) {
      for (Vertex v : s.vertices(t)) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs.size() == 4 && x.index_of(vs).has_value();
  };

  bool done = false;
  auto grow = [&](auto&& self, detail::FaceId seed) -> void {
    if (done) return;
    if (++nodes > budget) {
      out.exhausted = true;
      done = true;
      return;
    }
    detail::FaceId open = detail::kNoFace;
    for (auto t : chosen) {
      for (auto e : s.facets(t)) {
        if (edge_use[e] == 1 && e < open) open = e;
      }
    }
    if (open == detail::kNoFace) {
      if (is_sphere() && !bounds_tetrahedron()) {
        out.sphere_free = false;
        for (auto t : chosen) out.witness.emplace_back(s.vertices(t));
        std::sort(out.witness.begin(), out.witness.end());
        done = true;
      }
      return;
    }
    if (chosen.size() >= max_tris) return;
    for (auto t : s.cofaces(open)) {
      if (t <= seed || picked[t]) continue;
      bool fits = true;
      for (auto e : s.facets(t)) fits = fits && edge_use[e] < 2;
      if (!fits) continue;
      add(t, +1);
      if (vertices <= vmax) {
        chosen.push_back(t);
        self(self, seed);
        chosen.pop_back();
      }
      add(t, -1);
      if (done) return;
    }
  };

  for (std::size_t i = 0; i < x.face_count(2) && !done; ++i) {
    const auto t0 = s.id(2, i);
    add(t0, +1);
    chosen.assign(1, t0);
    grow(grow, t0);
    chosen.clear();
    add(t0, -1);
  }
  if (out.exhausted) out.sphere_free = true;
  return out;
}

}  // namespace flaglab
