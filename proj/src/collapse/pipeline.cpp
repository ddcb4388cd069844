#include <algorithm>
#include <numeric>

#include "flaglab/topology/operations.hpp"
#include "state.hpp"

namespace flaglab {
namespace {

using detail::CollapseState;
using detail::FaceId;
using detail::IdSteps;

// Groups of alive d-faces connected through alive (d-1)-faces.
std::vector<std::vector<FaceId>> alive_components(const CollapseState& s, int d) {
  std::vector<FaceId> faces;
  for (std::size_t i = 0; i < s.complex().face_count(d); ++i) {
    if (s.alive(s.id(d, i))) faces.push_back(s.id(d, i));
  }
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto pos = [&](FaceId f) {
    return static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
  };
  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (FaceId g : s.facets(faces[a])) {
      for (FaceId h : s.cofaces(g)) {
        if (h == faces[a] || !s.alive(h)) continue;
        const std::size_t r1 = find(a), r2 = find(pos(h));
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
  }
  std::vector<std::vector<FaceId>> groups;
  std::vector<std::size_t> slot(faces.size(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < faces.size(); ++a) {
    const std::size_t r = find(a);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(faces[a]);
  }
  return groups;
}

// Vertex set of the group when its d-faces are exactly the boundary of a
// (d+1)-dimensional cross-polytope and none of them lies in a larger face.
std::optional<std::vector<Vertex>> crosspolytope_vertices(const CollapseState& s, int d,
                                                          const std::vector<FaceId>& group) {
  if (group.size() != (std::size_t{1} << (d + 1))) return std::nullopt;
  std::vector<Vertex> vs;
  for (FaceId f : group) {
    if (s.alive_cofaces(f) != 0) return std::nullopt;
    auto fv = s.vertices(f);
    vs.insert(vs.end(), fv.begin(), fv.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() != static_cast<std::size_t>(2 * d + 2)) return std::nullopt;
  // Each vertex must have exactly one partner it never shares a face with,
  // and every face must take one vertex from each partner pair.
  const std::size_t m = vs.size();
  std::vector<std::vector<bool>> together(m, std::vector<bool>(m, false));
  for (FaceId f : group) {
    auto fv = s.vertices(f);
    for (Vertex a : fv) {
      for (Vertex b : fv) {
        const auto ia = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
        const auto ib = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
        together[ia][ib] = true;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t apart = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && !together[a][b]) ++apart;
    }
    if (apart != 1) return std::nullopt;
  }
  // 2^{d+1} distinct faces, each avoiding every partner pair, are all the
  // transversals of the pairing.
  return vs;
}

struct ComponentResult {
  IdSteps steps;
  CollapseStatus status = CollapseStatus::stuck;
  std::vector<std::vector<Vertex>> crosspolytopes;  // local labels
};

// Collapse of one flag closure: a greedy pass, then repeated elimination of
// low-degree vertices whose link collapses, interleaved with greedy passes.
// Pieces that are exactly a cross-polytope boundary are left alone.
ComponentResult collapse_component(CollapseState& s, int d, std::uint64_t seed) {
  ComponentResult out;
  if (detail::greedy_run(s, d - 1, OrderPolicy::Kind::lexicographic, 0, out.steps)) {
    out.status = CollapseStatus::collapsed_below_d;
    return out;
  }
  const std::size_t n = s.complex().vertex_count();
  for (;;) {
    if (s.alive_dimension() < d) {
      out.status = CollapseStatus::collapsed_below_d;
      return out;
    }
    std::vector<bool> reserved(n, false);
    std::vector<std::vector<Vertex>> pieces;
    std::size_t reserved_faces = 0;
    for (const auto& group : alive_components(s, d)) {
      if (auto vs = crosspolytope_vertices(s, d, group)) {
        for (Vertex v : *vs) reserved[v] = true;
        reserved_faces += group.size();
        pieces.push_back(std::move(*vs));
      }
    }
    if (s.alive_dimension() == d && reserved_faces == s.alive_count(d)) {
      out.crosspolytopes = std::move(pieces);
      out.status = out.crosspolytopes.empty() ? CollapseStatus::collapsed_below_d : CollapseStatus::almost_collapsed;
      return out;
    }
    // Vertices still in a face of dimension >= d, by increasing alive degree.
    std::vector<std::pair<std::size_t, Vertex>> order;
    std::vector<bool> busy(n, false);
    for (int k = d; k <= s.top_dimension(); ++k) {
      for (std::size_t i = 0; i < s.complex().face_count(k); ++i) {
        if (!s.alive(s.id(k, i))) continue;
        for (Vertex v : s.vertices(s.id(k, i))) busy[v] = true;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!busy[v] || reserved[v]) continue;
      const Vertex single[1] = {v};
      order.emplace_back(s.alive_cofaces(*s.find(single)), v);
    }
    std::sort(order.begin(), order.end());
    bool progressed = false;
    for (auto [deg, v] : order) {
      if (detail::collapse_around(s, v, d, seed, out.steps)) {
        progressed = true;
        break;
      }
    }
    if (!progressed) return out;
    detail::greedy_run(s, d - 1, OrderPolicy::Kind::lexicographic, 0, out.steps);
  }
}

}  // namespace

CollapseOutcome almost_d_collapse(const SimplicialComplex& x, int d, std::uint64_t seed) {
  if (d < 1) throw InputError("almost_d_collapse: d must be at least 1");
  if (x.bounded() && x.dim_cap() < d + 1) {
    throw InputError("almost_d_collapse: complex must be materialized through dimension d+1");
  }
  CollapseOutcome out;
  const auto comps = strongly_connected_components(x, d);
  bool any_cross = false;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Graph whole = component_graph(x, d, comps[ci]);
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < whole.vertex_count(); ++v) {
      if (whole.degree(v) > 0) verts.push_back(v);
    }
    const Graph local = whole.induced(verts);
    CollapseState s(clique_complex(local, x.dim_cap()));
    ComponentResult r = collapse_component(s, d, detail::mix64(seed + ci));

    // verts is increasing, so relabeling keeps faces sorted.
    auto globalize = [&](std::span<const Vertex> vs) {
      std::vector<Vertex> g;
      g.reserve(vs.size());
      for (Vertex v : vs) g.push_back(verts[v]);
      return Face(std::span<const Vertex>(g));
    };
    for (auto [a, b] : r.steps) out.steps.push_back({globalize(s.vertices(a)), globalize(s.vertices(b))});
    if (r.status == CollapseStatus::stuck) {
      if (!out.stuck_component) out.stuck_component = ci;
    } else if (r.status == CollapseStatus::almost_collapsed) {
      any_cross = true;
      for (const auto& cp : r.crosspolytopes) out.surviving_crosspolytopes.push_back(globalize(cp));
    }
  }
  try {
    out.residual = replay(x, out.steps);
  } catch (const IllegalCollapse& e) {
    throw InputError(std::string("almost_d_collapse: input is not a flag complex (") + e.what() + ")");
  }
  if (out.stuck_component) {
    out.status = CollapseStatus::stuck;
    out.surviving_crosspolytopes.clear();
  } else {
    out.status = any_cross ? CollapseStatus::almost_collapsed : CollapseStatus::collapsed_below_d;
    std::sort(out.surviving_crosspolytopes.begin(), out.surviving_crosspolytopes.end());
  }
  return out;
}

}  // namespace flaglab
