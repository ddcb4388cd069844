#include <doctest.h>

#include <random>
#include <sstream>

#include "flaglab/collapse/collapse.hpp"
#include "flaglab/collapse/crosspolytope.hpp"
#include "flaglab/collapse/predicates.hpp"
#include "flaglab/topology/operations.hpp"
#include "oracles.hpp"

using namespace flaglab;

namespace {

SimplicialComplex flag(const Graph& g, int cap) { return clique_complex(g, cap); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), e);
}

// Cone with apex n over g.
Graph cone(const Graph& g) {
  std::vector<Edge> e = g.edges();
  const auto apex = static_cast<Vertex>(g.vertex_count());
  for (Vertex v = 0; v < apex; ++v) e.emplace_back(v, apex);
  return Graph(g.vertex_count() + 1, e);
}

bool no_face_at_least(const SimplicialComplex& x, int d) { return x.dimension() < d; }

}  // namespace

TEST_CASE("greedy collapse examples") {
  auto tet = flag(oracle::complete(4), 3);
  auto r = greedy_d_collapse(tet, 2);
  CHECK(r.status == CollapseStatus::collapsed_below_d);
  CHECK(no_face_at_least(r.residual, 2));
  CHECK(replay(tet, r.steps) == r.residual);

  auto c4 = flag(oracle::cycle(4), 2);
  auto r1 = greedy_d_collapse(c4, 1);
  CHECK(r1.status == CollapseStatus::stuck);
  CHECK(r1.residual == c4);

  auto oct = flag(oracle::octahedron(), 3);
  auto r2 = greedy_d_collapse(oct, 2);
  CHECK(r2.status == CollapseStatus::stuck);
  CHECK(r2.residual == oct);
  CHECK(greedy_d_collapse(oct, 2, OrderPolicy::random(), 5).status == CollapseStatus::stuck);
  CHECK_THROWS_AS(greedy_d_collapse(oct, 0), InputError);
}

TEST_CASE("greedy steps are legal and replay to the residual") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const int d = 1 + t % 3;
    auto x = flag(oracle::random_graph(10 + t % 6, 0.45, rng), d + 2);
    for (auto policy : {OrderPolicy::lexicographic(), OrderPolicy::random(3)}) {
      auto r = greedy_d_collapse(x, d, policy, static_cast<std::uint64_t>(t));
      CHECK(replay(x, r.steps) == r.residual);
      for (const auto& st : r.steps) CHECK(st.free_face.dimension() >= d - 1);
      if (r.status == CollapseStatus::collapsed_below_d) CHECK(no_face_at_least(r.residual, d));
    }
  }
}

TEST_CASE("replay rejects illegal steps") {
  auto tet = flag(oracle::complete(4), 3);
  std::vector<CollapseStep> bad{{Face{0, 1}, Face{0, 1, 2}}};
  CHECK_THROWS_AS(replay(tet, bad), IllegalCollapse);
  std::vector<CollapseStep> twice{{Face{0, 1, 2}, Face{0, 1, 2, 3}}, {Face{0, 1, 2}, Face{0, 1, 2, 3}}};
  CHECK_THROWS_AS(replay(tet, twice), IllegalCollapse);
  std::vector<CollapseStep> shape{{Face{0}, Face{0, 1, 2}}};
  CHECK_THROWS_AS(replay(tet, shape), IllegalCollapse);
}

TEST_CASE("collapse around a vertex") {
  // Cone over the octahedron, apex 6. Vertex 0 has link = cone over a 4-cycle.
  auto x = flag(cone(oracle::octahedron()), 4);
  auto r = collapse_around_vertex(x, 0, 2);
  CHECK(r.status == CollapseStatus::collapsed_below_d);
  CHECK(replay(x, r.steps) == r.residual);
  for (int k = 2; k <= r.residual.dimension(); ++k) {
    for (std::size_t i = 0; i < r.residual.face_count(k); ++i) CHECK_FALSE(r.residual.face_at(k, i).contains(0));
  }
  // Faces avoiding the vertex are untouched.
  for (int k = 0; k <= x.dimension(); ++k) {
    for (const auto& f : x.faces(k)) {
      if (!f.contains(0)) CHECK(r.residual.contains(f));
    }
  }

  Graph lone(3, std::vector<Edge>{{0, 1}});
  auto v = collapse_around_vertex(flag(lone, 2), 2, 2);
  CHECK(v.status == CollapseStatus::collapsed_below_d);
  CHECK(v.steps.empty());

  auto oct = flag(oracle::octahedron(), 3);
  for (Vertex w = 0; w < 6; ++w) CHECK(collapse_around_vertex(oct, w, 2).status == CollapseStatus::stuck);

  // d = 1: a leaf is removed together with its edge.
  Graph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
  auto leaf = collapse_around_vertex(flag(path, 2), 0, 1);
  CHECK(leaf.status == CollapseStatus::collapsed_below_d);
  REQUIRE(leaf.steps.size() == 1);
  CHECK(leaf.steps[0].free_face == Face{0});
}

TEST_CASE("cross-polytope detection examples") {
  auto oct = detect_crosspolytopes(oracle::octahedron(), 2);
  REQUIRE(oct.size() == 1);
  CHECK(oct[0].induced);
  CHECK(oct[0].vertex_set() == Face{0, 1, 2, 3, 4, 5});
  auto k6 = detect_crosspolytopes(oracle::complete(6), 2);
  CHECK(k6.size() == 15);
  for (const auto& h : k6) CHECK_FALSE(h.induced);
  CHECK(detect_crosspolytopes(oracle::complete(6), 2, true).empty());
  CHECK(detect_crosspolytopes(oracle::complete(5), 2).empty());
  CHECK(detect_crosspolytopes(oracle::cycle(4), 1).size() == 1);
  CHECK(detect_crosspolytopes(oracle::complete(4), 1).size() == 3);
}

TEST_CASE("cross-polytope counts match brute force") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + t % 2;
    const std::size_t n = 6 + static_cast<std::size_t>(t % 5);
    Graph g = oracle::random_graph(n, 0.55 + 0.1 * (t % 4), rng);
    auto hits = detect_crosspolytopes(g, d);
    CHECK(hits.size() == oracle::crosspolytope_copies(g, d, false));
    CHECK(detect_crosspolytopes(g, d, true).size() == oracle::crosspolytope_copies(g, d, true));
    auto c = count_crosspolytopes(g, d);
    CHECK(c.embedded == hits.size());
    CHECK(c.induced == oracle::crosspolytope_copies(g, d, true));
    for (const auto& h : hits) {
      CHECK(h.pairs.size() == static_cast<std::size_t>(d + 1));
      CHECK(h.vertex_set().size() == static_cast<std::size_t>(2 * d + 2));
    }
  }
  CHECK(detect_crosspolytopes(crosspolytope_graph(3), 3).size() == 1);
}

TEST_CASE("almost collapse examples") {
  // Octahedron plus a disjoint solid 5-simplex.
  auto x = flag(disjoint_union(oracle::octahedron(), oracle::complete(6)), SimplicialComplex::kUnbounded);
  auto r = almost_d_collapse(x, 2);
  CHECK(r.status == CollapseStatus::almost_collapsed);
  // Materialized only through dimension 4, the 5-simplex becomes a 4-sphere.
  CHECK(almost_d_collapse(flag(disjoint_union(oracle::octahedron(), oracle::complete(6)), 4), 2).status ==
        CollapseStatus::stuck);
  REQUIRE(r.surviving_crosspolytopes.size() == 1);
  CHECK(r.surviving_crosspolytopes[0] == Face{0, 1, 2, 3, 4, 5});
  CHECK(replay(x, r.steps) == r.residual);
  CHECK(r.residual.dimension() == 2);
  CHECK(r.residual.face_count(2) == 8);

  Graph tree(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
  auto f = almost_d_collapse(flag(tree, 3), 2);
  CHECK(f.status == CollapseStatus::collapsed_below_d);
  CHECK(f.surviving_crosspolytopes.empty());

  // Two octahedra glued at vertex 0.
  std::vector<Edge> e = oracle::octahedron().edges();
  for (auto [a, b] : oracle::octahedron().edges()) {
    auto lift = [](Vertex v) { return v == 0 ? Vertex{0} : v + 5; };
    e.emplace_back(lift(a), lift(b));
  }
  auto w = flag(Graph(11, e), 3);
  auto rw = almost_d_collapse(w, 2);
  CHECK(rw.status == CollapseStatus::almost_collapsed);
  CHECK(rw.surviving_crosspolytopes.size() == 2);

  auto oct = flag(oracle::octahedron(), 2);
  CHECK_THROWS_AS(almost_d_collapse(oct, 2), InputError);
}

TEST_CASE("almost collapse on random flag complexes replays and accounts for every d-face") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    const int d = 1 + t % 2;
    auto x = flag(oracle::random_graph(14, d == 1 ? 0.15 : 0.35, rng), d + 2);
    auto r = almost_d_collapse(x, d, static_cast<std::uint64_t>(t));
    CHECK(replay(x, r.steps) == r.residual);
    if (r.status == CollapseStatus::stuck) {
      CHECK(r.stuck_component.has_value());
      continue;
    }
    CHECK(r.residual.dimension() <= d);
    CHECK(r.residual.face_count(d) == r.surviving_crosspolytopes.size() * (std::size_t{1} << (d + 1)));
  }
}

TEST_CASE("exact collapsibility examples") {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    CHECK(is_d_collapsible_exact(flag(oracle::graph_from_mask(5, mask), 4), 2) == Decision::yes);
  }
  CHECK(is_d_collapsible_exact(flag(oracle::octahedron(), 3), 2) == Decision::no);
  CHECK(is_d_collapsible_exact(flag(oracle::cycle(4), 2), 1) == Decision::no);
  CHECK(is_d_collapsible_exact(flag(oracle::cycle(5), 2), 1) == Decision::no);
  auto seq = find_d_collapse(flag(oracle::complete(7), 6), 2);
  REQUIRE(seq.has_value());
  CHECK(replay(flag(oracle::complete(7), 6), *seq).dimension() < 2);
}

TEST_CASE("dunce-hat style dead ends are resolved by exhaustive search") {
  // Exact search agrees with greedy success and never contradicts a witness.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    auto x = flag(oracle::random_graph(8, 0.6, rng), 7);
    const Decision e = is_d_collapsible_exact(x, 2);
    REQUIRE(e != Decision::budget_exhausted);
    if (greedy_d_collapse(x, 2).status == CollapseStatus::collapsed_below_d) CHECK(e == Decision::yes);
    auto seq = find_d_collapse(x, 2);
    CHECK(seq.has_value() == (e == Decision::yes));
  }
}

TEST_CASE("pi1 precondition predicates") {
  auto k6 = flag(oracle::complete(6), 5);
  auto rk = check_pi1_preconditions(k6);
  CHECK(rk.dimension_at_most_4 == false);
  CHECK_FALSE(rk.bounded_subcomplexes_aspherical.has_value());

  auto oct = flag(oracle::octahedron(), 4);
  auto ro = check_pi1_preconditions(oct);
  CHECK(ro.dimension_at_most_4 == true);
  CHECK(ro.crosspolytope_triangles_maximal == true);
  CHECK(ro.no_tetrahedron_meets_4simplex_in_triangle == true);
  CHECK(ro.three_collapsible == true);
  CHECK(ro.small_subgraphs_sparse == true);

  std::vector<Edge> e = oracle::octahedron().edges();
  e.insert(e.end(), {{6, 0}, {6, 2}, {6, 4}});
  auto apex = flag(Graph(7, e), 4);
  CHECK(check_pi1_preconditions(apex).crosspolytope_triangles_maximal == false);

  // A tetrahedron glued to a 4-simplex along a triangle.
  std::vector<Edge> f = oracle::complete(5).edges();
  f.insert(f.end(), {{5, 0}, {5, 1}, {5, 2}});
  auto glued = flag(Graph(6, f), 4);
  CHECK(check_pi1_preconditions(glued).no_tetrahedron_meets_4simplex_in_triangle == false);

  // K6 minus a perfect matching edge has 14 edges on 6 vertices: 14/6 > 25/12.
  std::vector<Edge> dense = oracle::complete(6).edges();
  dense.erase(dense.begin());
  auto rd = check_pi1_preconditions(flag(Graph(6, dense), 4));
  CHECK(rd.small_subgraphs_sparse == false);
}

TEST_CASE("dense small subgraph found inside a sparse host") {
  // K6 (density 5/2) attached to a long path: overall density stays below 25/12.
  std::vector<Edge> e = oracle::complete(6).edges();
  for (Vertex v = 5; v < 40; ++v) e.emplace_back(v, v + 1);
  auto x = flag(Graph(41, e), 4);
  auto r = check_pi1_preconditions(x);
  CHECK(r.small_subgraphs_sparse == false);
  PredicateOptions tight;
  tight.density_vertex_bound = 5;
  CHECK(check_pi1_preconditions(x, tight).small_subgraphs_sparse == true);
}

TEST_CASE("essentially 2-sphere free") {
  CHECK(essentially_2sphere_free(flag(oracle::complete(4), 3)).sphere_free);
  std::vector<Face> hollow{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  auto h = essentially_2sphere_free(SimplicialComplex::from_facets(4, hollow));
  CHECK_FALSE(h.sphere_free);
  CHECK(h.witness == hollow);
  auto o = essentially_2sphere_free(flag(oracle::octahedron(), 3));
  CHECK_FALSE(o.sphere_free);
  CHECK(o.witness.size() == 8);
  // The 2-skeleton of a 4-simplex holds 5-vertex spheres (bipyramids) that
  // bound no single tetrahedron.
  auto k5 = essentially_2sphere_free(flag(oracle::complete(5), 4));
  CHECK_FALSE(k5.sphere_free);
  CHECK(k5.witness.size() == 6);
  // Torus-free, sphere-free: a triangulated disk.
  std::vector<Face> disk{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}};
  CHECK(essentially_2sphere_free(SimplicialComplex::from_facets(5, disk)).sphere_free);
  CHECK(essentially_2sphere_free(flag(oracle::octahedron(), 3), 5).sphere_free);
}

TEST_CASE("trace format round-trips") {
  auto x = flag(oracle::complete(5), 4);
  auto r = greedy_d_collapse(x, 2);
  std::ostringstream out;
  write_trace(out, r.steps);
  std::istringstream in(out.str());
  CHECK(read_trace(in) == r.steps);
  std::istringstream bad("0 1 2\n");
  CHECK_THROWS_AS(read_trace(bad), InputError);
}
