#include <doctest.h>

#include <random>

#include "flaglab/collapse/crosspolytope.hpp"
#include "flaglab/density/density.hpp"
#include "flaglab/topology/operations.hpp"
#include "oracles.hpp"

using namespace flaglab;

namespace {

std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t e = 0;
  for (auto [u, v] : g.edges()) {
    if (std::binary_search(s.begin(), s.end(), u) && std::binary_search(s.begin(), s.end(), v)) ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("essential density examples") {
  CHECK(essential_density(oracle::octahedron()).rho == Rational(2));
  CHECK(essential_density(oracle::complete(4)).rho == Rational(3, 2));
  CHECK(essential_density(oracle::cycle(4)).rho == Rational(1));
  std::vector<Edge> e = oracle::octahedron().edges();
  e.emplace_back(0, 6);
  auto r = essential_density(Graph(7, e));
  CHECK(r.rho == Rational(2));
  CHECK(r.witness == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(essential_density(Graph()), InputError);
  CHECK(essential_density(Graph(3, std::vector<Edge>{})).rho == Rational(0));
}

TEST_CASE("flow density equals subset brute force and witnesses attain it") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 11);
    Graph g = oracle::random_graph(n, 0.15 + 0.08 * (t % 10), rng);
    auto r = essential_density(g);
    CHECK(r.rho == oracle::max_density(g));
    CHECK(Rational(static_cast<std::int64_t>(induced_edge_count(g, r.witness)),
                   static_cast<std::int64_t>(r.witness.size())) == r.rho);
  }
}

TEST_CASE("density is monotone under taking subgraphs") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(12, 0.4, rng);
    auto edges = g.edges();
    std::vector<Edge> fewer;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i % 3) fewer.push_back(edges[i]);
    }
    CHECK(essential_density(Graph(12, fewer)).rho <= essential_density(g).rho);
  }
}

TEST_CASE("strict balance") {
  for (int d = 1; d <= 3; ++d) CHECK(is_strictly_balanced(crosspolytope_graph(d)));
  std::vector<Edge> e = oracle::complete(4).edges();
  e.emplace_back(3, 4);
  CHECK_FALSE(is_strictly_balanced(Graph(5, e)));
  CHECK(is_strictly_balanced(oracle::complete(2)));
  CHECK(is_strictly_balanced(oracle::cycle(7)));
  CHECK(is_strictly_balanced(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(is_strictly_balanced(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}})));
}

TEST_CASE("strict balance agrees with the subset definition") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(7, 0.6, rng);
    const std::size_t n = 7;
    const Rational whole(static_cast<std::int64_t>(g.edge_count()), 7);
    bool strict = true;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) s.push_back(v);
      }
      if (Rational(static_cast<std::int64_t>(induced_edge_count(g, s)), static_cast<std::int64_t>(s.size())) >= whole) strict = false;
    }
    CHECK(is_strictly_balanced(g) == strict);
  }
}

TEST_CASE("c-bounded check") {
  // Star with 10 leaves: degree 10 > c sqrt(n) = sqrt(11).
  std::vector<Edge> star;
  for (Vertex v = 1; v <= 10; ++v) star.emplace_back(0, v);
  auto s = c_bounded_check(clique_complex(Graph(11, star), 3), 2, Rational(1));
  CHECK_FALSE(s.pass);
  REQUIRE(s.max_degree.size() == 1);
  CHECK(s.max_degree[0] == 10);
  auto o = c_bounded_check(clique_complex(oracle::octahedron(), 3), 2, Rational(2));
  CHECK(o.pass);
  CHECK(o.bound[0] == doctest::Approx(2 * std::sqrt(6.0)));
  // Exactly on the bound passes: degree 3 vs (3/2) sqrt(4).
  CHECK(c_bounded_check(clique_complex(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}), 3), 2, Rational(3, 2)).pass);
  CHECK(c_bounded_check(SimplicialComplex::from_facets(3, std::vector<Face>{{0}, {1}, {2}}), 2, Rational(1)).pass);
  CHECK(c_bounded_check(clique_complex(oracle::complete(5), 4), 1, Rational(1)).pass);
  // d = 3 uses edge degrees as well: K5 has 3 triangles per edge.
  auto k5 = c_bounded_check(clique_complex(oracle::complete(5), 4), 3, Rational(1));
  CHECK(k5.max_degree == std::vector<std::size_t>{4, 3});
}

TEST_CASE("density bound audit") {
  CHECK(density_threshold(2) == Rational(25, 12));
  CHECK(density_bound_audit(oracle::octahedron(), 2));
  std::vector<Edge> e = oracle::complete(6).edges();
  e.resize(13);
  CHECK_FALSE(density_bound_audit(Graph(6, e), 2));
  CHECK(density_bound_audit(Graph(), 2));
}
