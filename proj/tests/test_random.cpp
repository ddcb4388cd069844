#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flaglab/random/models.hpp"
#include "flaglab/topology/operations.hpp"
#include "oracles.hpp"

using namespace flaglab;

namespace {

struct MeanSe {
  double mean = 0, se = 0;
};

MeanSe summarize(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1) / n)};
}

std::size_t brute_automorphisms(const Graph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("streams are reproducible and distinct") {
  Rng a({42, 7}), b({42, 7}), c({42, 8}), d({43, 7});
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    CHECK(x != d.next());
  }
  Rng u({1, 1});
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("subset sampling at p = 1 lists every subset in order") {
  Rng rng({0, 0});
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto flat = sample_subsets(n, k, 1.0, rng);
      std::vector<Vertex> want;
      if (k <= n) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
          for (Vertex v = 0; v < n; ++v) {
            if (pick[v]) want.push_back(v);
          }
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
      CHECK(flat == want);
    }
  }
}

TEST_CASE("gnp boundary probabilities") {
  CHECK(sample_gnp(30, 0.0, RngSpec{1, 2}).edge_count() == 0);
  CHECK(sample_gnp(30, 1.0, RngSpec{1, 2}).edge_count() == 435);
  CHECK_THROWS_AS(sample_gnp(10, 1.5, RngSpec{}), InputError);
  CHECK_THROWS_AS(sample_gnp(10, -0.1, RngSpec{}), InputError);
  auto a = sample_gnp(200, 0.05, RngSpec{9, 3});
  auto b = sample_gnp(200, 0.05, RngSpec{9, 3});
  CHECK(a.edges() == b.edges());
}

TEST_CASE("flag complex boundary probabilities") {
  auto full = sample_flag_complex(5, 1.0, 4, RngSpec{});
  CHECK(full.f_vector() == std::vector<std::size_t>{5, 10, 10, 5, 1});
  auto empty = sample_flag_complex(7, 0.0, 4, RngSpec{});
  CHECK(empty.f_vector() == std::vector<std::size_t>{7});
}

TEST_CASE("linial-meshulam at d = 1 follows the gnp path") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = sample_gnp(60, 0.08, RngSpec{5, s});
    auto x = sample_linial_meshulam(60, 1, 0.08, RngSpec{5, s});
    CHECK(x.graph().edges() == g.edges());
    CHECK(x.face_count(0) == 60);
  }
  auto full = sample_linial_meshulam(7, 2, 1.0, RngSpec{});
  CHECK(full.f_vector() == std::vector<std::size_t>{7, 21, 35});
  auto none = sample_linial_meshulam(50, 2, 0.0, RngSpec{});
  CHECK(none.f_vector() == std::vector<std::size_t>{50, 1225});
}

TEST_CASE("every pair is included with the stated probability") {
  const std::size_t n = 6, trials = 20000;
  const double p = 0.3;
  std::vector<std::size_t> hits(n * n, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto [u, v] : sample_gnp(n, p, RngSpec{77, t}).edges()) ++hits[u * n + v];
  }
  const double se = std::sqrt(p * (1 - p) / trials);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) CHECK(std::abs(static_cast<double>(hits[u * n + v]) / trials - p) < 4.5 * se);
  }
}

TEST_CASE("mean edge count of G(1000, 0.01)") {
  std::vector<double> counts;
  for (std::uint64_t s = 0; s < 10000; ++s) counts.push_back(static_cast<double>(sample_gnp(1000, 0.01, RngSpec{2024, s}).edge_count()));
  auto [mean, se] = summarize(counts);
  CHECK(std::abs(mean - 4995.0) < 3 * se);
  CHECK(se == doctest::Approx(0.70).epsilon(0.05));
}

TEST_CASE("mean triangle count at n = 1000, c = 1") {
  const std::size_t n = 1000;
  const double p = 1.0 / std::sqrt(1000.0);
  const double expected = 1000.0 * 999 * 998 / 6 * p * p * p;
  CHECK(expected == doctest::Approx(5255).epsilon(0.001));
  std::vector<double> counts;
  for (std::uint64_t s = 0; s < 300; ++s) {
    counts.push_back(static_cast<double>(clique_counts(sample_gnp(n, p, RngSpec{31, s}), 2)[2]));
  }
  auto [mean, se] = summarize(counts);
  CHECK(std::abs(mean - expected) < 3 * se);
}

TEST_CASE("reference constants") {
  auto r2 = reference_constants(2);
  CHECK(r2.gamma_d() == 2.455);
  CHECK(r2.c_d() == 2.754);
  CHECK(r2.epsilon == 1.0 / 64);
  CHECK(r2.poisson_mean(1.0) == doctest::Approx(1.0 / 48));
  CHECK(reference_constants(3).epsilon == 1.0 / 384);
  CHECK(reference_constants(5).c_d() == 5.984);
  CHECK(reference_constants(4).gamma_d() == 3.509);
  CHECK_THROWS_AS(reference_constants(6).gamma_d(), InputError);
  CHECK_THROWS_AS(reference_constants(1).c_d(), InputError);
  CHECK_THROWS_AS(reference_constants(0), InputError);
}

TEST_CASE("cross-polytope symmetry count by brute force") {
  // 2^{d+1} (d+1)! for d = 1, 2, 3
  for (int d = 1; d <= 3; ++d) {
    std::vector<Edge> e;
    const Vertex v = static_cast<Vertex>(2 * d + 2);
    for (Vertex a = 0; a < v; ++a) {
      for (Vertex b = a + 1; b < v; ++b) {
        if (b != (a ^ 1u)) e.emplace_back(a, b);
      }
    }
    CHECK(brute_automorphisms(Graph(v, e)) == crosspolytope_automorphisms(d));
  }
  CHECK(crosspolytope_automorphisms(2) == 48);
}

TEST_CASE("closed-form targets") {
  const double p = 1.0 / std::sqrt(1000.0);
  CHECK(expected_crosspolytope_count(1000, 2, p) == doctest::Approx(0.0205226).epsilon(1e-5));
  CHECK(cycle_probability_limit(0.5) == doctest::Approx(0.0334996).epsilon(1e-5));
  CHECK(cycle_probability_limit(0.0) == 0.0);
  CHECK_THROWS_AS(cycle_probability_limit(1.0), InputError);
}
