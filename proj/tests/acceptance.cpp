// Acceptance runner: one PASS/FAIL line per criterion. Run with the
// criterion names to check (ac1 .. ac10), or "all".

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "flaglab/collapse/collapse.hpp"
#include "flaglab/density/density.hpp"
#include "flaglab/experiment/experiment.hpp"
#include "flaglab/experiment/studies.hpp"
#include "flaglab/homology/homology.hpp"
#include "flaglab/random/models.hpp"
#include "flaglab/topology/operations.hpp"
#include "oracles.hpp"

using namespace flaglab;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::vector<long long>> dense_ll(const IntMatrix& m) {
  std::vector<std::vector<long long>> a;
  for (const auto& row : m.to_dense()) a.emplace_back(row.begin(), row.end());
  return a;
}

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

// K_{2,2,2}: six vertices, each missing exactly one other.
bool is_octahedron(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 12) return false;
  for (Vertex v = 0; v < 6; ++v) {
    if (g.degree(v) != 4) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> all_betti(const SimplicialComplex& x) {
  auto rep = homology_report(x, {Coefficients::gf(2), Coefficients::gf(3)}, false);
  for (auto& b : rep.betti) {
    while (!b.empty() && b.back() == 0) b.pop_back();
  }
  return rep.betti;
}

Verdict ac1() {
  std::size_t graphs = 0, mismatches = 0, undecided = 0, octahedra = 0;
  std::string first;
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint32_t masks = 1u << (n * (n - (n > 0)) / 2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto decision = is_d_collapsible_exact(clique_complex(g, SimplicialComplex::kUnbounded), 2);
      ++graphs;
      if (decision == Decision::budget_exhausted) {
        ++undecided;
        continue;
      }
      const bool octa = is_octahedron(g);
      octahedra += octa;
      if ((decision == Decision::no) != octa) {
        if (first.empty()) first = fmt(" first mismatch n=%zu mask=%u", n, mask);
        ++mismatches;
      }
    }
  }
  return {mismatches == 0 && undecided == 0 && octahedra == 15,
          fmt("%zu graphs, %zu octahedra, %zu mismatches, %zu undecided", graphs, octahedra, mismatches, undecided) + first};
}

Verdict ac2() {
  ExperimentConfig cfg;
  cfg.n = 1000;
  cfg.d = 2;
  cfg.prob = ProbabilitySpec::scaled(1.0);
  cfg.trials = 20000;
  cfg.master_seed = 20240601;
  cfg.obs.census = true;
  cfg.workers = workers();
  const auto res = run_experiment(cfg);
  const auto& a = res.aggregates;
  if (a.failures > 0 || !a.census_gof) return {false, fmt("%zu failed trials", a.failures)};
  const auto& gof = *a.census_gof;
  const double target = expected_crosspolytope_count(cfg.n, cfg.d, cfg.p());
  const double se = std::sqrt(gof.variance / static_cast<double>(gof.sample_size));
  const double z = se > 0 ? (gof.mean - target) / se : (gof.mean == target ? 0.0 : INFINITY);
  const bool pass = std::abs(z) <= 3.0 && gof.p_value > 0.01;
  return {pass, fmt("mean %.6f target %.6f se %.6f z %.2f chi2 %.3f df %zu p-value %.4f tv %.5f", gof.mean, target, se, z,
                    gof.chi_square, gof.degrees_of_freedom, gof.p_value, gof.total_variation)};
}

Verdict ac3() {
  bool pass = true;
  std::string detail;
  std::size_t total = 0, mismatches = 0;
  for (std::size_t n : {200u, 500u}) {
    for (double c : {0.8, 1.0, 1.5}) {
      ExperimentConfig cfg;
      cfg.n = n;
      cfg.d = 2;
      cfg.prob = ProbabilitySpec::scaled(c);
      cfg.trials = 334;
      cfg.master_seed = 777;
      cfg.obs.fields = {Coefficients::rationals()};
      cfg.obs.collapse = true;
      cfg.workers = workers();
      const auto res = run_experiment(cfg);
      std::size_t stuck = 0, almost = 0, failed = 0;
      for (const auto& r : res.records) {
        if (!r.ok()) {
          ++failed;
          std::cout << "  n=" << n << " c=" << c << " " << r.error << '\n';
          continue;
        }
        ++total;
        if (*r.collapse_status == CollapseStatus::stuck) {
          ++stuck;
          if (c <= 1.0) std::cout << "  stuck: n=" << n << " c=" << c << " stream=" << r.stream << " beta2=" << r.betti_d[0] << '\n';
        }
        if (*r.collapse_status == CollapseStatus::almost_collapsed) {
          ++almost;
          if (r.betti_d[0] != *r.surviving) ++mismatches;
        }
      }
      const double stuck_rate = static_cast<double>(stuck) / static_cast<double>(res.records.size());
      if (failed > 0) pass = false;
      if (c <= 1.0 && stuck_rate >= 0.05) pass = false;
      detail += fmt("[n=%zu c=%.1f almost=%zu stuck=%.1f%%] ", n, c, almost, 100 * stuck_rate);
    }
  }
  if (mismatches > 0 || total < 2000) pass = false;
  return {pass, fmt("%zu trials, %zu census/Betti mismatches ", total, mismatches) + detail};
}

Verdict ac4() {
  std::mt19937_64 rng(4004);
  std::size_t changed = 0, complexes = 0, steps = 0;
  std::string first;
  while (complexes < 1000) {
    const std::size_t n = 10 + rng() % 191;
    const double c = 0.5 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    const double p = std::min(1.0, c / std::sqrt(static_cast<double>(n)));
    const Graph g = sample_gnp(n, p, RngSpec{rng(), 0});
    const auto x = clique_complex(g, SimplicialComplex::kUnbounded);
    const int kind = static_cast<int>(complexes % 4);
    CollapseOutcome out;
    if (kind == 0 || kind == 1) {
      out = almost_d_collapse(x, 2, rng());
    } else {
      out = greedy_d_collapse(x, kind == 2 ? 1 : 3, OrderPolicy::random(), rng());
    }
    const auto residual = replay(x, out.steps);
    steps += out.steps.size();
    if (all_betti(x) != all_betti(residual)) {
      ++changed;
      if (first.empty()) first = fmt(" first change at complex %zu (n=%zu)", complexes, n);
    }
    ++complexes;
  }
  return {changed == 0, fmt("%zu complexes, %zu collapse steps replayed, %zu Betti changes", complexes, steps, changed) + first};
}

Verdict ac5() {
  ExperimentConfig cfg;
  cfg.n = 10000;
  cfg.d = 1;
  cfg.prob = ProbabilitySpec::scaled(0.5);
  cfg.trials = 10000;
  cfg.master_seed = 55;
  cfg.dim_cap = 2;
  cfg.obs.cycle = true;
  cfg.workers = workers();
  const auto res = run_experiment(cfg);
  const double target = cycle_probability_limit(0.5);
  const double got = res.aggregates.cycle_fraction.value_or(-1);
  return {res.aggregates.failures == 0 && std::abs(got - target) <= 0.01,
          fmt("cycle fraction %.4f target %.7f difference %.4f", got, target, got - target)};
}

Verdict ac6() {
  std::mt19937_64 rng(606);
  const Rational limit = density_threshold(2);
  std::size_t accepted = 0, drawn = 0, failed = 0, near = 0;
  std::string first;
  while (accepted < 1000) {
    const std::size_t n = 4 + rng() % 11;
    const double p = 0.25 + 0.55 * std::uniform_real_distribution<double>(0, 1)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    ++drawn;
    if (!connected(g)) continue;
    const auto rho = essential_density(g).rho;
    if (!(rho < limit)) continue;
    ++accepted;
    near += rho >= Rational(2);
    const auto out = almost_d_collapse(clique_complex(g, SimplicialComplex::kUnbounded), 2, rng());
    if (out.status == CollapseStatus::stuck) {
      ++failed;
      if (first.empty()) first = fmt(" first failure: n=%zu m=%zu", n, g.edge_count());
    }
  }
  return {failed == 0, fmt("%zu graphs accepted of %zu drawn (%zu with rho >= 2), %zu not almost collapsible", accepted,
                           drawn, near, failed) + first};
}

Verdict ac7() {
  std::mt19937_64 rng(707);
  std::size_t mismatches = 0, witness_bad = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const auto r = essential_density(g);
    if (r.rho != oracle::max_density(g)) ++mismatches;
    std::int64_t e = 0;
    for (auto [u, v] : g.edges()) {
      e += std::binary_search(r.witness.begin(), r.witness.end(), u) && std::binary_search(r.witness.begin(), r.witness.end(), v);
    }
    if (r.witness.empty() || Rational(e, static_cast<std::int64_t>(r.witness.size())) != r.rho) ++witness_bad;
  }
  return {mismatches == 0 && witness_bad == 0,
          fmt("500 graphs, %zu density mismatches, %zu bad witnesses", mismatches, witness_bad)};
}

Verdict ac8() {
  const auto rp2 = projective_plane6();
  const auto h1 = homology_with_torsion(rp2, 1);
  const bool group_ok = h1.rank == 0 && h1.torsion.size() == 1 && h1.torsion[0] == 2;
  const auto d2 = dense_ll(boundary_matrix(rp2, 2).matrix);
  const bool oracle_ok = oracle::determinantal_divisor(d2, 9) == 1 && oracle::determinantal_divisor(d2, 10) == 2;

  ExperimentConfig cfg;
  cfg.d = 2;
  cfg.trials = 25;
  cfg.master_seed = 88;
  cfg.prob = ProbabilitySpec::scaled(1.0);
  cfg.obs.plant_projective_plane = true;
  cfg.workers = workers();
  const auto report = torsion_search(cfg, 1, {10, 20, 40, 80}, {0.0, 0.8, 1.6, 2.4});
  std::size_t with_two = 0;
  for (const auto& h : report.hits) with_two += std::count(h.divisors.begin(), h.divisors.end(), BigInt(2)) > 0;
  const bool recall = report.failures == 0 && with_two == report.trials_run;
  return {group_ok && oracle_ok && recall,
          fmt("H1(RP2) = %s, determinantal oracle %s, planted recall %zu/%zu", h1.to_string().c_str(),
              oracle_ok ? "agrees" : "disagrees", with_two, report.trials_run)};
}

Verdict ac9() {
  ExperimentConfig cfg;
  cfg.n = 4000;
  cfg.d = 2;
  cfg.prob = ProbabilitySpec::scaled(1.0);
  cfg.trials = 1000;
  cfg.master_seed = 9;
  cfg.obs.face_degrees = true;
  cfg.workers = workers();
  const auto res = run_experiment(cfg);
  const double bound = 1.2 * std::sqrt(4000.0);
  std::size_t over = 0;
  double mean_max = 0;
  for (const auto& r : res.records) {
    over += static_cast<double>(r.max_degree.at(0)) > bound;
    mean_max += static_cast<double>(r.max_degree.at(0));
  }
  const double frac = static_cast<double>(over) / static_cast<double>(res.records.size());
  mean_max /= static_cast<double>(res.records.size());
  return {res.aggregates.failures == 0 && frac < 0.01,
          fmt("fraction with max degree > %.2f: %.4f (mean max degree %.2f, mean degree %.2f)", bound, frac, mean_max,
              2 * res.aggregates.mean_f.at(1) / 4000.0)};
}

Verdict ac10() {
  ExperimentConfig cfg;
  cfg.n = 120;
  cfg.d = 2;
  cfg.prob = ProbabilitySpec::scaled(1.4);
  cfg.trials = 60;
  cfg.master_seed = 1010;
  cfg.obs = Observables::standard();
  cfg.obs.cycle = true;
  cfg.obs.euler_check = true;
  cfg.obs.torsion_degrees = {1};
  std::vector<std::string> csv;
  for (std::size_t w : {1u, 2u, 3u, 8u}) {
    cfg.workers = w;
    std::ostringstream out;
    write_csv(out, run_experiment(cfg));
    csv.push_back(out.str());
  }
  bool same = true;
  for (const auto& s : csv) same = same && s == csv[0];
  return {same, fmt("workers 1/2/3/8, %zu-byte CSV, %s", csv[0].size(), same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"ac1", {"cross-polytope uniqueness among small graphs", ac1}},
      {"ac2", {"Poisson law of the cross-polytope census", ac2}},
      {"ac3", {"census equals beta_2 after almost-collapse", ac3}},
      {"ac4", {"Betti numbers survive collapse replay", ac4}},
      {"ac5", {"cycle probability of G(n, c/n)", ac5}},
      {"ac6", {"sparse graphs are almost 2-collapsible", ac6}},
      {"ac7", {"flow density equals brute force", ac7}},
      {"ac8", {"torsion detector", ac8}},
      {"ac9", {"vertex degree bound", ac9}},
      {"ac10", {"worker-count determinism", ac10}},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) {
    wanted = {"ac1", "ac2", "ac3", "ac4", "ac5", "ac6", "ac7", "ac8", "ac9", "ac10"};
  }
  int failures = 0;
  for (const auto& name : wanted) {
    auto it = criteria.find(name);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << name << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = it->second.second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string upper = name;
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::cout << upper << ' ' << (v.pass ? "PASS" : "FAIL") << " (" << it->second.first << "): " << v.detail
              << fmt(" [%.1fs]", secs) << std::endl;
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
