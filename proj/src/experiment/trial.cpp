#include <chrono>
#include <cmath>
#include <numeric>

#include "flaglab/collapse/crosspolytope.hpp"
#include "flaglab/collapse/predicates.hpp"
#include "flaglab/density/density.hpp"
#include "flaglab/experiment/experiment.hpp"
#include "flaglab/random/models.hpp"
#include "flaglab/topology/operations.hpp"

namespace flaglab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool has_cycle(const Graph& g) {
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [u, v] : g.edges()) {
    const Vertex a = find(u), b = find(v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

// A decimal approximation of c for the exact c-bounded comparison.
Rational as_rational(double c) {
  constexpr std::int64_t kDen = 1'000'000;
  return Rational(static_cast<std::int64_t>(std::llround(c * kDen)), kDen);
}

bool needs_complex(const ExperimentConfig& cfg) {
  const auto& o = cfg.obs;
  return cfg.model == Model::linial_meshulam || !o.fields.empty() || o.euler_check || o.morse || o.pi1 ||
         !o.torsion_degrees.empty() || o.plant_projective_plane || (o.face_degrees && cfg.d >= 3);
}

void measure(const ExperimentConfig& cfg, std::uint64_t stream, TrialRecord& r) {
  const auto& o = cfg.obs;
  const int d = cfg.d;
  const double p = cfg.p();
  const RngSpec spec{cfg.master_seed, stream};

  Graph g;
  SimplicialComplex x;
  const bool built = needs_complex(cfg);
  if (cfg.model == Model::flag) {
    r.cap = cfg.effective_cap();
    g = sample_gnp(cfg.n, p, spec);
    if (built) x = clique_complex(g, r.cap);
  } else {
    x = sample_linial_meshulam(cfg.n, d, p, spec);
    r.cap = d;
    g = x.graph();
  }
  if (o.plant_projective_plane) x = disjoint_union(x, projective_plane6());

  if (built) {
    r.f = x.f_vector(r.cap);
  } else {
    r.f = clique_counts(g, r.cap);
    r.f.resize(static_cast<std::size_t>(r.cap) + 1, 0);
  }

  std::optional<std::size_t> beta_q;
  for (const auto& field : o.fields) {
    r.betti_d.push_back(betti_number(x, d, field));
    if (field.kind == Coefficients::Kind::rationals) beta_q = r.betti_d.back();
  }
  if (o.euler_check) {
    auto rep = homology_report(x, o.fields.empty() ? std::vector<Coefficients>{Coefficients::gf(2)} : o.fields, false);
    bool ok = true;
    for (const auto& betti : rep.betti) {
      std::int64_t alt = 0;
      for (std::size_t k = 0; k < betti.size(); ++k) {
        alt += k % 2 ? -static_cast<std::int64_t>(betti[k]) : static_cast<std::int64_t>(betti[k]);
      }
      ok = ok && alt == rep.euler;
    }
    r.euler_ok = ok;
    if (!ok) r.violations.push_back("Euler characteristic differs from the alternating Betti sum");
  }

  if (o.census) {
    auto c = count_crosspolytopes(g, d);
    r.cp_count = c.embedded;
    r.cp_induced = c.induced;
  }

  if (o.collapse) {
    const std::uint64_t seed = splitmix(cfg.master_seed ^ splitmix(stream));
    CollapseOutcome out;
    if (cfg.model == Model::flag) {
      out = almost_d_collapse(clique_complex(g, SimplicialComplex::kUnbounded), d, seed);
    } else {
      out = greedy_d_collapse(x, d, OrderPolicy::random(), seed);
    }
    r.collapse_status = out.status;
    r.surviving = out.surviving_crosspolytopes.size();
    if (out.status != CollapseStatus::stuck) {
      if (!beta_q) beta_q = betti_number(built ? x : clique_complex(g, d + 1), d, Coefficients::rationals());
      if (*beta_q != *r.surviving) {
        r.violations.push_back("beta_d over Q is " + std::to_string(*beta_q) + " but " + std::to_string(*r.surviving) +
                               " cross-polytopes survive");
      }
    }
  }

  if (o.face_degrees) {
    const SimplicialComplex faces = built ? x : clique_complex(g, std::max(1, d - 1));
    for (int i = 1; i <= std::max(1, d - 1); ++i) r.max_degree.push_back(max_face_degree(faces, i));
    if (d >= 2) r.c_bounded = c_bounded_check(faces, d, as_rational(cfg.prob.scale(cfg.n, d))).pass;
  }

  if (o.morse && d == 2) {
    auto m = morse_inequality_check(x);
    r.morse_slack = static_cast<std::int64_t>(m.beta2) - m.lower_bound;
    if (!m.holds) r.violations.push_back("Morse inequality beta_2 >= f_2 - f_1 - f_3 fails");
  }

  if (o.cycle) r.has_cycle = has_cycle(g);
  if (o.pi1) r.pi1_conditions = check_pi1_preconditions(x).evaluated_hold();
  for (int k : o.torsion_degrees) r.torsion.emplace_back(k, homology_with_torsion(x, k).torsion);
}

}  // namespace

std::optional<BigInt> TrialRecord::torsion_max() const {
  if (torsion.empty()) return std::nullopt;
  BigInt best = 1;
  for (const auto& [k, divisors] : torsion) {
    for (const auto& t : divisors) best = std::max(best, t);
  }
  return best;
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t stream) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord r;
  r.stream = stream;
  try {
    measure(cfg, stream, r);
  } catch (const std::exception& e) {
    TrialRecord failed;
    failed.stream = stream;
    failed.error = "stream " + std::to_string(stream) + ": " + e.what();
    return failed;
  }
  if (cfg.obs.timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

}  // namespace flaglab
