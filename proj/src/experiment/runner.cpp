#include <atomic>
#include <thread>

#include "flaglab/experiment/experiment.hpp"
#include "flaglab/random/models.hpp"

namespace flaglab {

Aggregates aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  Aggregates a;
  a.mean_betti_d.assign(cfg.obs.fields.size(), 0.0);
  double cp = 0, cp_induced = 0;
  std::size_t cycles = 0, bounded = 0, bounded_seen = 0;
  std::vector<std::size_t> histogram;
  for (const auto& r : records) {
    if (!r.ok()) {
      ++a.failures;
      continue;
    }
    ++a.successes;
    if (a.mean_f.size() < r.f.size()) a.mean_f.resize(r.f.size(), 0.0);
    for (std::size_t k = 0; k < r.f.size(); ++k) a.mean_f[k] += static_cast<double>(r.f[k]);
    for (std::size_t i = 0; i < r.betti_d.size(); ++i) a.mean_betti_d[i] += static_cast<double>(r.betti_d[i]);
    if (r.cp_count) {
      cp += static_cast<double>(*r.cp_count);
      cp_induced += static_cast<double>(*r.cp_induced);
      if (histogram.size() <= *r.cp_count) histogram.resize(*r.cp_count + 1, 0);
      ++histogram[*r.cp_count];
    }
    if (r.collapse_status) {
      switch (*r.collapse_status) {
        case CollapseStatus::collapsed_below_d: ++a.collapsed_below; break;
        case CollapseStatus::almost_collapsed: ++a.almost_collapsed; break;
        case CollapseStatus::stuck: ++a.stuck; break;
      }
    }
    if (r.has_cycle) cycles += *r.has_cycle;
    if (r.c_bounded) {
      ++bounded_seen;
      bounded += *r.c_bounded;
    }
    if (!r.violations.empty()) ++a.violations;
    if (auto t = r.torsion_max()) a.torsion_max = a.torsion_max ? std::max(*a.torsion_max, *t) : *t;
  }
  if (a.successes == 0) return a;
  const double n = static_cast<double>(a.successes);
  for (auto& v : a.mean_f) v /= n;
  for (auto& v : a.mean_betti_d) v /= n;
  if (cfg.obs.census) {
    a.mean_cp = cp / n;
    a.mean_cp_induced = cp_induced / n;
    if (cfg.model == Model::flag) a.census_gof = poisson_gof(histogram, expected_crosspolytope_count(cfg.n, cfg.d, cfg.p()));
  }
  if (cfg.obs.cycle) a.cycle_fraction = static_cast<double>(cycles) / n;
  if (bounded_seen) a.c_bounded_fraction = static_cast<double>(bounded) / static_cast<double>(bounded_seen);
  return a;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  result.records.resize(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.trials) return;
      result.records[i] = run_trial(cfg, i);
    }
  };
  const std::size_t threads = std::min(cfg.workers, cfg.trials);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  result.aggregates = aggregate(cfg, result.records);
  return result;
}

}  // namespace flaglab
