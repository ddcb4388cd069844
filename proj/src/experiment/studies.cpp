#include "flaglab/experiment/studies.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "flaglab/random/models.hpp"

namespace flaglab {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string num(const std::optional<double>& v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", *v);
  return buf;
}

void annotate(std::vector<ScanRow>& rows, int d) {
  const auto ref = reference_constants(d);
  if (!ref.gamma || rows.empty()) return;
  double gap = 0.05;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    gap = i == 1 ? rows[i].c - rows[i - 1].c : std::min(gap, rows[i].c - rows[i - 1].c);
  }
  const double slack = gap / 2;
  auto mark = [&](double value, const char* label) {
    if (value < rows.front().c - slack || value > rows.back().c + slack) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (std::abs(rows[i].c - value) < std::abs(rows[best].c - value)) best = i;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s~%.3f", label, value);
    auto& note = rows[best].note;
    note += note.empty() ? "" : ";";
    note += buf;
  };
  mark(*ref.gamma, "gamma_d");
  mark(*ref.c_threshold, "c_d");
}

}  // namespace

ScanResult threshold_scan(const ExperimentConfig& base, const std::vector<double>& c_grid) {
  if (c_grid.empty()) throw InputError("threshold_scan: empty c grid");
  for (std::size_t i = 1; i < c_grid.size(); ++i) {
    if (!(c_grid[i] > c_grid[i - 1])) throw InputError("threshold_scan: the c grid must be strictly increasing");
  }
  ScanResult s;
  s.base = base;
  const double scale = std::pow(static_cast<double>(base.n), (base.d + 1) / 2.0);
  for (double c : c_grid) {
    ExperimentConfig cfg = base;
    cfg.prob = ProbabilitySpec::scaled(c);
    auto res = run_experiment(cfg);
    const auto& a = res.aggregates;
    ScanRow row;
    row.c = c;
    row.p = cfg.p();
    row.trials = a.successes;
    if (a.successes > 0) {
      const double n = static_cast<double>(a.successes);
      if (cfg.obs.collapse) row.almost_collapsible = static_cast<double>(a.collapsed_below + a.almost_collapsed) / n;
      if (!a.mean_betti_d.empty()) {
        row.mean_betti_d = a.mean_betti_d.front();
        row.betti_normalized = *row.mean_betti_d / scale;
      }
      row.mean_cp = a.mean_cp;
      row.cycle_fraction = a.cycle_fraction;
    }
    if (cfg.d == 1 && c >= 0 && c < 1) row.cycle_target = cycle_probability_limit(c);
    s.rows.push_back(row);
  }
  annotate(s.rows, base.d);
  return s;
}

void write_scan_csv(std::ostream& out, const ScanResult& s) {
  out << "c,p,trials,almost_collapsible,mean_betti_d,mean_cp,betti_normalized,cycle_fraction,cycle_target,note\n";
  for (const auto& r : s.rows) {
    out << num(r.c) << ',' << num(r.p) << ',' << r.trials << ',' << num(r.almost_collapsible) << ','
        << num(r.mean_betti_d) << ',' << num(r.mean_cp) << ',' << num(r.betti_normalized) << ','
        << num(r.cycle_fraction) << ',' << num(r.cycle_target) << ',' << r.note << '\n';
  }
}

void write_scan_json(std::ostream& out, const ScanResult& s) {
  Json j;
  j["version"] = library_version();
  j["model"] = to_string(s.base.model);
  j["n"] = s.base.n;
  j["d"] = s.base.d;
  j["trials"] = s.base.trials;
  j["master_seed"] = s.base.master_seed;
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    rows.push_back(Json{{"c", r.c},
                        {"p", r.p},
                        {"trials", r.trials},
                        {"almost_collapsible", opt(r.almost_collapsible)},
                        {"mean_betti_d", opt(r.mean_betti_d)},
                        {"mean_cp", opt(r.mean_cp)},
                        {"betti_normalized", opt(r.betti_normalized)},
                        {"cycle_fraction", opt(r.cycle_fraction)},
                        {"cycle_target", opt(r.cycle_target)},
                        {"note", r.note}});
  }
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

TorsionReport torsion_search(const ExperimentConfig& base, int k, const std::vector<std::size_t>& n_grid,
                             const std::vector<double>& c_grid) {
  if (k < 1) throw InputError("torsion_search: degree must be at least 1");
  TorsionReport t;
  t.degree = k;
  const std::vector<std::size_t> ns = n_grid.empty() ? std::vector<std::size_t>{base.n} : n_grid;
  std::vector<std::optional<double>> cs;
  if (c_grid.empty()) {
    cs.push_back(std::nullopt);
  } else {
    cs.assign(c_grid.begin(), c_grid.end());
  }
  for (std::size_t n : ns) {
    for (const auto& c : cs) {
      ExperimentConfig cfg = base;
      cfg.n = n;
      if (c) cfg.prob = ProbabilitySpec::scaled(*c);
      cfg.obs.torsion_degrees = {k};
      if (cfg.dim_cap >= 0) cfg.dim_cap = std::max(cfg.dim_cap, k + 1);
      auto res = run_experiment(cfg);
      t.trials_run += res.records.size();
      t.failures += res.aggregates.failures;
      for (const auto& r : res.records) {
        if (!r.ok() || r.torsion.empty() || r.torsion.front().second.empty()) continue;
        TorsionHit hit;
        hit.n = n;
        hit.c = cfg.prob.scale(n, cfg.d);
        hit.p = cfg.p();
        hit.stream = r.stream;
        hit.divisors = r.torsion.front().second;
        const BigInt top = hit.divisors.back();
        if (!t.largest || top > t.largest->divisors.back()) t.largest = hit;
        t.hits.push_back(std::move(hit));
      }
    }
  }
  return t;
}

void write_torsion_json(std::ostream& out, const TorsionReport& t) {
  auto hit_json = [](const TorsionHit& h) {
    Json d = Json::array();
    for (const auto& v : h.divisors) d.push_back(v.str());
    return Json{{"n", h.n}, {"c", h.c}, {"p", h.p}, {"stream", h.stream}, {"divisors", d}};
  };
  Json j;
  j["version"] = library_version();
  j["degree"] = t.degree;
  j["trials_run"] = t.trials_run;
  j["failures"] = t.failures;
  Json hits = Json::array();
  for (const auto& h : t.hits) hits.push_back(hit_json(h));
  j["hits"] = hits;
  j["largest"] = t.largest ? hit_json(*t.largest) : Json(nullptr);
  out << j.dump(2) << '\n';
}

}  // namespace flaglab
