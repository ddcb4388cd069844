#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "flaglab/experiment/experiment.hpp"

namespace flaglab {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string field_column(const Coefficients& f) {
  return f.kind == Coefficients::Kind::rationals ? "betti_d_q" : "betti_d_gf" + std::to_string(f.p);
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Json to_json(const Observables& o) {
  Json j;
  Json fields = Json::array();
  for (const auto& f : o.fields) fields.push_back(f.to_string());
  j["fields"] = fields;
  j["euler_check"] = o.euler_check;
  j["census"] = o.census;
  j["collapse"] = o.collapse;
  j["face_degrees"] = o.face_degrees;
  j["morse"] = o.morse;
  j["cycle"] = o.cycle;
  j["pi1"] = o.pi1;
  j["torsion_degrees"] = o.torsion_degrees;
  j["plant_projective_plane"] = o.plant_projective_plane;
  j["timing"] = o.timing;
  return j;
}

Json to_json(const GofReport& g) {
  Json j;
  j["sample_size"] = g.sample_size;
  j["mean"] = g.mean;
  j["variance"] = g.variance;
  j["target_mean"] = g.target_mean;
  j["observed"] = g.observed;
  j["expected"] = g.expected;
  j["chi_square"] = g.chi_square;
  j["degrees_of_freedom"] = g.degrees_of_freedom;
  j["p_value"] = g.p_value;
  j["total_variation"] = g.total_variation;
  return j;
}

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json to_json(const ExperimentConfig& cfg, const TrialRecord& r) {
  Json j;
  j["stream"] = r.stream;
  if (!r.ok()) {
    j["error"] = r.error;
    return j;
  }
  j["f"] = r.f;
  Json betti;
  for (std::size_t i = 0; i < r.betti_d.size(); ++i) betti[cfg.obs.fields[i].to_string()] = r.betti_d[i];
  j["betti_d"] = betti;
  j["euler_ok"] = opt(r.euler_ok);
  j["cp_count"] = opt(r.cp_count);
  j["cp_induced"] = opt(r.cp_induced);
  j["collapse_status"] = r.collapse_status ? Json(to_string(*r.collapse_status)) : Json(nullptr);
  j["surviving"] = opt(r.surviving);
  j["max_degree"] = r.max_degree;
  j["c_bounded"] = opt(r.c_bounded);
  j["morse_slack"] = opt(r.morse_slack);
  j["has_cycle"] = opt(r.has_cycle);
  j["pi1_ok"] = opt(r.pi1_conditions);
  Json torsion = Json::object();
  for (const auto& [k, divisors] : r.torsion) {
    Json list = Json::array();
    for (const auto& t : divisors) list.push_back(t.str());
    torsion[std::to_string(k)] = list;
  }
  j["torsion"] = torsion;
  j["violations"] = r.violations;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentResult& res) {
  const auto& cfg = res.config;
  const int degree_cols = std::max(1, cfg.d - 1);
  std::vector<std::string> extra_fields;
  std::optional<std::size_t> gf2, q;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < cfg.obs.fields.size(); ++i) {
    const auto& f = cfg.obs.fields[i];
    if (f.kind == Coefficients::Kind::rationals && !q) {
      q = i;
    } else if (f.kind == Coefficients::Kind::prime_field && f.p == 2 && !gf2) {
      gf2 = i;
    } else {
      others.push_back(i);
    }
  }

  out << "stream,f0,f1,f2,f3,f4,betti_d_gf2,betti_d_q";
  for (std::size_t i : others) out << ',' << field_column(cfg.obs.fields[i]);
  out << ",cp_count,cp_induced,collapse_status,surviving";
  for (int i = 1; i <= degree_cols; ++i) out << ",max_deg_i" << i;
  out << ",c_bounded,morse_slack,has_cycle,pi1_ok,torsion_max,wall_ms,error\n";

  for (const auto& r : res.records) {
    out << r.stream;
    for (std::size_t k = 0; k < 5; ++k) {
      out << ',';
      if (r.ok() && k < r.f.size()) out << r.f[k];
    }
    auto betti = [&](std::optional<std::size_t> idx) {
      out << ',';
      if (idx && *idx < r.betti_d.size()) out << r.betti_d[*idx];
    };
    betti(gf2);
    betti(q);
    for (std::size_t i : others) betti(i);
    out << ',' << cell(r.cp_count) << ',' << cell(r.cp_induced) << ','
        << (r.collapse_status ? to_string(*r.collapse_status) : "") << ',' << cell(r.surviving);
    for (int i = 0; i < degree_cols; ++i) {
      out << ',';
      if (static_cast<std::size_t>(i) < r.max_degree.size()) out << r.max_degree[static_cast<std::size_t>(i)];
    }
    auto tmax = r.torsion_max();
    out << ',' << cell(r.c_bounded) << ',' << cell(r.morse_slack) << ',' << cell(r.has_cycle) << ','
        << cell(r.pi1_conditions) << ',' << (tmax ? tmax->str() : "") << ',' << (r.wall_ms ? fixed3(*r.wall_ms) : "")
        << ',' << quoted(r.error) << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentResult& res, bool with_records) {
  const auto& cfg = res.config;
  const auto& a = res.aggregates;
  Json j;
  j["version"] = library_version();
  Json c;
  c["model"] = to_string(cfg.model);
  c["n"] = cfg.n;
  c["d"] = cfg.d;
  c["probability"] = cfg.prob.to_string();
  c["p"] = cfg.p();
  c["trials"] = cfg.trials;
  c["master_seed"] = cfg.master_seed;
  c["dim_cap"] = cfg.effective_cap();
  c["observables"] = to_json(cfg.obs);
  j["config"] = c;

  Json ag;
  ag["successes"] = a.successes;
  ag["failures"] = a.failures;
  ag["mean_f"] = a.mean_f;
  Json betti;
  for (std::size_t i = 0; i < a.mean_betti_d.size(); ++i) betti[cfg.obs.fields[i].to_string()] = a.mean_betti_d[i];
  ag["mean_betti_d"] = betti;
  ag["mean_cp"] = opt(a.mean_cp);
  ag["mean_cp_induced"] = opt(a.mean_cp_induced);
  if (cfg.obs.collapse) {
    ag["collapse"] = Json{{"collapsed_below_d", a.collapsed_below}, {"almost_collapsed", a.almost_collapsed}, {"stuck", a.stuck}};
  }
  ag["cycle_fraction"] = opt(a.cycle_fraction);
  ag["c_bounded_fraction"] = opt(a.c_bounded_fraction);
  ag["violations"] = a.violations;
  ag["census_gof"] = a.census_gof ? to_json(*a.census_gof) : Json(nullptr);
  ag["torsion_max"] = a.torsion_max ? Json(a.torsion_max->str()) : Json(nullptr);
  j["aggregates"] = ag;

  if (with_records) {
    Json recs = Json::array();
    for (const auto& r : res.records) recs.push_back(to_json(cfg, r));
    j["records"] = recs;
  }
  out << j.dump(2) << '\n';
}

}  // namespace flaglab
