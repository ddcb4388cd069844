// Command-line front end for the random flag complex laboratory.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "json.hpp"

#include "flaglab/collapse/collapse.hpp"
#include "flaglab/collapse/crosspolytope.hpp"
#include "flaglab/collapse/predicates.hpp"
#include "flaglab/density/density.hpp"
#include "flaglab/experiment/experiment.hpp"
#include "flaglab/experiment/studies.hpp"
#include "flaglab/homology/homology.hpp"
#include "flaglab/random/models.hpp"
#include "flaglab/topology/io.hpp"
#include "flaglab/topology/operations.hpp"

using namespace flaglab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 1;
constexpr int kInvariantViolation = 2;

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t n = 0;
  int d = 2;
  std::optional<double> p, c, alpha;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::size_t workers = 1;
  int dim_cap = -1;
  std::string out;
  std::string format = "csv";
  std::string trace;
  std::string input;
  std::string model = "flag";

  ProbabilitySpec prob() const {
    if (p) return ProbabilitySpec::raw(*p);
    if (c) return ProbabilitySpec::scaled(*c);
    if (alpha) return ProbabilitySpec::power(*alpha);
    throw InputError("one of --p, --c, --alpha is required");
  }
  int cap() const { return dim_cap < 0 ? d + 2 : dim_cap; }
  Model model_kind() const { return model == "flag" ? Model::flag : Model::linial_meshulam; }
};

void add_model_options(CLI::App* cmd, Common& o) {
  cmd->add_option("--n", o.n, "Number of vertices");
  cmd->add_option("--d", o.d, "Dimension parameter d")->check(CLI::PositiveNumber);
  auto* p = cmd->add_option("--p", o.p, "Edge (or face) probability");
  auto* c = cmd->add_option("--c", o.c, "Scaled probability: p = c n^(-1/d)");
  auto* a = cmd->add_option("--alpha", o.alpha, "Power law: p = n^(-alpha)");
  p->excludes(c)->excludes(a);
  c->excludes(a);
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--dim-cap", o.dim_cap, "Highest face dimension to materialize (default d + 2)");
  cmd->add_option("--model", o.model, "flag or linial_meshulam")->check(CLI::IsMember({"flag", "linial_meshulam"}));
}

void add_output_options(CLI::App* cmd, Common& o) {
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

// Writes to --out or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open " + path + " for writing");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return std::make_unique<std::istringstream>(std::string(std::istreambuf_iterator<char>(std::cin), {}));
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw InputError("cannot open " + path);
  return in;
}

Graph load_or_sample_graph(const Common& o) {
  if (!o.input.empty()) return read_graph(*open_input(o.input));
  return sample_gnp(o.n, o.prob().resolve(o.n, o.d), RngSpec{o.seed, o.stream});
}

// A complex file, a graph file (--graph-input) made into its clique
// complex, or a fresh sample.
SimplicialComplex load_or_sample_complex(const Common& o, bool graph_input, int cap) {
  if (!o.input.empty()) {
    auto in = open_input(o.input);
    if (graph_input) return clique_complex(read_graph(*in), cap);
    return read_complex(*in);
  }
  const double p = o.prob().resolve(o.n, o.d);
  if (o.model_kind() == Model::linial_meshulam) return sample_linial_meshulam(o.n, o.d, p, RngSpec{o.seed, o.stream});
  return sample_flag_complex(o.n, p, cap, RngSpec{o.seed, o.stream});
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0 || hi < lo) {
      throw InputError("grid must look like lo:hi:step or a comma list, got '" + text + "'");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InputError("bad grid value '" + item + "'");
    }
  }
  return out;
}

std::vector<Coefficients> parse_fields(const std::vector<std::string>& names) {
  std::vector<Coefficients> out;
  for (const auto& s : names) {
    if (s == "q" || s == "Q") {
      out.push_back(Coefficients::rationals());
    } else if (s.rfind("gf", 0) == 0) {
      out.push_back(Coefficients::gf(static_cast<std::uint32_t>(std::stoul(s.substr(2)))));
    } else {
      throw InputError("unknown field '" + s + "' (use q, gf2, gf3, ...)");
    }
  }
  return out;
}

Json faces_json(const std::vector<Face>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(std::vector<Vertex>(f.begin(), f.end()));
  return a;
}

int cmd_sample(const Common& o, bool as_graph) {
  Sink sink(o.out);
  if (as_graph) {
    write_graph(sink.get(), load_or_sample_graph(o));
  } else {
    write_complex(sink.get(), load_or_sample_complex(o, false, o.cap()));
  }
  return 0;
}

int cmd_collapse(const Common& o, bool graph_input, bool greedy) {
  // The pipeline needs every clique, so flag inputs are built without a cap.
  const int cap = greedy ? o.cap() : SimplicialComplex::kUnbounded;
  auto x = load_or_sample_complex(o, graph_input, cap);
  CollapseOutcome out = greedy ? greedy_d_collapse(x, o.d, OrderPolicy::random(), o.seed)
                               : almost_d_collapse(x, o.d, o.seed);
  if (!o.trace.empty()) {
    std::ofstream t(o.trace);
    if (!t) throw InputError("cannot open " + o.trace);
    write_trace(t, out.steps);
  }
  std::optional<std::size_t> beta;
  if (out.status != CollapseStatus::stuck) {
    beta = betti_number(x, o.d, Coefficients::rationals());
    if (*beta != out.surviving_crosspolytopes.size()) {
      throw InvariantViolation("beta_d = " + std::to_string(*beta) + " but " +
                           std::to_string(out.surviving_crosspolytopes.size()) + " cross-polytopes survive");
    }
  }
  Sink sink(o.out);
  auto f = out.residual.f_vector();
  if (o.format == "json") {
    Json j;
    j["status"] = to_string(out.status);
    j["steps"] = out.steps.size();
    j["surviving"] = faces_json(out.surviving_crosspolytopes);
    j["residual_f"] = f;
    j["stuck_component"] = out.stuck_component ? Json(*out.stuck_component) : Json(nullptr);
    j["betti_d_q"] = beta ? Json(*beta) : Json(nullptr);
    sink.get() << j.dump(2) << '\n';
  } else {
    sink.get() << "status,steps,surviving,residual_f\n"
               << to_string(out.status) << ',' << out.steps.size() << ',' << out.surviving_crosspolytopes.size() << ',';
    for (std::size_t k = 0; k < f.size(); ++k) sink.get() << (k ? " " : "") << f[k];
    sink.get() << '\n';
  }
  return 0;
}

int cmd_homology(const Common& o, bool graph_input, const std::vector<std::string>& field_names, bool torsion,
                 int export_degree) {
  auto x = load_or_sample_complex(o, graph_input, o.cap());
  auto fields = parse_fields(field_names);
  auto rep = homology_report(x, fields, torsion);
  if (export_degree > 0) {
    std::ofstream t(o.trace.empty() ? "boundary.txt" : o.trace);
    write_triplets(t, boundary_matrix(x, export_degree).matrix);
  }
  Sink sink(o.out);
  if (o.format == "json") {
    Json j;
    j["f"] = x.f_vector();
    j["euler"] = rep.euler;
    j["reliable_through"] = rep.reliable;
    Json betti;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      auto b = rep.betti[i];
      if (static_cast<int>(b.size()) > rep.reliable + 1) b.resize(static_cast<std::size_t>(std::max(rep.reliable + 1, 0)));
      betti[fields[i].to_string()] = b;
    }
    j["betti"] = betti;
    if (torsion) {
      Json t = Json::array();
      for (int k = 0; k <= rep.reliable && k < static_cast<int>(rep.torsion.size()); ++k) {
        Json list = Json::array();
        for (const auto& v : rep.torsion[static_cast<std::size_t>(k)]) list.push_back(v.str());
        t.push_back(list);
      }
      j["torsion"] = t;
    }
    sink.get() << j.dump(2) << '\n';
  } else {
    sink.get() << "field,degree,betti\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      for (int k = 0; k <= rep.reliable && k < static_cast<int>(rep.betti[i].size()); ++k) {
        sink.get() << fields[i].to_string() << ',' << k << ',' << rep.betti[i][static_cast<std::size_t>(k)] << '\n';
      }
    }
    if (torsion) {
      for (int k = 0; k <= rep.reliable && k < static_cast<int>(rep.torsion.size()); ++k) {
        for (const auto& v : rep.torsion[static_cast<std::size_t>(k)]) sink.get() << "Z-torsion," << k << ',' << v.str() << '\n';
      }
    }
  }
  return 0;
}

int cmd_density(const Common& o) {
  auto g = load_or_sample_graph(o);
  auto r = essential_density(g);
  Json j;
  j["rho"] = Json{{"numerator", r.rho.numerator()}, {"denominator", r.rho.denominator()}};
  j["witness"] = r.witness;
  j["strictly_balanced"] = r.strictly_balanced;
  j["below_threshold"] = density_bound_audit(g, o.d);
  const auto t = density_threshold(o.d);
  j["threshold"] = Json{{"numerator", t.numerator()}, {"denominator", t.denominator()}};
  Sink sink(o.out);
  sink.get() << j.dump(2) << '\n';
  return 0;
}

int cmd_census(const Common& o, bool list) {
  auto g = load_or_sample_graph(o);
  auto hits = detect_crosspolytopes(g, o.d);
  std::size_t induced = 0;
  for (const auto& h : hits) induced += h.induced;
  Sink sink(o.out);
  if (o.format == "json") {
    Json j;
    j["d"] = o.d;
    j["embedded"] = hits.size();
    j["induced"] = induced;
    if (list) {
      Json a = Json::array();
      for (const auto& h : hits) {
        Json pairs = Json::array();
        for (auto [u, v] : h.pairs) pairs.push_back({u, v});
        a.push_back(Json{{"pairs", pairs}, {"induced", h.induced}});
      }
      j["copies"] = a;
    }
    sink.get() << j.dump(2) << '\n';
  } else {
    sink.get() << "embedded,induced\n" << hits.size() << ',' << induced << '\n';
  }
  return 0;
}

ExperimentConfig experiment_config(const Common& o, const std::vector<std::string>& observe,
                                   const std::vector<std::string>& field_names, const std::vector<int>& torsion,
                                   bool timing, bool plant) {
  ExperimentConfig cfg;
  cfg.model = o.model_kind();
  cfg.n = o.n;
  cfg.d = o.d;
  cfg.prob = o.prob();
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.dim_cap = o.dim_cap;
  cfg.workers = o.workers;
  if (observe.empty()) {
    cfg.obs = Observables::standard();
  } else {
    for (const auto& name : observe) {
      if (name == "betti") {
        if (cfg.obs.fields.empty()) cfg.obs.fields = {Coefficients::gf(2), Coefficients::rationals()};
      } else if (name == "euler") {
        cfg.obs.euler_check = true;
      } else if (name == "census") {
        cfg.obs.census = true;
      } else if (name == "collapse") {
        cfg.obs.collapse = true;
      } else if (name == "degrees") {
        cfg.obs.face_degrees = true;
      } else if (name == "morse") {
        cfg.obs.morse = true;
      } else if (name == "cycle") {
        cfg.obs.cycle = true;
      } else if (name == "pi1") {
        cfg.obs.pi1 = true;
      } else if (name != "none") {
        throw InputError("unknown observable '" + name + "'");
      }
    }
  }
  if (!field_names.empty()) cfg.obs.fields = parse_fields(field_names);
  cfg.obs.torsion_degrees = torsion;
  cfg.obs.timing = timing;
  cfg.obs.plant_projective_plane = plant;
  return cfg;
}

int cmd_experiment(const ExperimentConfig& cfg, const Common& o) {
  auto res = run_experiment(cfg);
  {
    Sink sink(o.out);
    if (o.format == "json") {
      write_json(sink.get(), res);
    } else {
      write_csv(sink.get(), res);
    }
  }
  for (const auto& r : res.records) {
    if (!r.ok()) std::cerr << "trial failed: " << r.error << '\n';
  }
  if (res.aggregates.violations > 0) {
    for (const auto& r : res.records) {
      for (const auto& v : r.violations) std::cerr << "stream " << r.stream << ": " << v << '\n';
    }
    return kInvariantViolation;
  }
  return 0;
}

int cmd_check_pi1(const Common& o, bool graph_input) {
  auto x = load_or_sample_complex(o, graph_input, std::max(o.cap(), 5));
  auto r = check_pi1_preconditions(x);
  auto tri = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["dimension_at_most_4"] = tri(r.dimension_at_most_4);
  j["crosspolytope_triangles_maximal"] = tri(r.crosspolytope_triangles_maximal);
  j["no_tetrahedron_meets_4simplex_in_triangle"] = tri(r.no_tetrahedron_meets_4simplex_in_triangle);
  j["three_collapsible"] = tri(r.three_collapsible);
  j["bounded_subcomplexes_aspherical"] = tri(r.bounded_subcomplexes_aspherical);
  j["small_subgraphs_sparse"] = tri(r.small_subgraphs_sparse);
  j["density_vertex_bound"] = r.density_vertex_bound;
  j["evaluated_hold"] = r.evaluated_hold();
  j["notes"] = r.notes;
  Sink sink(o.out);
  sink.get() << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random flag complexes: sampling, collapses, homology and Monte Carlo experiments"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);
  Common o;

  auto* sample = app.add_subcommand("sample", "Sample a graph or complex and write it as text");
  add_model_options(sample, o);
  add_output_options(sample, o);
  sample->add_option("--stream", o.stream, "Stream index");
  bool as_graph = false;
  sample->add_flag("--graph", as_graph, "Write the graph instead of the complex");

  bool graph_input = false;
  bool greedy = false;
  auto* collapse = app.add_subcommand("collapse", "Run the almost-d-collapse pipeline");
  add_model_options(collapse, o);
  add_output_options(collapse, o);
  collapse->add_option("--in", o.input, "Input file ('-' for stdin); sampled when absent");
  collapse->add_flag("--graph-input", graph_input, "Input is a graph; its clique complex is used");
  collapse->add_flag("--greedy", greedy, "Plain greedy d-collapse (works on any complex)");
  collapse->add_option("--emit-trace", o.trace, "Write the collapse sequence to this file");
  collapse->add_option("--stream", o.stream, "Stream index");

  std::vector<std::string> fields{"gf2", "q"};
  bool torsion = false;
  int export_degree = 0;
  auto* homology = app.add_subcommand("homology", "Betti numbers and torsion");
  add_model_options(homology, o);
  add_output_options(homology, o);
  homology->add_option("--in", o.input, "Input file ('-' for stdin); sampled when absent");
  homology->add_flag("--graph-input", graph_input, "Input is a graph; its clique complex is used");
  homology->add_option("--field", fields, "Coefficient fields: q, gf2, gf3, ...");
  homology->add_flag("--torsion", torsion, "Integral torsion via Smith normal form");
  homology->add_option("--export-boundary", export_degree, "Write the boundary matrix of this degree as triplets");
  homology->add_option("--emit-trace", o.trace, "File for --export-boundary (default boundary.txt)");
  homology->add_option("--stream", o.stream, "Stream index");

  auto* density = app.add_subcommand("density", "Essential density of a graph (JSON)");
  add_model_options(density, o);
  density->add_option("--out", o.out, "Output file (default stdout)");
  density->add_option("--in", o.input, "Graph file ('-' for stdin); sampled when absent");
  density->add_option("--stream", o.stream, "Stream index");

  bool list = false;
  auto* census = app.add_subcommand("census", "Count cross-polytope subgraphs");
  add_model_options(census, o);
  add_output_options(census, o);
  census->add_option("--in", o.input, "Graph file ('-' for stdin); sampled when absent");
  census->add_flag("--list", list, "List every copy (JSON)");
  census->add_option("--stream", o.stream, "Stream index");

  std::vector<std::string> observe;
  std::vector<int> torsion_degrees;
  bool timing = false;
  bool plant = false;
  auto* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo trials, one CSV row per trial");
  add_model_options(experiment, o);
  add_output_options(experiment, o);
  experiment->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  experiment->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--observe", observe, "betti euler census collapse degrees morse cycle pi1 (default: standard set)");
  experiment->add_option("--field", fields, "Coefficient fields for betti_d");
  experiment->add_option("--torsion-degree", torsion_degrees, "Integral torsion degrees");
  experiment->add_flag("--timing", timing, "Fill wall_ms (makes output run-dependent)");
  experiment->add_flag("--plant", plant, "Append a 6-vertex projective plane to every complex");

  std::string c_grid = "1.0:3.0:0.25";
  auto* scan = app.add_subcommand("scan", "Sweep c and summarize each grid point");
  add_model_options(scan, o);
  add_output_options(scan, o);
  scan->add_option("--trials", o.trials, "Trials per grid point")->check(CLI::PositiveNumber);
  scan->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--c-grid", c_grid, "lo:hi:step or comma list");
  scan->add_option("--observe", observe, "Observables (default: standard set)");

  int degree = 0;
  std::string n_grid;
  std::string torsion_c_grid;
  auto* torsion_cmd = app.add_subcommand("torsion", "Search for integral torsion (JSON)");
  add_model_options(torsion_cmd, o);
  torsion_cmd->add_option("--out", o.out, "Output file (default stdout)");
  torsion_cmd->add_option("--trials", o.trials, "Trials per grid point")->check(CLI::PositiveNumber);
  torsion_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  torsion_cmd->add_option("--degree", degree, "Homology degree (default d - 1)");
  torsion_cmd->add_option("--n-grid", n_grid, "Comma list of vertex counts");
  torsion_cmd->add_option("--c-grid", torsion_c_grid, "lo:hi:step or comma list");
  torsion_cmd->add_flag("--plant", plant, "Append a 6-vertex projective plane to every complex");

  auto* pi1 = app.add_subcommand("check-pi1", "Evaluate the fundamental-group preconditions (JSON)");
  add_model_options(pi1, o);
  pi1->add_option("--out", o.out, "Output file (default stdout)");
  pi1->add_option("--in", o.input, "Input file ('-' for stdin); sampled when absent");
  pi1->add_flag("--graph-input", graph_input, "Input is a graph; its clique complex is used");
  pi1->add_option("--stream", o.stream, "Stream index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*sample) return cmd_sample(o, as_graph);
    if (*collapse) return cmd_collapse(o, graph_input, greedy);
    if (*homology) return cmd_homology(o, graph_input, fields, torsion, export_degree);
    if (*density) return cmd_density(o);
    if (*census) return cmd_census(o, list);
    if (*experiment) return cmd_experiment(experiment_config(o, observe, experiment->count("--field") ? fields : std::vector<std::string>{}, torsion_degrees, timing, plant), o);
    if (*scan) {
      const auto grid = parse_grid(c_grid);
      if (grid.empty()) throw InputError("empty --c-grid");
      Common t = o;
      t.p.reset();
      t.alpha.reset();
      t.c = grid.front();
      auto result = threshold_scan(experiment_config(t, observe, {}, {}, false, false), grid);
      Sink sink(o.out);
      if (o.format == "json") {
        write_scan_json(sink.get(), result);
      } else {
        write_scan_csv(sink.get(), result);
      }
      return 0;
    }
    if (*torsion_cmd) {
      Common t = o;
      if (!t.p && !t.c && !t.alpha) t.c = 1.0;
      auto cfg = experiment_config(t, {"none"}, {}, {}, false, plant);
      const int k = degree > 0 ? degree : std::max(1, o.d - 1);
      std::vector<std::size_t> ns;
      for (double v : parse_grid(n_grid)) ns.push_back(static_cast<std::size_t>(v));
      std::vector<double> cs = parse_grid(torsion_c_grid);
      // Without grids, sweep a small heuristic window below the d-homology
      // threshold.
      if (ns.empty() && o.n == 0) ns = {16, 20, 24};
      if (cs.empty() && !o.p && !o.c && !o.alpha) cs = parse_grid("1.5:2.8:0.1");
      Sink sink(o.out);
      write_torsion_json(sink.get(), torsion_search(cfg, k, ns, cs));
      return 0;
    }
    if (*pi1) return cmd_check_pi1(o, graph_input);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kUsageError;
}
