#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flaglab/collapse/collapse.hpp"
#include "flaglab/experiment/stats.hpp"
#include "flaglab/homology/homology.hpp"

namespace flaglab {

/// Edge or face probability given directly, as c n^{-1/d}, or as n^{-alpha}.
struct ProbabilitySpec {
  enum class Kind { p, c, alpha };
  Kind kind = Kind::p;
  double value = 0;

  static ProbabilitySpec raw(double p) { return {Kind::p, p}; }
  static ProbabilitySpec scaled(double c) { return {Kind::c, c}; }
  static ProbabilitySpec power(double alpha) { return {Kind::alpha, alpha}; }

  double resolve(std::size_t n, int d) const;
  /// The constant c with p = c n^{-1/d}, whichever form was given.
  double scale(std::size_t n, int d) const;
  std::string to_string() const;  // "p=0.01", "c=1", "alpha=0.5"
};

enum class Model { flag, linial_meshulam };
const char* to_string(Model m);

/// Which measurements a trial takes. Everything is off unless switched on,
/// so acceptance-sized runs pay only for what they read.
struct Observables {
  std::vector<Coefficients> fields;  // beta_d over each
  bool euler_check = false;          // full Betti vectors against the Euler characteristic
  bool census = false;               // cross-polytope copies, embedded and induced
  bool collapse = false;             // almost-d-collapse pipeline
  bool face_degrees = false;         // max (i-1)-face degrees and the c-bounded check
  bool morse = false;                // beta_2 >= f_2 - f_1 - f_3 (d = 2)
  bool cycle = false;                // the 1-skeleton contains a cycle
  bool pi1 = false;                  // fundamental-group preconditions
  std::vector<int> torsion_degrees;  // integral torsion of H_k
  bool plant_projective_plane = false;
  bool timing = false;               // wall_ms; off by default to keep output reproducible

  /// Betti numbers over GF(2) and Q, census, collapse, face degrees, Morse.
  static Observables standard();
};

enum class OutputFormat { csv, json };

struct ExperimentConfig {
  Model model = Model::flag;
  std::size_t n = 0;
  int d = 2;
  ProbabilitySpec prob;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  /// Faces are materialized through this dimension; -1 means d + 2.
  int dim_cap = -1;
  Observables obs;
  std::size_t workers = 1;

  int effective_cap() const { return dim_cap < 0 ? d + 2 : dim_cap; }
  double p() const { return prob.resolve(n, d); }
  /// Throws InputError on an invalid combination.
  void validate() const;
};

struct TrialRecord {
  std::uint64_t stream = 0;
  std::vector<std::size_t> f;  // f_0 .. f_{cap}
  int cap = 0;
  /// beta_d over cfg.obs.fields, in order.
  std::vector<std::size_t> betti_d;
  std::optional<bool> euler_ok;
  std::optional<std::size_t> cp_count, cp_induced;
  std::optional<CollapseStatus> collapse_status;
  std::optional<std::size_t> surviving;
  /// Largest number of i-faces on an (i-1)-face, i = 1 .. max(1, d-1).
  std::vector<std::size_t> max_degree;
  std::optional<bool> c_bounded;
  std::optional<std::int64_t> morse_slack;
  std::optional<bool> has_cycle;
  std::optional<bool> pi1_conditions;
  /// (degree, elementary divisors > 1)
  std::vector<std::pair<int, std::vector<BigInt>>> torsion;
  std::optional<double> wall_ms;
  /// Broken internal invariants (census against Betti number, Morse,
  /// Euler identity); empty on a healthy trial.
  std::vector<std::string> violations;
  /// Set when the trial threw; the other fields are then unset.
  std::string error;

  bool ok() const { return error.empty(); }
  /// Largest torsion divisor, 1 when torsion-free, nullopt when not computed.
  std::optional<BigInt> torsion_max() const;
};

/// Deterministic in (cfg, stream). Component errors are caught and stored
/// in TrialRecord::error with the stream in the message.
TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t stream);

struct Aggregates {
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::vector<double> mean_f;
  std::vector<double> mean_betti_d;  // per field
  std::optional<double> mean_cp, mean_cp_induced;
  std::size_t collapsed_below = 0, almost_collapsed = 0, stuck = 0;
  std::optional<double> cycle_fraction;
  std::optional<double> c_bounded_fraction;
  std::size_t violations = 0;
  std::optional<GofReport> census_gof;  // flag model with census on
  std::optional<BigInt> torsion_max;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // ordered by stream
  Aggregates aggregates;
};

/// Runs streams 0 .. trials-1 on cfg.workers threads; records are merged by
/// stream, so the result does not depend on the worker count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

Aggregates aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

/// One row per trial. Columns: stream, f0..f4, betti_d_gf2, betti_d_q,
/// cp_count, cp_induced, collapse_status, surviving, max_deg_i1.., c_bounded,
/// morse_slack, has_cycle, pi1_ok, torsion_max, wall_ms, error. Cells that
/// were not measured are empty.
void write_csv(std::ostream& out, const ExperimentResult& r);

/// Summary with configuration echo, library version and aggregates; trial
/// records are included when `with_records`.
void write_json(std::ostream& out, const ExperimentResult& r, bool with_records = true);

/// Library version from git describe at build time.
const char* library_version();

}  // namespace flaglab
