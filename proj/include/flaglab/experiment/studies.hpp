#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flaglab/experiment/experiment.hpp"

namespace flaglab {

struct ScanRow {
  double c = 0;
  double p = 0;
  std::size_t trials = 0;  // successful trials
  std::optional<double> almost_collapsible;  // collapsed below d or almost collapsed
  std::optional<double> mean_betti_d;        // over the first configured field
  std::optional<double> mean_cp;
  std::optional<double> betti_normalized;    // mean_betti_d / n^{(d+1)/2}
  std::optional<double> cycle_fraction;
  std::optional<double> cycle_target;        // limiting cycle probability, d = 1 and c < 1
  std::string note;                          // tabulated constants near this c
};

struct ScanResult {
  ExperimentConfig base;
  std::vector<ScanRow> rows;
};

/// Runs `base` once per c in the grid (p = c n^{-1/d}), reusing the same
/// streams at every c. The grid must be strictly increasing. Rows nearest to
/// tabulated gamma_d and c_d are annotated.
ScanResult threshold_scan(const ExperimentConfig& base, const std::vector<double>& c_grid);

void write_scan_csv(std::ostream& out, const ScanResult& s);
void write_scan_json(std::ostream& out, const ScanResult& s);

struct TorsionHit {
  std::size_t n = 0;
  double c = 0;
  double p = 0;
  std::uint64_t stream = 0;
  std::vector<BigInt> divisors;  // elementary divisors > 1 of H_k
};

struct TorsionReport {
  int degree = 0;
  std::size_t trials_run = 0;
  std::size_t failures = 0;
  std::vector<TorsionHit> hits;  // trials with nontrivial torsion
  /// Largest divisor seen and the first grid point where it appeared.
  std::optional<TorsionHit> largest;
};

/// Integral torsion of H_k over every (n, c) pair of the grids, base.trials
/// trials each. Empty grids fall back to base.n and base.prob. There is no
/// known window where torsion is likely, so an empty report is a normal
/// outcome.
TorsionReport torsion_search(const ExperimentConfig& base, int k, const std::vector<std::size_t>& n_grid,
                             const std::vector<double>& c_grid);

void write_torsion_json(std::ostream& out, const TorsionReport& t);

}  // namespace flaglab
