#pragma once

#include <cstddef>
#include <vector>

namespace flaglab {

struct GofReport {
  std::size_t sample_size = 0;
  double mean = 0;
  double variance = 0;
  double target_mean = 0;
  /// Bins {0, 1, 2, >=3} after merging those with expected count < 5 into
  /// their right neighbour (the last one merges left).
  std::vector<std::size_t> observed;
  std::vector<double> expected;
  double chi_square = 0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1;
  double total_variation = 0;
};

/// histogram[k] = number of samples equal to k. Throws InputError on a
/// negative mean or an empty histogram.
GofReport poisson_gof(const std::vector<std::size_t>& histogram, double mean);

}  // namespace flaglab
