#include "flaglab/experiment/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "flaglab/topology/graph.hpp"

namespace flaglab {

namespace {

double poisson_pmf(std::size_t k, double mean) {
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

GofReport poisson_gof(const std::vector<std::size_t>& histogram, double mean) {
  if (!(mean >= 0.0)) throw InputError("poisson_gof: mean must be nonnegative");
  const std::size_t total = std::accumulate(histogram.begin(), histogram.end(), std::size_t{0});
  if (total == 0) throw InputError("poisson_gof: empty histogram");

  GofReport r;
  r.sample_size = total;
  r.target_mean = mean;
  const double n = static_cast<double>(total);
  double s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < histogram.size(); ++k) {
    s1 += static_cast<double>(k) * static_cast<double>(histogram[k]);
    s2 += static_cast<double>(k) * static_cast<double>(k) * static_cast<double>(histogram[k]);
  }
  r.mean = s1 / n;
  r.variance = total > 1 ? (s2 - n * r.mean * r.mean) / (n - 1) : 0.0;

  // Raw bins {0, 1, 2, >=3}.
  std::vector<double> obs(4, 0), exp(4, 0);
  for (std::size_t k = 0; k < histogram.size(); ++k) obs[std::min<std::size_t>(k, 3)] += static_cast<double>(histogram[k]);
  double head = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    exp[k] = n * poisson_pmf(k, mean);
    head += poisson_pmf(k, mean);
  }
  exp[3] = n * std::max(0.0, 1.0 - head);

  double acc_o = 0, acc_e = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    acc_o += obs[k];
    acc_e += exp[k];
    if (acc_e >= 5.0) {
      r.observed.push_back(static_cast<std::size_t>(acc_o));
      r.expected.push_back(acc_e);
      acc_o = acc_e = 0;
    }
  }
  if (acc_e > 0 || acc_o > 0) {
    if (r.expected.empty()) {
      r.observed.push_back(static_cast<std::size_t>(acc_o));
      r.expected.push_back(acc_e);
    } else {
      r.observed.back() += static_cast<std::size_t>(acc_o);
      r.expected.back() += acc_e;
    }
  }

  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    const double o = static_cast<double>(r.observed[i]);
    if (r.expected[i] > 0) {
      r.chi_square += (o - r.expected[i]) * (o - r.expected[i]) / r.expected[i];
    } else if (o > 0) {
      r.chi_square = std::numeric_limits<double>::infinity();
    }
  }
  r.degrees_of_freedom = r.expected.size() - 1;
  if (r.degrees_of_freedom == 0) {
    r.p_value = r.chi_square == 0 ? 1.0 : 0.0;
  } else if (std::isinf(r.chi_square)) {
    r.p_value = 0.0;
  } else {
    boost::math::chi_squared dist(static_cast<double>(r.degrees_of_freedom));
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.chi_square));
  }

  double tv = 0, covered = 0;
  for (std::size_t k = 0; k < histogram.size(); ++k) {
    const double pk = poisson_pmf(k, mean);
    covered += pk;
    tv += std::abs(static_cast<double>(histogram[k]) / n - pk);
  }
  tv += std::max(0.0, 1.0 - covered);
  r.total_variation = tv / 2;
  return r;
}

}  // namespace flaglab
