#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flaglab/homology/linalg.hpp"
#include "flaglab/topology/complex.hpp"

namespace flaglab {

/// Coefficient field: GF(p) for a prime p < 2^26, or the rationals.
struct Coefficients {
  enum class Kind { prime_field, rationals };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static Coefficients gf(std::uint32_t p);
  static Coefficients rationals() { return {}; }
  std::string to_string() const;  // "GF(2)", "Q"
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Rank of a boundary matrix over the given field.
std::size_t rank_over(const IntMatrix& m, const Coefficients& coeff);

/// Highest degree whose homology is fully determined by the materialized
/// faces: the dimension of an untruncated complex, dim_cap - 1 otherwise.
int reliable_degree(const SimplicialComplex& x);

/// beta_k = nullity(d_k) - rank(d_{k+1}). Throws InputError when the
/// complex is truncated and k > reliable_degree(x).
std::size_t betti_number(const SimplicialComplex& x, int k, const Coefficients& coeff);

/// beta_0 .. beta_{reliable_degree(x)}.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& x, const Coefficients& coeff);

/// Integral homology in one degree: free rank and elementary divisors > 1.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  /// "0", "Z^2", "Z/2", "Z + Z/2 + Z/4".
  std::string to_string() const;
};

/// Same degree rule as betti_number.
HomologyGroup homology_with_torsion(const SimplicialComplex& x, int k);

struct HomologyReport {
  std::vector<Coefficients> fields;
  /// betti[i][k]: degree k over fields[i], for every materialized degree of
  /// the complex as given (the top one is meaningful only up to reliable).
  std::vector<std::vector<std::size_t>> betti;
  /// torsion[k]: elementary divisors > 1 of H_k(x; Z).
  std::vector<std::vector<BigInt>> torsion;
  std::int64_t euler = 0;
  int reliable = -1;
};

/// Betti numbers over each field and integral torsion in every degree of
/// the materialized complex. Smith forms are skipped when with_torsion is
/// false.
HomologyReport homology_report(const SimplicialComplex& x, const std::vector<Coefficients>& fields,
                               bool with_torsion = true);

/// Alternating sum of the face counts.
std::int64_t euler_characteristic(const SimplicialComplex& x);

/// beta_2 >= f_2 - f_1 - f_3 over the rationals.
struct MorseReport {
  std::size_t beta2 = 0;
  std::int64_t lower_bound = 0;
  bool holds = true;
};

/// Requires a cap of at least 3 (or an unbounded complex).
MorseReport morse_inequality_check(const SimplicialComplex& x);

}  // namespace flaglab
