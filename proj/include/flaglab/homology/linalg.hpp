#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flaglab/homology/boundary.hpp"

namespace flaglab {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Primes below 2^26 used for rational ranks.
inline constexpr std::uint32_t kRankPrimeA = 67108859;
inline constexpr std::uint32_t kRankPrimeB = 67108837;

std::size_t rank_gf2(const IntMatrix& m);
/// p must be a prime below 2^26.
std::size_t rank_mod(const IntMatrix& m, std::uint32_t p);
/// Rank over the rationals: ranks modulo two large primes, and the exact
/// integer rank from Smith normal form when they disagree.
std::size_t rank_rational(const IntMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... (ones included). Unit pivots are
/// eliminated sparsely; the rest is reduced densely with arbitrary precision.
std::vector<BigInt> smith_invariants(const IntMatrix& m);

/// Dense Smith normal form by repeated pivoting on a smallest nonzero entry.
std::vector<BigInt> smith_invariants_dense(BigMatrix a);

/// u * m * v = d with u, v unimodular and d diagonal in Smith form.
struct SmithDecomposition {
  BigMatrix u, d, v;
};
SmithDecomposition smith_decompose(const BigMatrix& m);

BigMatrix to_big(const IntMatrix& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
/// Determinant by fraction-free elimination.
BigInt determinant(BigMatrix a);

}  // namespace flaglab
