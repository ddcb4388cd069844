#include "flaglab/homology/homology.hpp"

#include <algorithm>

#include "flaglab/simd/kernels.hpp"

namespace flaglab {

Coefficients Coefficients::gf(std::uint32_t p) {
  if (p < 2 || p >= simd::kMaxModulus) throw InputError("field characteristic out of range");
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }
  Coefficients c;
  c.kind = Kind::prime_field;
  c.p = p;
  return c;
}

std::string Coefficients::to_string() const {
  return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

std::size_t rank_over(const IntMatrix& m, const Coefficients& coeff) {
  if (m.nnz() == 0) return 0;
  if (coeff.kind == Coefficients::Kind::rationals) return rank_rational(m);
  return rank_mod(m, coeff.p);
}

namespace {

// d_k, or the zero map when there are no k-faces.
IntMatrix boundary_or_zero(const SimplicialComplex& x, int k) {
  if (k > x.dimension()) {
    IntMatrix m;
    m.rows = x.face_count(k - 1);
    m.col_start.assign(1, 0);
    return m;
  }
  return boundary_matrix(x, k).matrix;
}

void require_reliable(const SimplicialComplex& x, int k) {
  if (k < 0) throw InputError("homology degree must be nonnegative");
  if (x.truncated() && k > reliable_degree(x)) {
    throw InputError("degree " + std::to_string(k) + " needs faces of dimension " + std::to_string(k + 1) +
                     ", beyond the materialized cap " + std::to_string(x.dim_cap()));
  }
}

std::vector<BigInt> nontrivial(std::vector<BigInt> inv) {
  inv.erase(std::remove_if(inv.begin(), inv.end(), [](const BigInt& v) { return v == 1; }), inv.end());
  return inv;
}

}  // namespace

int reliable_degree(const SimplicialComplex& x) {
  return x.truncated() ? x.dim_cap() - 1 : std::max(x.dimension(), x.vertex_count() > 0 ? 0 : -1);
}

std::size_t betti_number(const SimplicialComplex& x, int k, const Coefficients& coeff) {
  require_reliable(x, k);
  const std::size_t fk = x.face_count(k);
  const std::size_t down = k >= 1 ? rank_over(boundary_or_zero(x, k), coeff) : 0;
  const std::size_t up = rank_over(boundary_or_zero(x, k + 1), coeff);
  return fk - down - up;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& x, const Coefficients& coeff) {
  const int top = reliable_degree(x);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top + 2, 1)), 0);
  for (int k = 1; k <= top + 1; ++k) ranks[static_cast<std::size_t>(k)] = rank_over(boundary_or_zero(x, k), coeff);
  std::vector<std::size_t> betti;
  for (int k = 0; k <= top; ++k) {
    betti.push_back(x.face_count(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
  }
  return betti;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

HomologyGroup homology_with_torsion(const SimplicialComplex& x, int k) {
  require_reliable(x, k);
  const std::size_t down = k >= 1 ? smith_invariants(boundary_or_zero(x, k)).size() : 0;
  auto up = smith_invariants(boundary_or_zero(x, k + 1));
  HomologyGroup h;
  h.rank = x.face_count(k) - down - up.size();
  h.torsion = nontrivial(std::move(up));
  return h;
}

HomologyReport homology_report(const SimplicialComplex& x, const std::vector<Coefficients>& fields,
                               bool with_torsion) {
  HomologyReport r;
  r.fields = fields;
  r.euler = euler_characteristic(x);
  r.reliable = reliable_degree(x);
  const int top = x.dimension();
  std::vector<IntMatrix> d(static_cast<std::size_t>(std::max(top + 2, 1)));
  for (int k = 1; k <= top; ++k) d[static_cast<std::size_t>(k)] = boundary_or_zero(x, k);
  for (const auto& f : fields) {
    std::vector<std::size_t> ranks(d.size() + 1, 0);
    for (int k = 1; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = rank_over(d[static_cast<std::size_t>(k)], f);
    std::vector<std::size_t> betti;
    for (int k = 0; k <= top; ++k) {
      betti.push_back(x.face_count(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
    }
    r.betti.push_back(std::move(betti));
  }
  if (with_torsion) {
    r.torsion.assign(static_cast<std::size_t>(std::max(top + 1, 0)), {});
    for (int k = 1; k <= top; ++k) {
      r.torsion[static_cast<std::size_t>(k - 1)] = nontrivial(smith_invariants(d[static_cast<std::size_t>(k)]));
    }
  }
  return r;
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
  std::int64_t chi = 0;
  for (int k = 0; k <= x.dimension(); ++k) {
    const auto f = static_cast<std::int64_t>(x.face_count(k));
    chi += k % 2 == 0 ? f : -f;
  }
  return chi;
}

MorseReport morse_inequality_check(const SimplicialComplex& x) {
  if (x.bounded() && x.dim_cap() < 3) throw InputError("morse_inequality_check: needs faces up to dimension 3");
  MorseReport r;
  r.lower_bound = static_cast<std::int64_t>(x.face_count(2)) - static_cast<std::int64_t>(x.face_count(1)) -
                  static_cast<std::int64_t>(x.face_count(3));
  r.beta2 = x.face_count(2) - rank_over(boundary_or_zero(x, 2), Coefficients::rationals()) -
            rank_over(boundary_or_zero(x, 3), Coefficients::rationals());
  r.holds = static_cast<std::int64_t>(r.beta2) >= r.lower_bound;
  return r;
}

}  // namespace flaglab
