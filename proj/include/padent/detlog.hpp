#pragma once

#include <optional>
#include <vector>

#include "padent/fixcount.hpp"
#include "padent/group_ring.hpp"
#include "padent/padic.hpp"

namespace padent {

/// f = p^a * c * t^nu * (1 + p g) in c0(Z^d).
struct UnitDecomposition {
  long a = 0;
  PadicScalar c = PadicScalar::zero(2, 1);
  FreeAbelianGroup::element nu;
  /// Z_p coefficients, stored as symmetric residues mod p^coeff_precision.
  LaurentPoly<BigInt> g{FreeAbelianGroup{1}};
  long coeff_precision = 1;

  /// The 1-unit 1 + p g.
  LaurentPoly<BigInt> one_unit(long p) const {
    return LaurentPoly<BigInt>::constant(g.group(), BigInt(1)) + g * BigInt(p);
  }
};

/// Writes a Laurent polynomial with integer coefficients as a c0(Z^d)-unit
/// decomposition. f is a unit iff f / p^a reduces mod p to a monomial.
inline UnitDecomposition c0_unit_normalize(const LaurentPoly<BigInt>& f, long p, long precision) {
  require(!f.is_zero(), ErrorCode::NotACZeroUnit, "zero is not a unit");
  check_prime(p);
  const long a = *min_valuation(f, p);
  const BigInt pa = pow_int(p, static_cast<unsigned long>(a));
  std::optional<FreeAbelianGroup::element> lead;
  BigInt lead_coeff;
  for (const auto& [e, c] : f.terms()) {
    BigInt q = c / pa;
    if (q % p != 0) {
      require(!lead, ErrorCode::NotACZeroUnit,
              "reduction mod p is not a monomial: f vanishes somewhere on the p-adic torus");
      lead = e;
      lead_coeff = q;
    }
  }
  UnitDecomposition out;
  out.a = a;
  out.nu = *lead;
  out.coeff_precision = precision;
  out.c = padic_make(lead_coeff, p, precision);
  const BigInt m = pow_int(p, static_cast<unsigned long>(precision));
  const BigInt cinv = inverse_mod(lead_coeff, m);
  const FreeAbelianGroup& grp = f.group();
  const auto shift = grp.inv(*lead);
  LaurentPoly<BigInt> g(grp);
  for (const auto& [e, c] : f.terms()) {
    if (e == *lead) continue;
    BigInt q = c / pa / p;  // exact: all non-leading coefficients of f/p^a are divisible by p
    g.add_term(grp.mul(e, shift), mod_symmetric(q * cinv, m));
  }
  out.g = std::move(g);
  return out;
}

namespace detail {

/// Smallest nu with nu * v - floor(log_p nu) >= n: every later series term
/// vanishes mod p^n.
inline long series_length(long p, long v, long n) {
  long nu = 1;
  while (nu * v - floor_log(p, nu) < n) ++nu;
  return nu;
}

}  // namespace detail

/// tr_G log F = -sum_nu tr_G((1 - F)^nu) / nu for a 1-unit F in 1 + p M_r(Z_p G).
///
/// Powers are reduced mod p^(n + guard) and vanishing terms are pruned, so the
/// support of (1 - F)^nu stays bounded. For p = 2 and F not in 1 + 4M the
/// value is computed as tr log(F^2) / 2.
template <GroupPolicy G>
PadicScalar tr_log_one_unit(const RingMatrix<G, BigInt>& F, long p, long precision) {
  check_prime(p);
  require(precision >= 1, ErrorCode::InvalidArgument, "precision must be >= 1");
  RingMatrix<G, BigInt> X = RingMatrix<G, BigInt>::identity(F.group(), F.size()) - F;
  const auto vx = min_valuation(X, p);
  if (!vx) return PadicScalar::zero(p, precision);  // F = 1
  require(*vx >= 1, ErrorCode::NotAOneUnit, "F - 1 is not divisible by p");
  if (p == 2 && *vx == 1) {
    PadicScalar twice = tr_log_one_unit(F * F, p, precision + 1);
    return padic_div(twice, padic_make(2, p, precision + 1));
  }
  const long nu_max = detail::series_length(p, *vx, precision);
  const long guard = detail::floor_log(p, nu_max) + 2;
  const BigInt mk = pow_int(p, static_cast<unsigned long>(precision + guard));
  const BigInt mn = pow_int(p, static_cast<unsigned long>(precision));

  X = X.reduced_mod(mk);
  RingMatrix<G, BigInt> power = X;
  BigInt sum = 0;
  for (long nu = 1; nu < nu_max; ++nu) {
    if (nu > 1) power = (power * X).reduced_mod(mk);
    BigInt c = mod(power.trace().constant_term(), mk);
    long k = 0;
    long rest = nu;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    c /= pow_int(p, static_cast<unsigned long>(k));
    c = c * inverse_mod(BigInt(rest), mk);
    sum -= c;
  }
  sum = mod(sum, mn);
  if (sum == 0) return PadicScalar::zero(p, precision);
  const long v = valuation(sum, p);
  return PadicScalar::from_parts(p, v, strip_p(sum, p), precision - v);
}

template <GroupPolicy G>
PadicScalar tr_log_one_unit(const GroupRingElem<G, BigInt>& f, long p, long precision) {
  return tr_log_one_unit(RingMatrix<G, BigInt>::scalar(f), p, precision);
}

/// Commutative determinant over Z[Z^d] by Laplace expansion along rows, with
/// minors memoized by column subset (O(r 2^r) products).
inline LaurentPoly<BigInt> det_laurent_matrix(const RingMatrix<FreeAbelianGroup, BigInt>& F) {
  const std::size_t r = F.size();
  require(r <= 16, ErrorCode::SizeOverflow, "Laplace determinant limited to r <= 16");
  const FreeAbelianGroup& grp = F.group();
  // minors[mask]: determinant of rows r-|mask|..r-1 restricted to columns in mask.
  std::vector<std::optional<LaurentPoly<BigInt>>> minors(std::size_t{1} << r);
  minors[0] = LaurentPoly<BigInt>::constant(grp, BigInt(1));
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t row = r - k;
    LaurentPoly<BigInt> acc(grp);
    int sign = 1;
    for (std::size_t col = 0; col < r; ++col) {
      if (!(mask >> col & 1)) continue;
      const auto& entry = F(row, col);
      const auto& minor = *minors[mask & ~(std::size_t{1} << col)];
      if (!entry.is_zero() && !minor.is_zero()) {
        if (sign > 0)
          acc += entry * minor;
        else
          acc -= entry * minor;
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return *minors.back();
}

/// log_p det_Gamma of a c0(Z^d)-unit: log_p c + tr log(1 + p g). The p^a and
/// t^nu factors contribute nothing.
inline PadicScalar logdet_unit(const LaurentPoly<BigInt>& f, long p, long precision) {
  const UnitDecomposition u = c0_unit_normalize(f, p, precision + 2);
  PadicScalar scalar_part = padic_truncate(padic_log(u.c), precision);
  PadicScalar series_part = tr_log_one_unit(u.one_unit(p), p, precision);
  return padic_add(scalar_part, series_part);
}

inline PadicScalar logdet_unit(const RingMatrix<FreeAbelianGroup, BigInt>& F, long p, long precision) {
  return logdet_unit(det_laurent_matrix(F), p, precision);
}

/// (1/|G|) log_p det rho_f over a finite group, for integer coefficients. The
/// logarithm is taken with v_p(|G|) extra digits so the result carries the
/// full requested precision.
inline PadicScalar logdet_finite(const RingMatrix<FiniteGroup, BigInt>& f, long p, long precision) {
  check_prime(p);
  const BigInt det = det_exact(rho_matrix(f));
  require(det != 0, ErrorCode::SingularRho, "rho_f is singular");
  const BigInt m = static_cast<unsigned long>(f.group().order());
  const long extra = valuation(m, p);
  const PadicScalar l = padic_log(padic_make(det, p, precision + extra));
  return padic_truncate(padic_div(l, padic_make(m, p, precision + extra)), precision);
}

inline PadicScalar logdet_finite(const GroupRingElem<FiniteGroup, BigInt>& f, long p, long precision) {
  return logdet_finite(RingMatrix<FiniteGroup, BigInt>::scalar(f), p, precision);
}

}  // namespace padent
