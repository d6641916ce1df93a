#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "padent/determinant.hpp"
#include "padent/group_ring.hpp"
#include "padent/padic.hpp"

namespace padent {

/// Matrix of x -> x * f* on (R G)^r in the group-element basis, acting on
/// column coordinate vectors: column (i, g) is the image of g in slot i. Since
/// x (fg)* = (x g*) f*, this convention gives rho(fg) = rho(f) rho(g).
template <class C>
DenseMatrix<C> rho_matrix(const RingMatrix<FiniteGroup, C>& f) {
  const FiniteGroup& grp = f.group();
  const std::size_t m = grp.order();
  const std::size_t r = f.size();
  DenseMatrix<C> out(r * m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // (f*)_{ij} = sum_k f_{ji}[k] k^-1
      for (const auto& [k, c] : f(j, i).terms()) {
        const FiniteGroup::element h = grp.inv(k);
        for (FiniteGroup::element g = 0; g < m; ++g) out(j * m + grp.mul(g, h), i * m + g) += c;
      }
    }
  return out;
}

template <class C>
DenseMatrix<C> rho_matrix(const GroupRingElem<FiniteGroup, C>& f) {
  return rho_matrix(RingMatrix<FiniteGroup, C>::scalar(f));
}

/// One quotient's fixed-point count with its p-adic bookkeeping.
struct FixCountRecord {
  GroupDescriptor quotient;
  BigInt index;
  BigInt signed_det;
  BigInt fix_count;
  long p_valuation = 0;
  /// log_p of the unit part of fix_count, in Z_p.
  PadicScalar unit_log = PadicScalar::zero(2, 1);
  /// unit_log / index.
  PadicScalar normalized = PadicScalar::zero(2, 1);
};

struct FixCountOptions {
  std::size_t size_cap = 4096;  // bound on r * |quotient|
};

/// Fills the p-adic fields of a record from an exact determinant.
inline FixCountRecord make_fix_count_record(GroupDescriptor quotient, const BigInt& index, const BigInt& det, long p,
                                            long precision) {
  require(det != 0, ErrorCode::InfiniteFixedPointSet,
          "det rho = 0 over " + quotient.str() + ": the fixed-point set is infinite");
  FixCountRecord rec;
  rec.quotient = std::move(quotient);
  rec.index = index;
  rec.signed_det = det;
  rec.fix_count = abs(det);
  rec.p_valuation = valuation(rec.fix_count, p);
  rec.unit_log = padic_log(padic_make(rec.fix_count, p, precision));
  rec.normalized = padic_div(rec.unit_log, padic_make(index, p, precision));
  return rec;
}

/// |Fix| over the finite quotient on which f already lives.
inline FixCountRecord fix_count_finite(const RingMatrix<FiniteGroup, BigInt>& f, long p, long precision,
                                       const FixCountOptions& opt = {}) {
  const std::size_t dim = f.size() * f.group().order();
  require(dim <= opt.size_cap, ErrorCode::SizeOverflow,
          "rho would be " + std::to_string(dim) + "x" + std::to_string(dim) + ", above the cap " +
              std::to_string(opt.size_cap));
  const BigInt det = det_exact(rho_matrix(f));
  return make_fix_count_record(f.group().descriptor(), BigInt(static_cast<unsigned long>(f.group().order())), det, p,
                               precision);
}

inline FixCountRecord fix_count(const RingMatrix<FreeAbelianGroup, BigInt>& f, const TorusQuotient& q, long p,
                                long precision, const FixCountOptions& opt = {}) {
  return fix_count_finite(reduce_to_quotient(f, q), p, precision, opt);
}

inline FixCountRecord fix_count(const RingMatrix<HeisenbergGroup, BigInt>& f, const HeisenbergQuotient& q, long p,
                                long precision, const FixCountOptions& opt = {}) {
  return fix_count_finite(reduce_to_quotient(f, q), p, precision, opt);
}

namespace detail {

inline std::vector<word::u64> prime_factors(word::u64 n) {
  std::vector<word::u64> out;
  for (word::u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// A primitive L-th root of unity mod q, where L | q - 1.
inline word::u64 root_of_unity(word::u64 L, word::u64 q) {
  const auto factors = prime_factors(L);
  for (word::u64 a = 2; a < q; ++a) {
    const word::u64 w = word::powmod(a, (q - 1) / L, q);
    bool primitive = true;
    for (word::u64 l : factors) primitive = primitive && word::powmod(w, L / l, q) != 1;
    if (primitive) return w;
  }
  fail(ErrorCode::InvalidArgument, "no primitive root of unity found");
}

}  // namespace detail

/// prod over characters zeta of (Z/n1 x ... x Z/nd) of det f(zeta), computed in
/// prime fields F_q with q = 1 mod lcm(n) and reconstructed by CRT. For
/// abelian quotients this is the Frobenius factorization of det rho.
inline BigInt fix_count_char_crt(const RingMatrix<FreeAbelianGroup, BigInt>& f, const std::vector<long>& moduli) {
  const std::size_t d = static_cast<std::size_t>(f.group().dim);
  require(moduli.size() == d, ErrorCode::InvalidQuotient, "one modulus per variable expected");
  for (long n : moduli) require(n >= 1, ErrorCode::InvalidQuotient, "modulus must be >= 1");
  const std::size_t r = f.size();

  word::u64 L = 1;
  std::uint64_t chars = 1;
  for (long n : moduli) {
    L = std::lcm(L, static_cast<word::u64>(n));
    chars *= static_cast<std::uint64_t>(n);
  }
  require(L < (1u << 20), ErrorCode::InvalidQuotient, "modulus lcm too large for word-size prime fields");

  // |det f(zeta)| <= prod_i sqrt(sum_j ||f_ij||_1^2); raise to the number of characters.
  BigInt per_char = 1;
  for (std::size_t i = 0; i < r; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < r; ++j) {
      BigInt l1 = 0;
      for (const auto& [e, c] : f(i, j).terms()) l1 += abs(c);
      s += l1 * l1;
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    if (root * root < s) root += 1;
    per_char *= root;
  }
  if (per_char == 0) return 0;
  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), per_char.get_mpz_t(), chars);

  std::vector<word::u64> primes;
  {
    BigInt prod = 1;
    for (word::u64 k = ((1ull << 31) - 1) / L; prod <= 2 * bound + 1; --k) {
      require(k > 0, ErrorCode::InvalidArgument, "ran out of CRT primes");
      const word::u64 q = k * L + 1;
      if (q < (1ull << 31) && is_prime(static_cast<long>(q))) {
        primes.push_back(q);
        prod *= static_cast<unsigned long>(q);
      }
    }
  }

  std::vector<word::u64> residues(primes.size());
  parallel_for(primes.size(), [&](std::size_t pi) {
    const word::u64 q = primes[pi];
    const word::u64 w = detail::root_of_unity(L, q);
    std::vector<word::u64> wpow(L);
    wpow[0] = 1;
    for (word::u64 k = 1; k < L; ++k) wpow[k] = word::mulmod(wpow[k - 1], w, q);

    word::u64 total = 1;
    std::vector<long> ks(d, 0);
    std::vector<word::u64> a(r * r);
    for (std::uint64_t c = 0; c < chars; ++c) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          word::u64 acc = 0;
          for (const auto& [e, coef] : f(i, j).terms()) {
            word::u64 ex = 0;
            for (std::size_t t = 0; t < d; ++t) {
              const std::int64_t n = moduli[t];
              std::int64_t et = (e[t] % n) * ks[t] % n;
              if (et < 0) et += n;
              ex = (ex + static_cast<word::u64>(et) * (L / static_cast<word::u64>(n))) % L;
            }
            acc = (acc + word::mulmod(word::reduce(coef, q), wpow[ex], q)) % q;
          }
          a[i * r + j] = acc;
        }
      total = word::mulmod(total, det_mod_prime(a, r, q), q);
      for (std::size_t t = d; t-- > 0;) {
        if (++ks[t] < moduli[t]) break;
        ks[t] = 0;
      }
    }
    residues[pi] = total;
  });

  CrtAccumulator crt;
  for (std::size_t k = 0; k < primes.size(); ++k) crt.add(residues[k], primes[k]);
  return crt.symmetric();
}

/// The character route needs an abelian quotient.
[[noreturn]] inline BigInt fix_count_char_crt(const RingMatrix<HeisenbergGroup, BigInt>&, long n) {
  fail(ErrorCode::NonAbelianQuotient,
       "heisenberg(" + std::to_string(n) + ") has no character factorization; use the regular representation");
}

}  // namespace padent
