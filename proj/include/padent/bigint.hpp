#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "padent/error.hpp"

namespace padent {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt pow_int(long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && (exp & 1)) r = -r;
  return r;
}

/// Exponent of p in x. x must be nonzero.
inline long valuation(const BigInt& x, long p) {
  if (x == 0) fail(ErrorCode::ZeroInput, "valuation of zero");
  if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
  BigInt t = x;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

/// x / p^valuation(x).
inline BigInt strip_p(const BigInt& x, long p) {
  BigInt t = x;
  while (t != 0 && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p)))
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
  return t;
}

/// Least nonnegative residue.
inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Residue in (-m/2, m/2].
inline BigInt mod_symmetric(const BigInt& x, const BigInt& m) {
  BigInt r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

/// Inverse of x modulo m; x must be invertible.
inline BigInt inverse_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::NotAUnit, "element not invertible modulo " + m.get_str());
  return r;
}

inline BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  BigInt b = n;
  return mpz_probab_prime_p(b.get_mpz_t(), 30) != 0;
}

inline std::int64_t to_i64(const BigInt& x) { return static_cast<std::int64_t>(x.get_si()); }

/// Number of bits of |x|.
inline std::size_t bit_length(const BigInt& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Word-size modular arithmetic for primes below 2^31, used by the CRT kernels.
namespace word {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 q) { return (a * b) % q; }

inline u64 powmod(u64 b, u64 e, u64 q) {
  u64 r = 1 % q;
  b %= q;
  while (e) {
    if (e & 1) r = mulmod(r, b, q);
    b = mulmod(b, b, q);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 q) { return powmod(a, q - 2, q); }

inline u64 reduce(const BigInt& x, u64 q) {
  return static_cast<u64>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(q)));
}

inline u64 reduce(std::int64_t x, u64 q) {
  std::int64_t r = x % static_cast<std::int64_t>(q);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

}  // namespace word

}  // namespace padent
