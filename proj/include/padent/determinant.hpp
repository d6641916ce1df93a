#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "padent/bigint.hpp"
#include "padent/parallel.hpp"

namespace padent {

/// Dense square matrix, row-major.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = DenseMatrix<BigInt>;

/// Fraction-free (Bareiss) elimination with row pivoting.
inline BigInt det_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  BigInt d = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

/// Product of the Euclidean row norms, each rounded up; bounds |det|.
inline BigInt hadamard_bound(const IntMatrix& m) {
  BigInt bound = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j) * m(i, j);
    if (s == 0) return 0;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    bound *= r;
  }
  return bound;
}

/// Primes just below 2^31, descending. Deterministic and cached.
inline word::u64 crt_prime(std::size_t k) {
  static std::mutex mu;
  static std::vector<word::u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  word::u64 c = primes.empty() ? (1ull << 31) : primes.back();
  while (primes.size() <= k) {
    do {
      --c;
    } while (!is_prime(static_cast<long>(c)));
    primes.push_back(c);
  }
  return primes[k];
}

/// Determinant of a matrix of residues mod a prime q < 2^31. Destroys `a`.
inline word::u64 det_mod_prime(std::vector<word::u64>& a, std::size_t n, word::u64 q) {
  word::u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = (q - det) % q;
    }
    const word::u64 pivot = a[k * n + k];
    det = word::mulmod(det, pivot, q);
    const word::u64 inv = word::invmod(pivot, q);
    for (std::size_t i = k + 1; i < n; ++i) {
      word::u64 f = a[i * n + k];
      if (f == 0) continue;
      f = word::mulmod(f, inv, q);
      const word::u64 nf = q - f;
      word::u64* ri = &a[i * n];
      const word::u64* rk = &a[k * n];
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = (ri[j] + nf * rk[j]) % q;
      ri[k] = 0;
    }
  }
  return det;
}

/// Reconstructs the integer in (-M/2, M/2] from residues modulo distinct primes.
class CrtAccumulator {
 public:
  void add(word::u64 residue, word::u64 q) {
    // x' = x + M * ((r - x) * M^-1 mod q)
    const word::u64 xm = word::reduce(value_, q);
    const word::u64 mm = word::reduce(modulus_, q);
    const word::u64 diff = (residue + q - xm) % q;
    const word::u64 t = word::mulmod(diff, word::invmod(mm, q), q);
    value_ += modulus_ * BigInt(static_cast<unsigned long>(t));
    modulus_ *= static_cast<unsigned long>(q);
  }
  const BigInt& modulus() const { return modulus_; }
  BigInt symmetric() const { return mod_symmetric(value_, modulus_); }

 private:
  BigInt value_ = 0;
  BigInt modulus_ = 1;
};

/// Number of CRT primes (taken from crt_prime(0), crt_prime(1), ...) whose
/// product exceeds 2 * bound.
inline std::size_t crt_primes_needed(const BigInt& bound) {
  BigInt target = 2 * bound + 1;
  BigInt prod = 1;
  std::size_t k = 0;
  while (prod <= target) prod *= static_cast<unsigned long>(crt_prime(k++));
  return std::max<std::size_t>(k, 1);
}

/// Hadamard bound, determinants modulo word-size primes (in parallel), CRT.
inline BigInt det_modular(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  const BigInt bound = hadamard_bound(m);
  if (bound == 0) return 0;
  const std::size_t count = crt_primes_needed(bound);
  std::vector<word::u64> primes(count);
  for (std::size_t k = 0; k < count; ++k) primes[k] = crt_prime(k);
  std::vector<word::u64> residues(count);
  parallel_for(count, [&](std::size_t k) {
    const word::u64 q = primes[k];
    std::vector<word::u64> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = word::reduce(m(i, j), q);
    residues[k] = det_mod_prime(a, n, q);
  });
  CrtAccumulator crt;
  for (std::size_t k = 0; k < count; ++k) crt.add(residues[k], primes[k]);
  return crt.symmetric();
}

/// Exact integer determinant: Bareiss below size 64, modular/CRT from 64 up.
inline BigInt det_exact(const IntMatrix& m) {
  if (m.size() < 64) return det_bareiss(m);
  return det_modular(m);
}

}  // namespace padent
