#pragma once

// Reference computations for the tests. Each one takes a different route from
// the library: permutation expansion, rational elimination, exact rational
// series. They are slow and only meant for small inputs.

#include <algorithm>
#include <numeric>
#include <vector>

#include "padent/bigint.hpp"
#include "padent/determinant.hpp"
#include "padent/mahler.hpp"

namespace oracle {

using padent::BigInt;
using padent::BigRational;

/// Determinant by summing over all permutations (n <= 8).
inline BigInt leibniz_det(const padent::IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Determinant by Gaussian elimination over Q.
inline BigRational rational_det(std::vector<std::vector<BigRational>> a) {
  const std::size_t n = a.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

/// Res(A, B) from the Sylvester matrix; coefficients low to high.
inline BigInt resultant(const padent::UPoly& A, const padent::UPoly& B) {
  const std::size_t m = A.size() - 1, n = B.size() - 1;
  std::vector<std::vector<BigRational>> s(m + n, std::vector<BigRational>(m + n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = A[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = B[n - k];
  const BigRational d = rational_det(std::move(s));
  return d.get_num();
}

/// |prod over n-th roots of unity of f(zeta)| = |Res(T^n - 1, f)|.
inline BigInt cyclic_fix_count(const padent::UPoly& f, long n) {
  padent::UPoly tn(static_cast<std::size_t>(n) + 1, BigInt(0));
  tn.front() = -1;
  tn.back() = 1;
  return abs(resultant(tn, f));
}

/// q mod p^n for a rational q with v_p(q) >= 0.
inline BigInt rational_mod(const BigRational& q, long p, long n) {
  const BigInt m = padent::pow_int(p, static_cast<unsigned long>(n));
  return padent::mod(BigInt(q.get_num()) * padent::inverse_mod(BigInt(q.get_den()), m), m);
}

/// sum_{k=1}^{terms} (-1)^{k+1} x^k / k, exactly.
inline BigRational log_series(const BigRational& x, long terms) {
  BigRational sum = 0, power = 1;
  for (long k = 1; k <= terms; ++k) {
    power *= x;
    BigRational term = power / BigRational(k);
    sum += k % 2 ? term : BigRational(-term);
  }
  return sum;
}

/// binom(1/2, k), exactly.
inline BigRational half_binomial(long k) {
  BigRational b = 1;
  for (long i = 0; i < k; ++i) b *= (BigRational(1, 2) - i) / BigRational(i + 1);
  return b;
}

}  // namespace oracle
