#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "padent/determinant.hpp"

using namespace padent;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Determinant, Examples) {
  const auto m = from_rows({{4, -1}, {-1, 4}});
  EXPECT_EQ(det_bareiss(m), 15);
  EXPECT_EQ(det_modular(m), 15);
  EXPECT_EQ(det_exact(IntMatrix::identity(7)), 1);
  const auto rep = from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
  EXPECT_EQ(det_exact(rep), 0);
  EXPECT_EQ(det_modular(rep), 0);
}

TEST(Determinant, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto m = random_matrix(rng, n, 30);
      const BigInt ref = oracle::leibniz_det(m);
      EXPECT_EQ(det_bareiss(m), ref);
      EXPECT_EQ(det_modular(m), ref);
    }
}

TEST(Determinant, BareissAndModularAgreeOnLargerMatrices) {
  std::mt19937_64 rng(22);
  for (std::size_t n : {10u, 25u, 40u, 70u}) {
    const auto m = random_matrix(rng, n, 1000);
    EXPECT_EQ(det_bareiss(m), det_modular(m)) << n;
  }
}

TEST(Determinant, ZeroPivotColumns) {
  const auto m = from_rows({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}});
  EXPECT_EQ(det_exact(m), -6);
  EXPECT_EQ(det_modular(m), -6);
}

TEST(Determinant, HadamardBoundDominates) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 6, 100);
    EXPECT_LE(abs(det_bareiss(m)), hadamard_bound(m));
  }
}

TEST(Crt, ReconstructsSignedValues) {
  for (long v : {0L, 1L, -1L, 123456789L, -987654321L}) {
    CrtAccumulator crt;
    for (std::size_t k = 0; k < 3; ++k) {
      const word::u64 q = crt_prime(k);
      crt.add(word::reduce(BigInt(v), q), q);
    }
    EXPECT_EQ(crt.symmetric(), v);
  }
}

TEST(Crt, PrimesAreDistinctPrimes) {
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_TRUE(is_prime(static_cast<long>(crt_prime(k))));
    if (k) {
      EXPECT_LT(crt_prime(k), crt_prime(k - 1));
    }
  }
}
