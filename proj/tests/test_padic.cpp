#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "padent/padic.hpp"

using namespace padent;

TEST(PadicMake, InverseOfThreeModSixteen) {
  const auto x = padic_make(1, 3, 2, 4);
  EXPECT_EQ(x.valuation(), 0);
  EXPECT_EQ(x.unit(), 11);
  EXPECT_EQ(x.precision(), 4);
}

TEST(PadicMake, PurePrimePower) {
  const auto x = padic_make(8, 1, 2, 4);
  EXPECT_EQ(x.valuation(), 3);
  EXPECT_EQ(x.unit(), 1);
}

TEST(PadicMake, ZeroToPrecision) {
  const auto x = padic_make(0, 5, 7, 3);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x.absolute_precision(), 3);
}

TEST(PadicMake, RejectsBadInput) {
  EXPECT_THROW(padic_make(1, 0, 3, 4), Error);
  EXPECT_THROW(padic_make(1, 1, 4, 4), Error);
  EXPECT_THROW(PadicScalar::from_parts(3, 0, 6, 2), Error);
}

TEST(PadicArith, MultiplicationExamples) {
  EXPECT_EQ(padic_make(3, 2, 4) * padic_make(11, 2, 4), padic_make(1, 2, 4));
  const auto a = padic_make(7, 5, 6);
  EXPECT_EQ(a * padic_make(1, 5, 6), a);
  const auto pp = padic_make(5, 5, 6) * padic_make(5, 5, 6);
  EXPECT_EQ(pp.valuation(), 2);
  EXPECT_EQ(pp.unit(), 1);
}

TEST(PadicArith, InverseExamples) {
  EXPECT_EQ(padic_inv(padic_make(3, 2, 4)).unit(), 11);
  EXPECT_EQ(padic_inv(padic_make(1, 2, 4)), padic_make(1, 2, 4));
  const auto x = padic_inv(padic_make(9, 3, 5));
  EXPECT_EQ(x.valuation(), -2);
  EXPECT_EQ(x.unit(), 1);
  EXPECT_THROW(padic_inv(PadicScalar::zero(3, 4)), Error);
}

TEST(PadicArith, CancellationLosesPrecision) {
  // 1 + 8 and 1 agree mod 8: the difference is only known to be 8 + O(2^4).
  const auto d = padic_make(9, 2, 4) - padic_make(1, 2, 4);
  EXPECT_EQ(d.valuation(), 3);
  EXPECT_EQ(d.absolute_precision(), 4);
  const auto z = padic_make(5, 2, 3) - padic_make(13, 2, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.absolute_precision(), 3);
}

TEST(PadicArith, AgainstRationalArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 50);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 200; ++t) {
      BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      if (a == 0 || b == 0) continue;
      auto mk = [&](const BigRational& q) { return padic_make(q.get_num(), q.get_den(), p, 10); };
      const auto pa = mk(a), pb = mk(b);
      const auto prod = pa * pb;
      EXPECT_GE(agreement(prod, mk(a * b)), prod.absolute_precision());
      const auto quot = pa / pb;
      EXPECT_GE(agreement(quot, mk(a / b)), quot.absolute_precision());
      if (a + b != 0) {
        const auto sum = pa + pb;
        EXPECT_GE(agreement(sum, mk(a + b)), sum.absolute_precision());
      }
    }
  }
}

TEST(PadicCompare, IndistinguishableIsAnError) {
  const auto a = padic_make(1, 3, 2), b = padic_make(10, 3, 4);
  EXPECT_TRUE(congruent(a, b, 2));
  EXPECT_THROW(congruent(a, b, 3), Error);
}

TEST(PadicTeichmuller, Examples) {
  EXPECT_EQ(padic_teichmuller(padic_make(1, 5, 6)), padic_make(1, 5, 6));
  EXPECT_EQ(padic_teichmuller(padic_make(3, 2, 6)), padic_make(-1, 2, 6));
}

TEST(PadicTeichmuller, IsARootOfUnityLiftingTheResidue) {
  for (long p : {3L, 5L, 7L, 11L})
    for (long a = 1; a < p; ++a) {
      const auto w = padic_teichmuller(padic_make(a, p, 8));
      EXPECT_TRUE(congruent(w, padic_make(a, p, 8), 1));
      auto power = padic_make(1, p, 8);
      for (long k = 0; k < p - 1; ++k) power = power * w;
      EXPECT_EQ(power, padic_make(1, p, 8)) << "p=" << p << " a=" << a;
    }
}

TEST(PadicLog, BranchNormalization) {
  for (long p : {2L, 3L, 5L, 7L}) {
    EXPECT_TRUE(padic_log(padic_make(p, p, 8)).is_zero());
    EXPECT_TRUE(padic_log(padic_make(-1, p, 8)).is_zero());
  }
}

TEST(PadicLog, LogThreeOfFour) {
  const auto l = padic_log(padic_make(4, 3, 3));
  EXPECT_EQ(l.residue(), 21);
  // Exact partial sums 3 - 9/2 + 27/3 - ... reduced mod 27.
  EXPECT_EQ(oracle::rational_mod(oracle::log_series(BigRational(3), 12), 3, 3), 21);
}

TEST(PadicLog, MatchesRationalSeriesOnOneUnits) {
  for (long p : {2L, 3L, 5L}) {
    const long n = 12;
    const long v = p == 2 ? 2 : 1;
    for (long a = -30; a <= 30; ++a) {
      const BigRational x = BigRational(pow_int(p, static_cast<unsigned long>(v)) * a);
      const auto lib = padic_log(padic_make(BigInt(1) + x.get_num(), p, n));
      // Terms beyond 4n have valuation > n.
      const BigInt ref = oracle::rational_mod(oracle::log_series(x, 4 * n), p, n);
      EXPECT_EQ(mod(lib.residue(), pow_int(p, n)), ref) << "p=" << p << " a=" << a;
    }
  }
}

TEST(PadicLog, TwoAdicUnitsUseTheSquare) {
  // log_2 3 = (1/2) log_2 9 = (1/2) log(1 + 8).
  const long n = 10;
  const auto lib = padic_log(padic_make(3, 2, n));
  const BigRational half = oracle::log_series(BigRational(8), 4 * n) / BigRational(2);
  EXPECT_EQ(mod(lib.residue(), pow_int(2, n)), oracle::rational_mod(half, 2, n));
}

TEST(PadicLog, IsAHomomorphism) {
  for (long p : {2L, 3L, 5L})
    for (long a = 1; a < 40; ++a)
      for (long b = 1; b < 40; b += 7) {
        const auto lhs = padic_log(padic_make(a * b, p, 9));
        const auto rhs = padic_log(padic_make(a, p, 9)) + padic_log(padic_make(b, p, 9));
        EXPECT_GE(agreement(lhs, rhs), 9) << p << " " << a << " " << b;
      }
}

TEST(PadicSqrt, Examples) {
  EXPECT_EQ(padic_sqrt(padic_make(1, 3, 5)), padic_make(1, 3, 5));
  EXPECT_EQ(padic_sqrt(padic_make(9, 7, 5)), padic_make(3, 7, 5));
  EXPECT_THROW(padic_sqrt(padic_make(2, 3, 5)), Error);
}

TEST(PadicSqrt, SquaresBack) {
  for (long p : {2L, 3L, 5L, 7L})
    for (long a = -60; a <= 60; ++a) {
      if (a == 0) continue;
      try {
        const auto x = padic_make(a, p, 12);
        const auto r = padic_sqrt(x);
        const auto sq = r * r;
        EXPECT_GE(agreement(sq, x), sq.absolute_precision()) << p << " " << a;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotASquare);
      }
    }
}

TEST(PadicSqrt, MinusFifteenInZ2) {
  // The root congruent to 1 mod 4.
  const auto s = padic_sqrt(padic_make(-15, 2, 12));
  EXPECT_EQ(mod(s.residue(), BigInt(4)), 1);
  EXPECT_GE(agreement(s * s, padic_make(-15, 2, 12)), 10);
}

TEST(PadicDigits, Rendering) {
  // 21 = 7 * 3 carries three digits after the leading one: 0210 mod 3^4.
  EXPECT_EQ(padic_make(21, 3, 3).digits(), "0210");
  EXPECT_EQ(padic_make(7, 3, 3).digits(), "021");
  EXPECT_EQ(padic_make(1, 2, 2, 3).digits(), "00.1");
}
