#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padent/detlog.hpp"
#include "padent/parse.hpp"
#include "padent/selftest.hpp"

using namespace padent;

namespace {

/// -sum_{k>=1} p^(2k) binom(2k, k) / (2k): the trace-log of 1 + p(t + 1/t),
/// whose odd powers have no constant term.
BigInt central_binomial_oracle(long p, long n) {
  BigRational sum = 0;
  BigInt binom = 1;  // binom(2k, k)
  for (long k = 1; k <= 6 * n; ++k) {
    binom = binom * (2 * k) * (2 * k - 1) / (k * k);
    BigRational term(pow_int(p, static_cast<unsigned long>(2 * k)) * binom, BigInt(2 * k));
    term.canonicalize();
    sum -= term;
  }
  return oracle::rational_mod(sum, p, n);
}

/// Determinant of a Laurent matrix by permutation expansion.
LaurentPoly<BigInt> leibniz(const RingMatrix<FreeAbelianGroup, BigInt>& F) {
  const std::size_t n = F.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly<BigInt> total(F.group());
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    auto term = LaurentPoly<BigInt>::constant(F.group(), BigInt(inv % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) term = term * F(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(UnitNormalize, PaperPolynomialAtTwo) {
  const auto u = c0_unit_normalize(parse_poly("2*t^2 - t + 2"), 2, 8);
  EXPECT_EQ(u.a, 0);
  EXPECT_EQ(u.c, padic_make(-1, 2, 8));
  EXPECT_EQ(u.nu, (FreeAbelianGroup::element{1}));
  EXPECT_EQ(u.g, parse_poly("-t - t^-1"));
  // Re-expansion: c t^nu (1 + p g) = f.
  EXPECT_EQ(parse_poly("-t") * u.one_unit(2), parse_poly("2*t^2 - t + 2"));
}

TEST(UnitNormalize, RefusesNonUnits) {
  try {
    c0_unit_normalize(parse_poly("2*t^2 - t + 2"), 3, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACZeroUnit);
  }
  EXPECT_THROW(c0_unit_normalize(LaurentPoly<BigInt>(FreeAbelianGroup{1}), 3, 8), Error);
}

TEST(UnitNormalize, ScaledMonomial) {
  for (long p : {2L, 3L, 5L}) {
    const auto u = c0_unit_normalize(parse_poly(std::to_string(p) + "*t1", 2), p, 6);
    EXPECT_EQ(u.a, 1);
    EXPECT_EQ(u.c, padic_make(1, p, 6));
    EXPECT_EQ(u.nu, (FreeAbelianGroup::element{1, 0}));
    EXPECT_TRUE(u.g.is_zero());
  }
}

TEST(UnitNormalize, RationalCoefficientsMod) {
  // 3 + 5t at p = 5: c = 3, g = 5t/(5*3) => g = t * 3^-1 mod 5^N.
  const auto u = c0_unit_normalize(parse_poly("3 + 5*t"), 5, 4);
  const BigInt m = pow_int(5, 4);
  EXPECT_EQ(mod(u.g.coeff({1}) * 3, m), 1);
}

TEST(TrLog, SupportArgument) {
  for (long p : {2L, 3L, 5L}) EXPECT_TRUE(tr_log_one_unit(parse_poly("1 + " + std::to_string(p) + "*t"), p, 8).is_zero());
}

TEST(TrLog, CentralBinomialSeries) {
  const auto v = tr_log_one_unit(parse_poly("1 + 3*t + 3*t^-1"), 3, 4);
  EXPECT_EQ(v.residue(), 72);
  EXPECT_EQ(central_binomial_oracle(3, 4), 72);
  for (long p : {2L, 3L, 5L, 7L}) {
    const std::string s = "1 + " + std::to_string(p) + "*t + " + std::to_string(p) + "*t^-1";
    const long n = 10;
    EXPECT_EQ(mod(tr_log_one_unit(parse_poly(s), p, n).residue(), pow_int(p, n)), central_binomial_oracle(p, n))
        << "p=" << p;
  }
}

TEST(TrLog, ScalarCaseIsTheLogarithm) {
  for (long p : {2L, 3L, 5L})
    for (long a = -5; a <= 5; ++a) {
      const BigInt c = BigInt(1) + BigInt(p) * a;
      const auto f = LaurentPoly<BigInt>::constant(FreeAbelianGroup{1}, c);
      EXPECT_EQ(tr_log_one_unit(f, p, 9), padic_log(padic_make(c, p, 9))) << p << " " << a;
    }
}

TEST(TrLog, RefusesNonOneUnits) {
  try {
    tr_log_one_unit(parse_poly("2 + 3*t"), 3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAOneUnit);
  }
}

TEST(TrLog, Homomorphism) {
  gen::Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    const long p = gen::pick(rng, std::vector<long>{2, 3, 5});
    const std::size_t r = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    const auto F = gen::random_one_unit(rng, HeisenbergGroup{}, r, p);
    const auto G = gen::random_one_unit(rng, HeisenbergGroup{}, r, p);
    EXPECT_TRUE(congruent(tr_log_one_unit(F * G, p, 6), tr_log_one_unit(F, p, 6) + tr_log_one_unit(G, p, 6), 6));
  }
}

TEST(DetLaurent, Examples) {
  const auto F = parse_laurent_matrix("[[1 + 3*t, 3], [0, 1]]");
  EXPECT_EQ(det_laurent_matrix(F), parse_poly("1 + 3*t"));
  EXPECT_EQ(det_laurent_matrix(RingMatrix<FreeAbelianGroup, BigInt>::identity(FreeAbelianGroup{2}, 5)),
            parse_poly("1", 2));
}

TEST(DetLaurent, AgreesWithPermutationExpansion) {
  gen::Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto F = gen::random_matrix(rng, FreeAbelianGroup{2}, r, 3, 5, 1);
    EXPECT_EQ(det_laurent_matrix(F), leibniz(F));
  }
}

TEST(LogDetUnit, Examples) {
  EXPECT_TRUE(logdet_unit(parse_poly("t1^3", 2), 3, 8).is_zero());
  EXPECT_EQ(logdet_unit(parse_poly("3"), 2, 8), padic_log(padic_make(3, 2, 8)));
  const auto h = logdet_unit(parse_poly("2*t^2 - t + 2"), 2, 8);
  EXPECT_EQ(h.absolute_precision(), 8);
}

TEST(LogDetUnit, ScaleInvariance) {
  const auto f = parse_poly("2*t^2 - t + 2");
  for (long s : {2L, -1L, -8L}) EXPECT_EQ(logdet_unit(f * BigInt(s), 2, 8), logdet_unit(f, 2, 8));
}

TEST(LogDetUnit, MatrixRouteMatchesProductOfFactors) {
  // det [[c t, 0], [x, 1 + p g]] = c t (1 + p g).
  const auto F = parse_laurent_matrix("[[7*t, 0], [t^3 - 2, 1 + 3*t + 3*t^-1]]");
  const auto expected =
      padic_log(padic_make(7, 3, 6)) + tr_log_one_unit(parse_poly("1 + 3*t + 3*t^-1"), 3, 6);
  EXPECT_TRUE(congruent(logdet_unit(F, 3, 6), expected, 6));
}

TEST(LogDetFinite, CyclicTwoExample) {
  const FiniteGroup c2(GroupDescriptor::cyclic(2));
  FiniteGroupRingElem<BigInt> f(c2);
  f.add_term(0, BigInt(3));
  f.add_term(1, BigInt(2));  // 1 + 2(e + s)
  const auto v = logdet_finite(f, 2, 6);
  const auto expected = padic_log(padic_make(5, 2, 7)) / padic_make(2, 2, 7);
  EXPECT_TRUE(congruent(v, expected, 6));
  EXPECT_TRUE(congruent(v, tr_log_one_unit(f, 2, 6), 6));
}

TEST(LogDetFinite, UnitsOfTheGroupVanish) {
  const FiniteGroup g(GroupDescriptor::heisenberg(2));
  EXPECT_TRUE(logdet_finite(FiniteGroupRingElem<BigInt>::constant(g, BigInt(1)), 3, 6).is_zero());
  for (FiniteGroup::element k = 0; k < g.order(); ++k)
    EXPECT_TRUE(logdet_finite(FiniteGroupRingElem<BigInt>::monomial(g, k), 3, 6).is_zero());
}

TEST(LogDetFinite, SingularRefused) {
  const FiniteGroup c2(GroupDescriptor::cyclic(2));
  FiniteGroupRingElem<BigInt> f(c2);
  f.add_term(0, BigInt(1));
  f.add_term(1, BigInt(1));
  try {
    logdet_finite(f, 3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularRho);
  }
}

TEST(LogDetFinite, MatchesTraceLog) {
  gen::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const long p = gen::pick(rng, std::vector<long>{2, 3, 5});
    const FiniteGroup g(gen::pick(rng, gen::small_quotients()));
    const auto F = gen::random_one_unit(rng, g, static_cast<std::size_t>(gen::uniform(rng, 1, 2)), p, 3);
    EXPECT_TRUE(congruent(tr_log_one_unit(F, p, 6), logdet_finite(F, p, 6), 6)) << g.descriptor().str();
  }
}
