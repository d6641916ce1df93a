#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "padent/detlog.hpp"
#include "padent/mahler.hpp"
#include "padent/parse.hpp"
#include "padent/serialize.hpp"

namespace padent {

/// Seeded generators for random group ring data.
namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(xs.size()) - 1))];
}

inline FreeAbelianGroup::element random_element(Rng& rng, const FreeAbelianGroup& g, long radius) {
  auto e = g.identity();
  for (auto& x : e) x = uniform(rng, -radius, radius);
  return e;
}

inline HeisenbergGroup::element random_element(Rng& rng, const HeisenbergGroup&, long radius) {
  return {uniform(rng, -radius, radius), uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

inline FiniteGroup::element random_element(Rng& rng, const FiniteGroup& g, long) {
  return static_cast<FiniteGroup::element>(uniform(rng, 0, static_cast<long>(g.order()) - 1));
}

/// Up to `terms` terms with coefficients in [-coeff, coeff].
template <GroupPolicy G>
GroupRingElem<G, BigInt> random_elem(Rng& rng, const G& g, int terms, long coeff, long radius) {
  GroupRingElem<G, BigInt> f(g);
  for (int k = 0; k < terms; ++k) f.add_term(random_element(rng, g, radius), BigInt(uniform(rng, -coeff, coeff)));
  return f;
}

template <GroupPolicy G>
RingMatrix<G, BigInt> random_matrix(Rng& rng, const G& g, std::size_t r, int terms, long coeff, long radius) {
  RingMatrix<G, BigInt> m(g, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = random_elem(rng, g, terms, coeff, radius);
  return m;
}

/// I + p X with X random.
template <GroupPolicy G>
RingMatrix<G, BigInt> random_one_unit(Rng& rng, const G& g, std::size_t r, long p, int terms = 2, long radius = 1) {
  return RingMatrix<G, BigInt>::identity(g, r) + random_matrix(rng, g, r, terms, 2, radius) * BigInt(p);
}

/// A one-variable polynomial whose reduction mod p (after removing the
/// p-content) is a single monomial, times p^k for a random k in [0, 1].
inline LaurentPoly<BigInt> random_expansive(Rng& rng, long p, long max_degree = 4) {
  const FreeAbelianGroup g{1};
  const long deg = uniform(rng, 1, max_degree);
  const long s = uniform(rng, 0, deg);
  LaurentPoly<BigInt> f(g);
  for (long i = 0; i <= deg; ++i) {
    BigInt c;
    if (i == s) {
      do c = uniform(rng, -9, 9);
      while (c % p == 0);
    } else {
      c = BigInt(uniform(rng, -4, 4)) * p;
      if (i == 0 || i == deg)
        while (c == 0) c = BigInt(uniform(rng, -4, 4)) * p;
    }
    f.add_term({i}, c);
  }
  return uniform(rng, 0, 1) ? f * BigInt(p) : f;
}

/// Finite quotients small enough for regular-representation checks.
inline std::vector<GroupDescriptor> small_quotients() {
  return {GroupDescriptor::cyclic(1),        GroupDescriptor::cyclic(2),
          GroupDescriptor::cyclic(5),        GroupDescriptor::cyclic(6),
          GroupDescriptor::torus({2, 3}),    GroupDescriptor::torus({3, 3}),
          GroupDescriptor::heisenberg(2),    GroupDescriptor::heisenberg(3)};
}

}  // namespace gen

/// Outcome of one named property over a number of random trials.
struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

namespace detail {

/// a and b agree on every digit both of them know.
inline bool agree(const PadicScalar& a, const PadicScalar& b) {
  return agreement(a, b) >= std::min(a.absolute_precision(), b.absolute_precision());
}

using Property = std::function<std::optional<std::string>(gen::Rng&)>;

inline std::vector<std::pair<std::string, Property>> property_list() {
  using gen::Rng;
  using gen::uniform;
  std::vector<std::pair<std::string, Property>> props;
  const std::vector<long> primes{2, 3, 5};

  props.emplace_back("padic ring laws", [](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, std::vector<long>{2, 3, 5, 7});
    auto rand_q = [&] {
      BigInt num;
      do num = uniform(rng, -500, 500);
      while (num == 0);
      return BigRational(num, BigInt(uniform(rng, 1, 60)));
    };
    BigRational ra = rand_q(), rb = rand_q(), rc = rand_q();
    ra.canonicalize();
    rb.canonicalize();
    rc.canonicalize();
    auto mk = [&](const BigRational& q) { return padic_make(q.get_num(), q.get_den(), p, 8); };
    const auto a = mk(ra), b = mk(rb), c = mk(rc);
    if (ra + rb != 0 && !agree(a + b, mk(ra + rb))) return "a + b";
    if (!agree(a * b, mk(ra * rb))) return "a * b";
    if (!agree(a * (b + c), a * b + a * c)) return "distributivity";
    if (!agree(a / b, mk(ra / rb))) return "a / b";
    return std::nullopt;
  });

  props.emplace_back("log homomorphism", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    BigInt a, b;
    do a = uniform(rng, -10000, 10000);
    while (a == 0);
    do b = uniform(rng, -10000, 10000);
    while (b == 0);
    const long n = 10;
    const auto la = padic_log(padic_make(a, p, n)), lb = padic_log(padic_make(b, p, n));
    if (!agree(padic_log(padic_make(a * b, p, n)), la + lb)) return "log(ab) != log a + log b";
    if (!padic_log(padic_make(p, p, n)).is_zero()) return "log p != 0";
    return std::nullopt;
  });

  props.emplace_back("sup norm axioms", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const FreeAbelianGroup g{2};
    const auto f = gen::random_elem(rng, g, 4, 30, 2), h = gen::random_elem(rng, g, 4, 30, 2);
    const auto nf = sup_norm(f, p), nh = sup_norm(h, p);
    if (sup_norm(f + h, p) > std::max(nf, nh)) return "ultrametric inequality";
    if (sup_norm(f * h, p) != nf * nh) return "Gauss norm is multiplicative on Z^d";
    if (sup_norm(involution(f), p) != nf) return "|f*| = |f|";
    const auto x = gen::random_elem(rng, HeisenbergGroup{}, 4, 30, 1);
    const auto y = gen::random_elem(rng, HeisenbergGroup{}, 4, 30, 1);
    if (sup_norm(x * y, p) > sup_norm(x, p) * sup_norm(y, p)) return "submultiplicativity (Heisenberg)";
    return std::nullopt;
  });

  props.emplace_back("involution anti-homomorphism", [](Rng& rng) -> std::optional<std::string> {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const auto F = gen::random_matrix(rng, HeisenbergGroup{}, r, 3, 5, 1);
    const auto G = gen::random_matrix(rng, HeisenbergGroup{}, r, 3, 5, 1);
    if (!(involution(F * G) == involution(G) * involution(F))) return "(FG)* != G* F*";
    if (!(involution(involution(F)) == F)) return "F** != F";
    return std::nullopt;
  });

  props.emplace_back("quotient reduction homomorphism", [](Rng& rng) -> std::optional<std::string> {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const TorusQuotient tq({uniform(rng, 1, 5), uniform(rng, 1, 5)});
    const FreeAbelianGroup z2{2};
    const auto F = gen::random_matrix(rng, z2, r, 3, 5, 3), G = gen::random_matrix(rng, z2, r, 3, 5, 3);
    if (!(reduce_to_quotient(F * G, tq) == reduce_to_quotient(F, tq) * reduce_to_quotient(G, tq)))
      return "torus reduction";
    const HeisenbergQuotient hq(uniform(rng, 2, 4));
    const auto A = gen::random_matrix(rng, HeisenbergGroup{}, r, 3, 5, 2);
    const auto B = gen::random_matrix(rng, HeisenbergGroup{}, r, 3, 5, 2);
    if (!(reduce_to_quotient(A * B, hq) == reduce_to_quotient(A, hq) * reduce_to_quotient(B, hq)))
      return "Heisenberg reduction";
    return std::nullopt;
  });

  props.emplace_back("rho multiplicativity", [](Rng& rng) -> std::optional<std::string> {
    const FiniteGroup g(gen::pick(rng, gen::small_quotients()));
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const auto F = gen::random_matrix(rng, g, r, 3, 5, 0), G = gen::random_matrix(rng, g, r, 3, 5, 0);
    if (!(rho_matrix(F * G) == rho_matrix(F) * rho_matrix(G))) return "rho(FG) != rho(F) rho(G) over " + g.descriptor().str();
    return std::nullopt;
  });

  props.emplace_back("trace compatibility", [](Rng& rng) -> std::optional<std::string> {
    const FiniteGroup g(gen::pick(rng, gen::small_quotients()));
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const auto F = gen::random_matrix(rng, g, r, 4, 9, 0);
    const BigInt lhs = F.trace().constant_term() * static_cast<unsigned long>(g.order());
    if (lhs != rho_matrix(F).trace()) return "|G| tr_G F != tr rho_F over " + g.descriptor().str();
    return std::nullopt;
  });

  props.emplace_back("determinant routes", [](Rng& rng) -> std::optional<std::string> {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 14));
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -50, 50);
    if (uniform(rng, 0, 4) == 0 && n >= 2)
      for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j) * 3;
    if (det_bareiss(m) != det_modular(m)) return "Bareiss != modular at n = " + std::to_string(n);
    return std::nullopt;
  });

  props.emplace_back("fixed-point count routes", [](Rng& rng) -> std::optional<std::string> {
    const int d = static_cast<int>(uniform(rng, 1, 2));
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const FreeAbelianGroup g{d};
    const auto F = gen::random_matrix(rng, g, r, 3, 6, 2);
    std::vector<long> moduli;
    for (int i = 0; i < d; ++i) moduli.push_back(uniform(rng, 1, d == 1 ? 9 : 4));
    const TorusQuotient q(moduli);
    if (det_exact(rho_matrix(reduce_to_quotient(F, q))) != fix_count_char_crt(F, moduli))
      return "rho determinant != character product over " + q.group().descriptor().str();
    return std::nullopt;
  });

  auto one_unit_pair = [primes](Rng& rng, auto&& check) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    switch (uniform(rng, 0, 3)) {
      case 0: return check(FreeAbelianGroup{1}, p, r, rng);
      case 1: return check(FreeAbelianGroup{2}, p, r, rng);
      case 2: return check(HeisenbergGroup{}, p, r, rng);
      default: return check(FiniteGroup(GroupDescriptor::heisenberg(uniform(rng, 2, 3))), p, r, rng);
    }
  };

  props.emplace_back("tr_log homomorphism", [one_unit_pair](Rng& rng) {
    return one_unit_pair(rng, [](const auto& g, long p, std::size_t r, Rng& rr) -> std::optional<std::string> {
      const auto F = gen::random_one_unit(rr, g, r, p), G = gen::random_one_unit(rr, g, r, p);
      const long n = 6;
      if (!congruent(tr_log_one_unit(F * G, p, n), tr_log_one_unit(F, p, n) + tr_log_one_unit(G, p, n), n))
        return "tr log(FG) != tr log F + tr log G (p = " + std::to_string(p) + ")";
      return std::nullopt;
    });
  });

  props.emplace_back("tr_log conjugation invariance", [one_unit_pair](Rng& rng) {
    return one_unit_pair(rng, [](const auto& g, long p, std::size_t r, Rng& rr) -> std::optional<std::string> {
      using M = std::decay_t<decltype(gen::random_one_unit(rr, g, r, p))>;
      const auto F = gen::random_one_unit(rr, g, r, p);
      const auto s = gen::random_element(rr, g, 1);
      // U = s (I + N) with N strictly upper triangular, U^-1 = (I - N) s^-1.
      M N(g, r);
      for (std::size_t j = 1; j < r; ++j) N(0, j) = gen::random_elem(rr, g, 2, 3, 1);
      const M S = M::scalar(M::entry_type::monomial(g, s));
      const M Sinv = M::scalar(M::entry_type::monomial(g, g.inv(s)));
      auto diag = [&](const M& one) {
        M out(g, r);
        for (std::size_t i = 0; i < r; ++i) out(i, i) = one(0, 0);
        return out;
      };
      const M I = M::identity(g, r);
      const M U = diag(S) * (I + N), Uinv = (I - N) * diag(Sinv);
      const long n = 6;
      if (!congruent(tr_log_one_unit(U * F * Uinv, p, n), tr_log_one_unit(F, p, n), n))
        return "tr log(U F U^-1) != tr log F (p = " + std::to_string(p) + ")";
      return std::nullopt;
    });
  });

  props.emplace_back("finite-group determinant formula", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const GroupDescriptor desc =
        uniform(rng, 0, 1) ? GroupDescriptor::cyclic(uniform(rng, 1, 6)) : GroupDescriptor::heisenberg(2);
    const FiniteGroup g(desc);
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const auto F = gen::random_one_unit(rng, g, r, p, 3);
    const long n = 6;
    if (!congruent(tr_log_one_unit(F, p, n), logdet_finite(F, p, n), n))
      return "tr log F != (1/|G|) log det rho_F over " + desc.str();
    return std::nullopt;
  });

  props.emplace_back("Mahler measure multiplicativity", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const auto f = gen::random_expansive(rng, p), h = gen::random_expansive(rng, p);
    const long n = 6;
    const auto mf = mahler_1d(f, p, n).value, mh = mahler_1d(h, p, n).value;
    if (!congruent(mahler_1d(f * h, p, n).value, mf + mh, n)) return "m(fh) != m(f) + m(h): " + to_string(f) + " ; " + to_string(h);
    return std::nullopt;
  });

  props.emplace_back("Mahler measure = log det", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const auto f = gen::random_expansive(rng, p);
    const long n = 6;
    if (!congruent(mahler_1d(f, p, n).value, logdet_unit(f, p, n), n)) return "m_p(f) != log det f for " + to_string(f);
    return std::nullopt;
  });

  props.emplace_back("parser round trip", [](Rng& rng) -> std::optional<std::string> {
    const int d = static_cast<int>(uniform(rng, 1, 3));
    const auto f = gen::random_elem(rng, FreeAbelianGroup{d}, 5, 20, 3);
    const std::string s = to_string(f);
    if (!(parse_poly(s, d) == f) || to_string(parse_poly(s, d)) != s) return "Laurent: " + s;
    const auto h = gen::random_elem(rng, HeisenbergGroup{}, 5, 20, 2);
    const std::string hs = to_string(h);
    if (!(parse_heisenberg(hs) == h) || to_string(parse_heisenberg(hs)) != hs) return "Heisenberg: " + hs;
    const auto F = gen::random_matrix(rng, FreeAbelianGroup{d}, 2, 3, 9, 2);
    const std::string ms = to_string(F);
    if (!(parse_laurent_matrix(ms, d) == F)) return "matrix: " + ms;
    return std::nullopt;
  });

  props.emplace_back("record JSON round trip", [primes](Rng& rng) -> std::optional<std::string> {
    const long p = gen::pick(rng, primes);
    const auto f = gen::random_elem(rng, FreeAbelianGroup{1}, 3, 20, 2);
    const long n = uniform(rng, 1, 7);
    const BigInt det = fix_count_char_crt(RingMatrix<FreeAbelianGroup, BigInt>::scalar(f), {n});
    if (det == 0) return std::nullopt;
    const auto rec = make_fix_count_record(GroupDescriptor::cyclic(n), BigInt(n), det, p, 8);
    const auto back = record_from_json(to_json(rec));
    if (!(back.quotient == rec.quotient && back.index == rec.index && back.signed_det == rec.signed_det &&
          back.fix_count == rec.fix_count && back.p_valuation == rec.p_valuation && back.unit_log == rec.unit_log &&
          back.normalized == rec.normalized))
      return "record changed in JSON round trip";
    return std::nullopt;
  });

  return props;
}

}  // namespace detail

/// Runs every property `trials` times. Property k draws from its own stream
/// seeded by (seed, k), so results do not depend on the order of execution.
inline std::vector<PropertyResult> run_selftest(std::uint64_t seed, int trials = 20) {
  const auto props = detail::property_list();
  std::vector<PropertyResult> out(props.size());
  parallel_for(props.size(), [&](std::size_t k) {
    std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(k)};
    gen::Rng rng(sseq);
    PropertyResult& res = out[k];
    res.name = props[k].first;
    for (int t = 0; t < trials; ++t) {
      ++res.trials;
      std::optional<std::string> failure;
      try {
        failure = props[k].second(rng);
      } catch (const Error& e) {
        failure = e.what();
      }
      if (failure) {
        if (res.failures++ == 0) res.first_failure = "trial " + std::to_string(t) + ": " + *failure;
      }
    }
  });
  return out;
}

}  // namespace padent
