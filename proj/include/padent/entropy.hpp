#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "padent/fixcount.hpp"
#include "padent/parallel.hpp"

namespace padent {

/// Tail analysis of a sequence of normalized fixed-point logarithms.
struct ConvergenceReport {
  enum class Verdict { Converged, Undecided };

  std::vector<FixCountRecord> records;
  /// agreement[i][j]: number of p-adic digits on which records i and j agree,
  /// i.e. |x_i - x_j|_p <= p^-agreement[i][j].
  std::vector<std::vector<long>> agreement;
  /// Tail agreement of the last `tail` records after each record (from the
  /// tail-th record on).
  std::vector<long> stable_digits_history;
  PadicScalar stabilized_value = PadicScalar::zero(2, 1);
  long stable_digits = 0;
  long target = 0;
  std::size_t tail = 3;
  Verdict verdict = Verdict::Undecided;

  /// p-adic distance between consecutive records, as the agreement exponent.
  std::vector<long> consecutive_agreement() const {
    std::vector<long> out;
    for (std::size_t i = 1; i < records.size(); ++i) out.push_back(agreement[i - 1][i]);
    return out;
  }
};

inline const char* verdict_name(ConvergenceReport::Verdict v) {
  return v == ConvergenceReport::Verdict::Converged ? "converged" : "undecided";
}

struct ConvergenceOptions {
  std::size_t tail = 3;
  /// Digits required for a "converged" verdict; <= 0 means the full precision
  /// of the last record.
  long target = 0;
};

/// Sorts records by index and measures how many digits the tail agrees on.
/// Nothing is extrapolated: the stabilized value is the last record cut to the
/// agreed digits.
inline ConvergenceReport convergence_report(std::vector<FixCountRecord> records, const ConvergenceOptions& opt = {}) {
  require(records.size() >= 2, ErrorCode::TooFewRecords, "at least two records are needed");
  std::stable_sort(records.begin(), records.end(),
                   [](const FixCountRecord& a, const FixCountRecord& b) { return a.index < b.index; });
  ConvergenceReport rep;
  const std::size_t n = records.size();
  rep.tail = std::max<std::size_t>(2, std::min(opt.tail, n));
  rep.agreement.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rep.agreement[i][i] = records[i].normalized.absolute_precision();
    for (std::size_t j = i + 1; j < n; ++j)
      rep.agreement[i][j] = rep.agreement[j][i] = agreement(records[i].normalized, records[j].normalized);
  }
  for (std::size_t end = rep.tail; end <= n; ++end) {
    long digits = std::numeric_limits<long>::max();
    for (std::size_t i = end - rep.tail; i < end; ++i)
      for (std::size_t j = i; j < end; ++j) digits = std::min(digits, rep.agreement[i][j]);
    rep.stable_digits_history.push_back(digits);
  }
  rep.stable_digits = rep.stable_digits_history.back();
  rep.stabilized_value = padic_truncate(records.back().normalized, rep.stable_digits);
  rep.target = opt.target > 0 ? opt.target : records.back().normalized.absolute_precision();
  rep.verdict =
      rep.stable_digits >= rep.target ? ConvergenceReport::Verdict::Converged : ConvergenceReport::Verdict::Undecided;
  rep.records = std::move(records);
  return rep;
}

inline void check_family_increasing(const std::vector<std::uint64_t>& indices) {
  for (std::size_t i = 1; i < indices.size(); ++i)
    require(indices[i] > indices[i - 1], ErrorCode::InvalidArgument, "quotient family indices must strictly increase");
}

/// (1/(Gamma:Gamma_n)) log_p |Fix| over a family of quotients Z^d -> prod Z/n_i.
inline ConvergenceReport entropy_sequence(const RingMatrix<FreeAbelianGroup, BigInt>& f,
                                          const std::vector<std::vector<long>>& family, long p, long precision,
                                          const ConvergenceOptions& copt = {}, const FixCountOptions& fopt = {}) {
  check_prime(p);
  std::vector<TorusQuotient> quotients;
  std::vector<std::uint64_t> indices;
  for (const auto& moduli : family) {
    quotients.emplace_back(moduli);
    indices.push_back(quotients.back().index());
  }
  check_family_increasing(indices);
  std::vector<FixCountRecord> records(quotients.size());
  parallel_for(quotients.size(),
               [&](std::size_t i) { records[i] = fix_count(f, quotients[i], p, precision, fopt); });
  return convergence_report(std::move(records), copt);
}

/// Same over Heisenberg congruence quotients H(Z/n).
inline ConvergenceReport entropy_sequence(const RingMatrix<HeisenbergGroup, BigInt>& f, const std::vector<long>& family,
                                          long p, long precision, const ConvergenceOptions& copt = {},
                                          const FixCountOptions& fopt = {}) {
  check_prime(p);
  std::vector<HeisenbergQuotient> quotients;
  std::vector<std::uint64_t> indices;
  for (long n : family) {
    quotients.emplace_back(n);
    indices.push_back(quotients.back().index());
  }
  check_family_increasing(indices);
  std::vector<FixCountRecord> records(quotients.size());
  parallel_for(quotients.size(),
               [&](std::size_t i) { records[i] = fix_count(f, quotients[i], p, precision, fopt); });
  return convergence_report(std::move(records), copt);
}

/// Diagonal quotients (n, ..., n) of Z^d.
inline std::vector<std::vector<long>> diagonal_family(int dim, const std::vector<long>& ns) {
  std::vector<std::vector<long>> out;
  for (long n : ns) out.emplace_back(static_cast<std::size_t>(dim), n);
  return out;
}

/// Snirelman averages (1/N^d) sum_{zeta in mu_N^d} log_p f(zeta). The sum of
/// logarithms is log_p of the Galois-invariant product prod f(zeta), an integer
/// computed by the character/CRT route, so no extension field is touched.
inline ConvergenceReport snirelman_mahler(const LaurentPoly<BigInt>& f, long p, const std::vector<long>& moduli,
                                          long precision, const ConvergenceOptions& copt = {}) {
  check_prime(p);
  const int d = f.group().dim;
  for (long n : moduli)
    require(n >= 1 && n % p != 0, ErrorCode::ModulusNotCoprimeToP,
            "Snirelman modulus " + std::to_string(n) + " is not coprime to p");
  std::vector<std::uint64_t> indices;
  for (long n : moduli) {
    std::uint64_t idx = 1;
    for (int i = 0; i < d; ++i) idx *= static_cast<std::uint64_t>(n);
    indices.push_back(idx);
  }
  check_family_increasing(indices);
  const auto F = RingMatrix<FreeAbelianGroup, BigInt>::scalar(f);
  std::vector<FixCountRecord> records(moduli.size());
  parallel_for(moduli.size(), [&](std::size_t i) {
    const std::vector<long> ns(static_cast<std::size_t>(d), moduli[i]);
    const BigInt prod = fix_count_char_crt(F, ns);
    records[i] = make_fix_count_record(GroupDescriptor::torus(ns), BigInt(static_cast<unsigned long>(indices[i])),
                                       prod, p, precision);
  });
  return convergence_report(std::move(records), copt);
}

}  // namespace padent
