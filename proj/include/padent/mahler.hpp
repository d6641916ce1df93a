#pragma once

#include <vector>

#include "padent/group_ring.hpp"
#include "padent/padic.hpp"

namespace padent {

/// Dense univariate polynomial, coefficient i of T^i.
using UPoly = std::vector<BigInt>;

namespace upoly {

inline void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long degree(const UPoly& f) { return static_cast<long>(f.size()) - 1; }

inline UPoly reduce(UPoly f, const BigInt& m) {
  for (auto& c : f) c = mod(c, m);
  trim(f);
  return f;
}

inline UPoly mul(const UPoly& a, const UPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return reduce(std::move(c), m);
}

inline UPoly sub(UPoly a, const UPoly& b, const BigInt& m) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return reduce(std::move(a), m);
}

inline UPoly add(UPoly a, const UPoly& b, const BigInt& m) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return reduce(std::move(a), m);
}

/// Quotient and remainder by a monic g over Z/m.
inline std::pair<UPoly, UPoly> divrem_monic(UPoly f, const UPoly& g, const BigInt& m) {
  f = reduce(std::move(f), m);
  const long dg = degree(g);
  if (degree(f) < dg) return {{}, f};
  UPoly q(static_cast<std::size_t>(degree(f) - dg + 1), BigInt(0));
  for (long i = degree(f); i >= dg; --i) {
    const BigInt c = mod(f[static_cast<std::size_t>(i)], m);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dg)] = c;
    for (long j = 0; j <= dg; ++j) f[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
  }
  f.resize(static_cast<std::size_t>(dg));
  return {reduce(std::move(q), m), reduce(std::move(f), m)};
}

}  // namespace upoly

/// Lower convex hull of {(i, v_p(a_i))}. A segment of slope s carries roots of
/// valuation -s.
struct NewtonPolygon {
  struct Segment {
    BigRational slope;
    long length = 0;
  };
  std::vector<std::pair<long, long>> vertices;
  std::vector<Segment> segments;
};

inline NewtonPolygon newton_polygon(const UPoly& f, long p) {
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(f[i], p));
  require(!pts.empty(), ErrorCode::ZeroPolynomial, "Newton polygon of zero");
  NewtonPolygon np;
  auto& hull = np.vertices;
  for (const auto& pt : pts) {
    // Pop while the last two hull points and pt do not make a strict left turn.
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const long dx = hull[k].first - hull[k - 1].first;
    BigRational slope(BigInt(hull[k].second - hull[k - 1].second), BigInt(dx));
    slope.canonicalize();
    np.segments.push_back({slope, dx});
  }
  return np;
}

/// f = g h mod p^precision with g monic, g = T^s mod p (roots of positive
/// valuation) and h = const mod p (roots of negative valuation).
struct SlopeSplit {
  UPoly g;
  UPoly h;
  long s = 0;
  long precision = 0;
};

/// Quadratic Hensel lifting of f = T^s * a_s (mod p). Each step refreshes the
/// inverse of h modulo (g, p^k) by Newton iteration and corrects g by
/// h^-1 e mod g, where e = f - g h.
inline SlopeSplit slope_split(const UPoly& f_in, long p, long precision) {
  check_prime(p);
  UPoly f = f_in;
  upoly::trim(f);
  require(!f.empty(), ErrorCode::ZeroPolynomial, "slope split of zero");
  long s = -1;
  long min_v = -1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    const long v = valuation(f[i], p);
    if (min_v < 0 || v < min_v) min_v = v;
  }
  require(min_v == 0, ErrorCode::NotPrimitive, "polynomial is divisible by p");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0 || f[i] % p == 0) continue;
    require(s < 0, ErrorCode::ZeroSlopePresent,
            "reduction mod p has two or more terms: a root lies on the unit circle");
    s = static_cast<long>(i);
  }
  SlopeSplit out;
  out.s = s;
  out.precision = precision;
  const BigInt P = p;

  UPoly g(static_cast<std::size_t>(s) + 1, BigInt(0));
  g.back() = 1;
  UPoly h{mod(f[static_cast<std::size_t>(s)], P)};
  const BigInt lead_inv = inverse_mod(f[static_cast<std::size_t>(s)], P);

  auto inverse_of_h = [&](const UPoly& gg, const UPoly& hh, long k) {
    // t <- t (2 - h t) mod g doubles the p-adic accuracy of h^-1 mod g.
    UPoly t{lead_inv};
    for (long j = 1; j < k;) {
      j = std::min(2 * j, k);
      const BigInt mj = pow_int(p, static_cast<unsigned long>(j));
      UPoly ht = upoly::divrem_monic(upoly::mul(hh, t, mj), gg, mj).second;
      UPoly two_minus = upoly::sub(UPoly{BigInt(2)}, ht, mj);
      t = upoly::divrem_monic(upoly::mul(t, two_minus, mj), gg, mj).second;
    }
    return t;
  };

  for (long k = 1; k < precision;) {
    const long next = std::min(2 * k, precision);
    const BigInt m = pow_int(p, static_cast<unsigned long>(next));
    const UPoly e = upoly::sub(f, upoly::mul(g, h, m), m);
    if (!e.empty() && s > 0) {
      const UPoly t = inverse_of_h(g, h, k);
      const UPoly dg = upoly::divrem_monic(upoly::mul(t, e, m), g, m).second;
      g = upoly::add(g, dg, m);
    }
    auto [q, r] = upoly::divrem_monic(f, g, m);
    require(r.empty(), ErrorCode::InvalidArgument, "Hensel step failed to divide");
    h = std::move(q);
    k = next;
  }
  out.g = std::move(g);
  out.h = std::move(h);
  return out;
}

struct MahlerResult {
  /// log_p a_r - sum_{0<|alpha|<1} log_p alpha
  PadicScalar value = PadicScalar::zero(2, 1);
  /// log_p a_m + sum_{|alpha|>1} log_p alpha
  PadicScalar outer_form = PadicScalar::zero(2, 1);
  NewtonPolygon polygon;
  SlopeSplit split;
};

/// Univariate coefficients of a d = 1 Laurent polynomial with the lowest
/// power of T divided out.
inline UPoly to_upoly(const LaurentPoly<BigInt>& f) {
  require(f.group().dim == 1, ErrorCode::DimensionMismatch, "expected a polynomial in one variable");
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "zero polynomial");
  const std::int64_t lo = f.terms().begin()->first[0];
  const std::int64_t hi = f.terms().rbegin()->first[0];
  UPoly out(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e[0] - lo)] = c;
  return out;
}

/// One-variable p-adic Mahler measure from the slope factorization. Only the
/// products of inside (resp. outside) roots are needed; these are +-g(0) and
/// +-h(0)/a_m, which lie in Q_p.
inline MahlerResult mahler_1d(const UPoly& f_in, long p, long precision) {
  check_prime(p);
  UPoly f = f_in;
  upoly::trim(f);
  require(!f.empty(), ErrorCode::ZeroPolynomial, "Mahler measure of zero");
  // Drop T^r; a_r becomes the constant term.
  std::size_t r = 0;
  while (f[r] == 0) ++r;
  f.erase(f.begin(), f.begin() + static_cast<long>(r));
  // p-content contributes log_p p^k = 0.
  long content = -1;
  for (const auto& c : f)
    if (c != 0) content = content < 0 ? valuation(c, p) : std::min(content, valuation(c, p));
  const BigInt pc = pow_int(p, static_cast<unsigned long>(content));
  for (auto& c : f) c /= pc;

  MahlerResult out;
  out.polygon = newton_polygon(f, p);
  const long v0 = valuation(f.front(), p);
  const long lift = precision + v0 + 2;
  out.split = slope_split(f, p, lift);

  const BigInt& a_r = f.front();
  const BigInt& a_m = f.back();
  const PadicScalar log_ar = padic_log(padic_make(a_r, p, precision));
  PadicScalar inside = padic_log(padic_make(out.split.g.empty() ? BigInt(0) : out.split.g.front(), p, lift - v0));
  out.value = padic_truncate(padic_sub(log_ar, inside), precision);

  const BigInt h0 = out.split.h.empty() ? BigInt(0) : out.split.h.front();
  const PadicScalar outside = padic_div(padic_make(h0, p, lift), padic_make(a_m, p, lift));
  out.outer_form = padic_truncate(padic_add(padic_log(padic_make(a_m, p, precision)), padic_log(outside)), precision);
  require(congruent(out.value, out.outer_form, precision), ErrorCode::InvalidArgument,
          "the two forms of the Mahler measure disagree");
  return out;
}

inline MahlerResult mahler_1d(const LaurentPoly<BigInt>& f, long p, long precision) {
  return mahler_1d(to_upoly(f), p, precision);
}

}  // namespace padent
