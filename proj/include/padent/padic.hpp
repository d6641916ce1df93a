#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "padent/bigint.hpp"

namespace padent {

/// An element p^v * u of Q_p known modulo p^(v+N).
///
/// The unit residue u lives in [1, p^N) and is coprime to p. A value that is
/// zero to the available precision is tracked explicitly: it stores only the
/// absolute precision A (the value is O(p^A)).
class PadicScalar {
 public:
  static PadicScalar zero(long p, long absolute_precision) {
    PadicScalar z;
    z.p_ = p;
    z.v_ = absolute_precision;
    z.u_ = 0;
    z.n_ = 0;
    z.zero_ = true;
    return z;
  }

  /// Builds p^v * unit with relative precision n. The unit is reduced mod p^n
  /// and must be coprime to p.
  static PadicScalar from_parts(long p, long v, const BigInt& unit, long n) {
    require(n >= 1, ErrorCode::InvalidArgument, "precision must be >= 1");
    PadicScalar x;
    x.p_ = p;
    x.v_ = v;
    x.n_ = n;
    x.u_ = mod(unit, pow_int(p, static_cast<unsigned long>(n)));
    require(x.u_ % p != 0, ErrorCode::NotAUnit, "unit residue divisible by p");
    x.zero_ = false;
    return x;
  }

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  /// For a zero-to-precision value this is the absolute precision.
  long valuation() const { return v_; }
  const BigInt& unit() const { return u_; }
  /// Relative precision (number of known unit digits); 0 for zero values.
  long precision() const { return n_; }
  long absolute_precision() const { return zero_ ? v_ : v_ + n_; }

  BigInt modulus() const { return pow_int(p_, static_cast<unsigned long>(n_)); }

  /// Integer representative in [0, p^A) of a value with nonnegative valuation.
  BigInt residue() const {
    require(zero_ || v_ >= 0, ErrorCode::InvalidArgument, "residue of a non-integral value");
    if (zero_) return 0;
    return u_ * pow_int(p_, static_cast<unsigned long>(v_));
  }

  /// Exact rational p^v * u for the stored representative.
  BigRational to_rational() const {
    if (zero_) return 0;
    BigRational r(u_);
    BigInt pv = pow_int(p_, static_cast<unsigned long>(v_ < 0 ? -v_ : v_));
    if (v_ >= 0)
      r *= pv;
    else
      r /= pv;
    r.canonicalize();
    return r;
  }

  friend bool operator==(const PadicScalar& a, const PadicScalar& b) {
    return a.p_ == b.p_ && a.zero_ == b.zero_ && a.v_ == b.v_ && a.n_ == b.n_ && a.u_ == b.u_;
  }

  std::string str() const {
    std::ostringstream os;
    if (zero_) {
      os << "O(" << p_ << "^" << v_ << ")";
      return os.str();
    }
    os << u_.get_str();
    if (v_ != 0) os << "*" << p_ << "^" << v_;
    os << " + O(" << p_ << "^" << absolute_precision() << ")";
    return os.str();
  }

  /// Base-p digits from the most significant known digit down to p^min(v,0),
  /// with a '.' before the fractional part. Digits are joined by ':' when p > 10.
  std::string digits() const {
    const long hi = absolute_precision();
    const long lo = std::min<long>(zero_ ? 0 : v_, 0);
    std::string out;
    BigRational val = to_rational();
    // Scale to an integer so every digit position is read off exactly.
    const BigRational shifted = val * BigRational(pow_int(p_, static_cast<unsigned long>(-lo)));
    BigInt scaled = shifted.get_num();
    scaled = mod(scaled, pow_int(p_, static_cast<unsigned long>(hi - lo)));
    for (long pos = hi - 1; pos >= lo; --pos) {
      BigInt d = scaled / pow_int(p_, static_cast<unsigned long>(pos - lo));
      d %= p_;
      if (!out.empty() && out.back() != '.' && p_ > 10) out += ':';
      out += d.get_str();
      if (pos == 0 && lo < 0) out += '.';
    }
    if (out.empty()) out = "0";
    return out;
  }

 private:
  PadicScalar() = default;

  long p_ = 2;
  long v_ = 0;
  BigInt u_;
  long n_ = 0;
  bool zero_ = true;
};

inline std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.str(); }

inline void check_prime(long p) { require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime"); }

inline void check_same_prime(const PadicScalar& a, const PadicScalar& b) {
  require(a.prime() == b.prime(), ErrorCode::PrimeMismatch,
          "p-adic operands over different primes");
}

/// Embeds num/den into Q_p with relative precision n.
inline PadicScalar padic_make(const BigInt& num, const BigInt& den, long p, long n) {
  require(den != 0, ErrorCode::ZeroDenominator, "zero denominator");
  check_prime(p);
  require(n >= 1, ErrorCode::InvalidArgument, "precision must be >= 1");
  if (num == 0) return PadicScalar::zero(p, n);
  const long vn = valuation(num, p);
  const long vd = valuation(den, p);
  const BigInt pn = pow_int(p, static_cast<unsigned long>(n));
  const BigInt u = mod(strip_p(num, p) * inverse_mod(strip_p(den, p), pn), pn);
  return PadicScalar::from_parts(p, vn - vd, u, n);
}

inline PadicScalar padic_make(const BigInt& num, long p, long n) { return padic_make(num, 1, p, n); }

/// Reduces x to absolute precision at most a.
inline PadicScalar padic_truncate(const PadicScalar& x, long a) {
  if (x.is_zero()) return PadicScalar::zero(x.prime(), std::min(a, x.absolute_precision()));
  if (x.valuation() >= a) return PadicScalar::zero(x.prime(), a);
  const long n = std::min(x.precision(), a - x.valuation());
  return PadicScalar::from_parts(x.prime(), x.valuation(), x.unit(), n);
}

inline PadicScalar padic_neg(const PadicScalar& a) {
  if (a.is_zero()) return a;
  return PadicScalar::from_parts(a.prime(), a.valuation(), a.modulus() - a.unit(), a.precision());
}

inline PadicScalar padic_add(const PadicScalar& a, const PadicScalar& b) {
  check_same_prime(a, b);
  const long p = a.prime();
  const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero()) return padic_truncate(b, abs_prec);
  if (b.is_zero()) return padic_truncate(a, abs_prec);
  const long w = std::min(a.valuation(), b.valuation());
  if (abs_prec <= w) return PadicScalar::zero(p, abs_prec);
  const BigInt m = pow_int(p, static_cast<unsigned long>(abs_prec - w));
  BigInt s = a.unit() * pow_int(p, static_cast<unsigned long>(a.valuation() - w)) +
             b.unit() * pow_int(p, static_cast<unsigned long>(b.valuation() - w));
  s = mod(s, m);
  if (s == 0) return PadicScalar::zero(p, abs_prec);
  const long vs = valuation(s, p);
  return PadicScalar::from_parts(p, w + vs, strip_p(s, p), abs_prec - w - vs);
}

inline PadicScalar padic_sub(const PadicScalar& a, const PadicScalar& b) { return padic_add(a, padic_neg(b)); }

inline PadicScalar padic_mul(const PadicScalar& a, const PadicScalar& b) {
  check_same_prime(a, b);
  const long p = a.prime();
  // O(p^A) times p^v u is O(p^(A+v)).
  if (a.is_zero() || b.is_zero()) return PadicScalar::zero(p, a.valuation() + b.valuation());
  const long n = std::min(a.precision(), b.precision());
  return PadicScalar::from_parts(p, a.valuation() + b.valuation(), a.unit() * b.unit(), n);
}

inline PadicScalar padic_inv(const PadicScalar& a) {
  require(!a.is_zero(), ErrorCode::ZeroInput, "inverse of a value that is zero to precision");
  return PadicScalar::from_parts(a.prime(), -a.valuation(), inverse_mod(a.unit(), a.modulus()),
                                 a.precision());
}

inline PadicScalar padic_div(const PadicScalar& a, const PadicScalar& b) { return padic_mul(a, padic_inv(b)); }

inline PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) { return padic_add(a, b); }
inline PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return padic_sub(a, b); }
inline PadicScalar operator-(const PadicScalar& a) { return padic_neg(a); }
inline PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) { return padic_mul(a, b); }
inline PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) { return padic_div(a, b); }

/// Number of p-adic digits on which a and b provably agree: min(v(a-b), A)
/// where A is the common absolute precision.
inline long agreement(const PadicScalar& a, const PadicScalar& b) {
  return padic_sub(a, b).valuation();
}

/// a == b mod p^k. Throws IndistinguishableAtPrecision if k exceeds what either
/// operand knows.
inline bool congruent(const PadicScalar& a, const PadicScalar& b, long k) {
  check_same_prime(a, b);
  if (k > a.absolute_precision() || k > b.absolute_precision())
    fail(ErrorCode::IndistinguishableAtPrecision,
         "requested p^" + std::to_string(k) + " but operands are known only to p^" +
             std::to_string(std::min(a.absolute_precision(), b.absolute_precision())));
  PadicScalar d = padic_sub(a, b);
  return d.is_zero() || d.valuation() >= k;
}

/// Equality at the common precision. Comparing a zero-to-precision value with
/// a nonzero value that is too small to tell apart raises
/// IndistinguishableAtPrecision instead of guessing.
inline bool padic_equal(const PadicScalar& a, const PadicScalar& b) {
  check_same_prime(a, b);
  if (a.is_zero() != b.is_zero()) {
    const PadicScalar& z = a.is_zero() ? a : b;
    const PadicScalar& x = a.is_zero() ? b : a;
    if (x.valuation() >= z.absolute_precision())
      fail(ErrorCode::IndistinguishableAtPrecision,
           x.str() + " cannot be distinguished from " + z.str());
    return false;
  }
  PadicScalar d = padic_sub(a, b);
  return d.is_zero();
}

/// Teichmueller representative of a unit: the (p-1)-st root of unity
/// congruent to a mod p (p odd); +-1 according to a mod 4 for p = 2.
inline PadicScalar padic_teichmuller(const PadicScalar& a) {
  require(!a.is_zero() && a.valuation() == 0, ErrorCode::NotAUnit, "Teichmueller lift of a non-unit");
  const long p = a.prime();
  const long n = a.precision();
  const BigInt m = a.modulus();
  if (p == 2) {
    if (n == 1 || mod(a.unit(), 4) == 1) return PadicScalar::from_parts(2, 0, 1, n);
    return PadicScalar::from_parts(2, 0, m - 1, n);
  }
  // x -> x^p is a contraction onto mu_{p-1}; N iterations reach the fixed point.
  BigInt x = a.unit();
  const BigInt pe = p;
  for (long i = 0; i < n + 1; ++i) {
    BigInt next = powm(x, pe, m);
    if (next == x) break;
    x = next;
  }
  return PadicScalar::from_parts(p, 0, x, n);
}

namespace detail {

inline long floor_log(long base, long x) {
  long k = 0;
  for (long t = x; t >= base; t /= base) ++k;
  return k;
}

/// log(1 + x) mod p^n by the Mercator series, for an integer x with
/// v_p(x) >= vx >= 1. Terms are carried with guard digits so that the
/// division by nu loses nothing below p^n.
inline BigInt log_one_plus(const BigInt& x, long p, long n, long vx) {
  long nu_max = 1;
  while (nu_max * vx - floor_log(p, nu_max) < n) ++nu_max;
  const long guard = floor_log(p, nu_max) + 2;
  const BigInt mk = pow_int(p, static_cast<unsigned long>(n + guard));
  const BigInt mn = pow_int(p, static_cast<unsigned long>(n));
  BigInt power = 1;
  BigInt sum = 0;
  for (long nu = 1; nu < nu_max; ++nu) {
    power = mod(power * x, mk);
    long k = 0;
    long rest = nu;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    BigInt term = power / pow_int(p, static_cast<unsigned long>(k));
    term = mod(term * inverse_mod(BigInt(rest), mk), mk);
    if (nu % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return mod(sum, mn);
}

}  // namespace detail

/// Iwasawa logarithm: log_p(p) = 0 and roots of unity map to 0. The result is
/// an element of Z_p known to absolute precision equal to the input's relative
/// precision.
inline PadicScalar padic_log(const PadicScalar& a) {
  require(!a.is_zero(), ErrorCode::ZeroInput, "log of a value that is zero to precision");
  const long p = a.prime();
  const long n = a.precision();
  const BigInt m = a.modulus();
  BigInt value;
  if (p == 2) {
    // log u = log(u^2) / 2 with u^2 in 1 + 8Z_2; u^2 is known mod 2^(n+1).
    const BigInt m1 = pow_int(2, static_cast<unsigned long>(n + 1));
    BigInt sq = mod(a.unit() * a.unit(), m1);
    BigInt x = sq - 1;
    BigInt l = x == 0 ? BigInt(0) : detail::log_one_plus(x, 2, n + 1, valuation(x, 2));
    value = l / 2;
  } else {
    PadicScalar unit = PadicScalar::from_parts(p, 0, a.unit(), n);
    PadicScalar omega = padic_teichmuller(unit);
    BigInt one_unit = mod(a.unit() * inverse_mod(omega.unit(), m), m);
    BigInt x = one_unit - 1;
    value = x == 0 ? BigInt(0) : detail::log_one_plus(x, p, n, valuation(x, p));
  }
  value = mod(value, m);
  if (value == 0) return PadicScalar::zero(p, n);
  const long v = valuation(value, p);
  return PadicScalar::from_parts(p, v, strip_p(value, p), n - v);
}

namespace detail {

/// Square root of a quadratic residue r mod an odd prime p (Tonelli-Shanks).
inline BigInt sqrt_mod_prime(const BigInt& r, long p) {
  const BigInt P = p;
  BigInt a = mod(r, P);
  if (a == 0) return 0;
  if (p % 4 == 3) return powm(a, (P + 1) / 4, P);
  BigInt q = P - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (powm(z, (P - 1) / 2, P) != P - 1) ++z;
  BigInt c = powm(z, q, P);
  BigInt x = powm(a, (q + 1) / 2, P);
  BigInt t = powm(a, q, P);
  long mm = s;
  while (t != 1) {
    long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, P);
      ++i;
    }
    BigInt b = c;
    for (long j = 0; j < mm - i - 1; ++j) b = mod(b * b, P);
    x = mod(x * b, P);
    c = mod(b * b, P);
    t = mod(t * c, P);
    mm = i;
  }
  return x;
}

}  // namespace detail

/// Square root in Q_p. Convention: for odd p the root is congruent to the
/// smaller of the two square roots mod p; for p = 2 it is 1 mod 4. For p = 2
/// one relative digit is lost.
inline PadicScalar padic_sqrt(const PadicScalar& a) {
  const long p = a.prime();
  if (a.is_zero()) return PadicScalar::zero(p, a.valuation() / 2);
  require(a.valuation() % 2 == 0, ErrorCode::NotASquare, "odd valuation");
  const long n = a.precision();
  const BigInt m = a.modulus();
  const BigInt& u = a.unit();
  if (p == 2) {
    const long check = std::min<long>(n, 3);
    require(mod(u - 1, pow_int(2, static_cast<unsigned long>(check))) == 0, ErrorCode::NotASquare,
            "unit part is not 1 mod 8");
    BigInt s = 1;
    for (long k = 3; k < n; ++k) {
      if (mod(s * s - u, pow_int(2, static_cast<unsigned long>(k + 1))) != 0)
        s += pow_int(2, static_cast<unsigned long>(k - 1));
    }
    const long out = std::max<long>(1, n - 1);
    return PadicScalar::from_parts(2, a.valuation() / 2, s, out);
  }
  const BigInt P = p;
  require(powm(u, (P - 1) / 2, P) == 1, ErrorCode::NotASquare, "unit part is not a residue mod p");
  BigInt s = detail::sqrt_mod_prime(u, p);
  if (2 * s > P) s = P - s;
  // Newton: s <- s - (s^2 - u) / (2s), doubling the precision each step.
  long k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    const BigInt mk = pow_int(p, static_cast<unsigned long>(k));
    s = mod(s - (s * s - u) * inverse_mod(2 * s, mk), mk);
  }
  return PadicScalar::from_parts(p, a.valuation() / 2, mod(s, m), n);
}

}  // namespace padent
