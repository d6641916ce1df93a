#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <vector>

#include "padent/bigint.hpp"
#include "padent/group.hpp"

namespace padent {

template <class G>
concept GroupPolicy = requires(const G g, const typename G::element& a) {
  { g.identity() } -> std::convertible_to<typename G::element>;
  { g.mul(a, a) } -> std::convertible_to<typename G::element>;
  { g.inv(a) } -> std::convertible_to<typename G::element>;
  { a < a } -> std::convertible_to<bool>;
};

/// A finitely supported element sum_g a_g g of C[G]. No zero coefficients are
/// stored and terms are kept in the group's element order, so equal elements
/// compare and serialize identically.
template <GroupPolicy G, class C = BigInt>
class GroupRingElem {
 public:
  using element = typename G::element;
  using coeff_type = C;
  using group_type = G;

  explicit GroupRingElem(G group) : group_(std::move(group)) {}

  static GroupRingElem constant(G group, const C& c) {
    GroupRingElem f(group);
    f.add_term(f.group_.identity(), c);
    return f;
  }
  static GroupRingElem monomial(G group, element g, const C& c = C(1)) {
    GroupRingElem f(std::move(group));
    f.add_term(std::move(g), c);
    return f;
  }

  const G& group() const { return group_; }
  const std::map<element, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const element& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? C(0) : it->second;
  }
  /// Coefficient of the identity: the trace functional tr_G.
  C constant_term() const { return coeff(group_.identity()); }

  void add_term(const element& g, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    check_compatible(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    check_compatible(o);
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  GroupRingElem& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
  }

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator-(GroupRingElem a) {
    for (auto& [g, c] : a.terms_) c = -c;
    return a;
  }
  friend GroupRingElem operator*(GroupRingElem a, const C& s) { return a *= s; }
  friend GroupRingElem operator*(const C& s, GroupRingElem a) { return a *= s; }

  /// Convolution product (sum over g'g'' = g).
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.check_compatible(b);
    GroupRingElem out(a.group_);
    for (const auto& [g, x] : a.terms_)
      for (const auto& [h, y] : b.terms_) out.add_term(a.group_.mul(g, h), x * y);
    return out;
  }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

  /// Coefficientwise reduction into [0, m); drops terms that vanish.
  GroupRingElem reduced_mod(const BigInt& m) const
    requires std::same_as<C, BigInt>
  {
    GroupRingElem out(group_);
    for (const auto& [g, c] : terms_) out.add_term(g, mod(c, m));
    return out;
  }

  /// Image under a group homomorphism `proj` into the group `target`.
  template <GroupPolicy H, class Proj>
  GroupRingElem<H, C> map_group(const H& target, Proj&& proj) const {
    GroupRingElem<H, C> out(target);
    for (const auto& [g, c] : terms_) out.add_term(proj(g), c);
    return out;
  }

 private:
  void check_compatible(const GroupRingElem& o) const {
    require(group_ == o.group_, ErrorCode::DimensionMismatch, "group ring elements over different groups");
  }

  G group_;
  std::map<element, C> terms_;
};

template <class C = BigInt>
using LaurentPoly = GroupRingElem<FreeAbelianGroup, C>;
template <class C = BigInt>
using HeisenbergElem = GroupRingElem<HeisenbergGroup, C>;
template <class C = BigInt>
using FiniteGroupRingElem = GroupRingElem<FiniteGroup, C>;

/// The involution f* = sum a_{g^-1} g on scalar coefficients.
template <GroupPolicy G, class C>
GroupRingElem<G, C> involution(const GroupRingElem<G, C>& f) {
  GroupRingElem<G, C> out(f.group());
  for (const auto& [g, c] : f.terms()) out.add_term(f.group().inv(g), c);
  return out;
}

/// Minimal p-adic valuation of the coefficients; nullopt for 0.
template <GroupPolicy G>
std::optional<long> min_valuation(const GroupRingElem<G, BigInt>& f, long p) {
  std::optional<long> v;
  for (const auto& [g, c] : f.terms()) {
    long w = valuation(c, p);
    if (!v || w < *v) v = w;
  }
  return v;
}

template <GroupPolicy G>
std::optional<long> min_valuation(const GroupRingElem<G, BigRational>& f, long p) {
  std::optional<long> v;
  for (const auto& [g, c] : f.terms()) {
    long w = valuation(c.get_num(), p) - valuation(c.get_den(), p);
    if (!v || w < *v) v = w;
  }
  return v;
}

/// p^-v as an exact rational (v may be negative); 0 for nullopt.
inline BigRational norm_from_valuation(std::optional<long> v, long p) {
  if (!v) return 0;
  BigInt pv = pow_int(p, static_cast<unsigned long>(*v < 0 ? -*v : *v));
  BigRational r = *v >= 0 ? BigRational(BigInt(1), pv) : BigRational(pv);
  r.canonicalize();
  return r;
}

/// sup_g |a_g|_p.
template <GroupPolicy G, class C>
BigRational sup_norm(const GroupRingElem<G, C>& f, long p) {
  return norm_from_valuation(min_valuation(f, p), p);
}

/// r x r matrix over a group ring.
template <GroupPolicy G, class C = BigInt>
class RingMatrix {
 public:
  using entry_type = GroupRingElem<G, C>;

  RingMatrix(G group, std::size_t r) : group_(std::move(group)), r_(r), entries_(r * r, entry_type(group_)) {
    require(r >= 1, ErrorCode::InvalidArgument, "matrix size must be >= 1");
  }

  static RingMatrix identity(G group, std::size_t r) {
    RingMatrix m(std::move(group), r);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = entry_type::constant(m.group_, C(1));
    return m;
  }
  static RingMatrix scalar(entry_type f) {
    RingMatrix m(f.group(), 1);
    m(0, 0) = std::move(f);
    return m;
  }

  const G& group() const { return group_; }
  std::size_t size() const { return r_; }

  entry_type& operator()(std::size_t i, std::size_t j) { return entries_[i * r_ + j]; }
  const entry_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * r_ + j]; }
  const std::vector<entry_type>& entries() const { return entries_; }

  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) {
    a.check_compatible(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) {
    a.check_compatible(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
  }
  friend RingMatrix operator*(RingMatrix a, const C& s) {
    for (auto& e : a.entries_) e *= s;
    return a;
  }
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    a.check_compatible(b);
    RingMatrix out(a.group_, a.r_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.r_; ++k) {
        const entry_type& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < a.r_; ++j) {
          const entry_type& y = b(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    return out;
  }
  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.r_ == b.r_ && a.entries_ == b.entries_;
  }

  /// Matrix trace as a group ring element.
  entry_type trace() const {
    entry_type t(group_);
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

  RingMatrix reduced_mod(const BigInt& m) const
    requires std::same_as<C, BigInt>
  {
    RingMatrix out(group_, r_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].reduced_mod(m);
    return out;
  }

  template <GroupPolicy H, class Proj>
  RingMatrix<H, C> map_group(const H& target, Proj&& proj) const {
    RingMatrix<H, C> out(target, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) out(i, j) = (*this)(i, j).map_group(target, proj);
    return out;
  }

 private:
  void check_compatible(const RingMatrix& o) const {
    require(r_ == o.r_, ErrorCode::DimensionMismatch, "matrix sizes differ");
    require(group_ == o.group_, ErrorCode::DimensionMismatch, "matrices over different groups");
  }

  G group_;
  std::size_t r_;
  std::vector<entry_type> entries_;
};

/// f* = sum a^T_{g^-1} g: entries inverted and blocks transposed.
template <GroupPolicy G, class C>
RingMatrix<G, C> involution(const RingMatrix<G, C>& f) {
  RingMatrix<G, C> out(f.group(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out(i, j) = involution(f(j, i));
  return out;
}

/// max_ij ||a_ij||.
template <GroupPolicy G, class C>
BigRational sup_norm(const RingMatrix<G, C>& f, long p) {
  std::optional<long> v;
  for (const auto& e : f.entries()) {
    auto w = min_valuation(e, p);
    if (w && (!v || *w < *v)) v = w;
  }
  return norm_from_valuation(v, p);
}

template <GroupPolicy G, class C>
std::optional<long> min_valuation(const RingMatrix<G, C>& f, long p) {
  std::optional<long> v;
  for (const auto& e : f.entries()) {
    auto w = min_valuation(e, p);
    if (w && (!v || *w < *v)) v = w;
  }
  return v;
}

/// f - 1 for a square matrix over a group ring.
template <GroupPolicy G, class C>
RingMatrix<G, C> minus_identity(const RingMatrix<G, C>& f) {
  return f - RingMatrix<G, C>::identity(f.group(), f.size());
}

// Reduction maps to finite quotients.

template <class C>
RingMatrix<FiniteGroup, C> reduce_to_quotient(const RingMatrix<FreeAbelianGroup, C>& f, const TorusQuotient& q) {
  require(static_cast<std::size_t>(f.group().dim) == q.moduli().size(), ErrorCode::InvalidQuotient,
          "quotient has " + std::to_string(q.moduli().size()) + " moduli for dimension " +
              std::to_string(f.group().dim));
  return f.map_group(q.group(), [&](const FreeAbelianGroup::element& e) { return q.project(e); });
}

template <class C>
GroupRingElem<FiniteGroup, C> reduce_to_quotient(const GroupRingElem<FreeAbelianGroup, C>& f, const TorusQuotient& q) {
  return reduce_to_quotient(RingMatrix<FreeAbelianGroup, C>::scalar(f), q)(0, 0);
}

template <class C>
RingMatrix<FiniteGroup, C> reduce_to_quotient(const RingMatrix<HeisenbergGroup, C>& f, const HeisenbergQuotient& q) {
  return f.map_group(q.group(), [&](const HeisenbergGroup::element& e) { return q.project(e); });
}

template <class C>
GroupRingElem<FiniteGroup, C> reduce_to_quotient(const GroupRingElem<HeisenbergGroup, C>& f,
                                                 const HeisenbergQuotient& q) {
  return reduce_to_quotient(RingMatrix<HeisenbergGroup, C>::scalar(f), q)(0, 0);
}

}  // namespace padent
