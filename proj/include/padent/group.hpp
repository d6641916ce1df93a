#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "padent/error.hpp"

namespace padent {

// Group policies. Each exposes an `element` type with a strict weak ordering
// plus identity(), mul(), inv(); group ring code is written against these.

/// Z^d written multiplicatively: elements are exponent vectors.
struct FreeAbelianGroup {
  using element = std::vector<std::int64_t>;

  int dim = 1;

  element identity() const { return element(static_cast<std::size_t>(dim), 0); }
  element mul(const element& a, const element& b) const {
    element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  }
  element inv(const element& a) const {
    element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
  }
  bool is_abelian() const { return true; }
  friend bool operator==(const FreeAbelianGroup& a, const FreeAbelianGroup& b) { return a.dim == b.dim; }
};

/// Discrete Heisenberg group of upper unitriangular integer 3x3 matrices.
/// (a, b, c) is [[1, a, c], [0, 1, b], [0, 0, 1]]; x = (1,0,0), y = (0,1,0),
/// z = (0,0,1) = [x, y].
struct HeisenbergGroup {
  using element = std::array<std::int64_t, 3>;

  element identity() const { return {0, 0, 0}; }
  element mul(const element& g, const element& h) const {
    return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
  }
  element inv(const element& g) const { return {-g[0], -g[1], g[0] * g[1] - g[2]}; }
  bool is_abelian() const { return false; }
  friend bool operator==(const HeisenbergGroup&, const HeisenbergGroup&) { return true; }

  static element x() { return {1, 0, 0}; }
  static element y() { return {0, 1, 0}; }
  static element z() { return {0, 0, 1}; }
};

/// Description of a finite quotient: cyclic(n), heisenberg(n) (unitriangular
/// 3x3 over Z/n), or a direct product. Elements of a product are indexed
/// row-major with the first factor most significant.
struct GroupDescriptor {
  enum class Kind { Cyclic, Heisenberg, Product };

  Kind kind = Kind::Cyclic;
  long n = 1;
  std::vector<GroupDescriptor> factors;

  static GroupDescriptor cyclic(long n) { return {Kind::Cyclic, n, {}}; }
  static GroupDescriptor heisenberg(long n) { return {Kind::Heisenberg, n, {}}; }
  static GroupDescriptor product(std::vector<GroupDescriptor> fs) { return {Kind::Product, 0, std::move(fs)}; }
  /// (Z/n1) x ... x (Z/nd).
  static GroupDescriptor torus(const std::vector<long>& moduli) {
    if (moduli.size() == 1) return cyclic(moduli[0]);
    std::vector<GroupDescriptor> fs;
    for (long m : moduli) fs.push_back(cyclic(m));
    return product(std::move(fs));
  }

  /// Order, saturating at cap + 1.
  std::uint64_t order(std::uint64_t cap = UINT64_MAX / 2) const {
    switch (kind) {
      case Kind::Cyclic: return static_cast<std::uint64_t>(n);
      case Kind::Heisenberg: {
        std::uint64_t m = static_cast<std::uint64_t>(n);
        if (m > 0 && m * m > cap / m) return cap + 1;
        return m * m * m;
      }
      case Kind::Product: {
        std::uint64_t m = 1;
        for (const auto& f : factors) {
          std::uint64_t k = f.order(cap);
          if (k != 0 && m > cap / k) return cap + 1;
          m *= k;
        }
        return m;
      }
    }
    return 0;
  }

  bool is_abelian() const {
    switch (kind) {
      case Kind::Cyclic: return true;
      case Kind::Heisenberg: return n == 1;
      case Kind::Product:
        for (const auto& f : factors)
          if (!f.is_abelian()) return false;
        return true;
    }
    return true;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Cyclic: return "C" + std::to_string(n);
      case Kind::Heisenberg: return "H" + std::to_string(n);
      case Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].str();
        return s;
      }
    }
    return "?";
  }

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.kind == b.kind && a.n == b.n && a.factors == b.factors;
  }
};

/// An explicit finite group on elements 0..m-1.
///
/// Multiplication follows the descriptor's structure; a full m x m table is
/// materialized when m <= kTableLimit. Group laws are verified on
/// construction: exhaustively for m <= 512, by seeded random spot checks above.
class FiniteGroup {
 public:
  using element = std::uint32_t;

  static constexpr std::uint64_t kDefaultOrderCap = 100000;
  static constexpr std::uint64_t kTableLimit = 4096;

  explicit FiniteGroup(GroupDescriptor desc, std::uint64_t order_cap = kDefaultOrderCap) {
    validate(desc);
    const std::uint64_t m = desc.order(order_cap);
    require(m <= order_cap, ErrorCode::OrderOverflow,
            desc.str() + " exceeds the order cap " + std::to_string(order_cap));
    auto data = std::make_shared<Data>();
    data->desc = std::move(desc);
    data->order = static_cast<std::uint32_t>(m);
    data->abelian = data->desc.is_abelian();
    data_ = data;
    if (m <= kTableLimit) {
      data->table.resize(static_cast<std::size_t>(m * m));
      for (element a = 0; a < m; ++a)
        for (element b = 0; b < m; ++b) data->table[a * m + b] = structural_mul(data_->desc, a, b);
    }
    data->inverse.resize(m);
    for (element a = 0; a < m; ++a) data->inverse[a] = structural_inv(data_->desc, a);
    verify();
  }

  std::uint32_t order() const { return data_->order; }
  const GroupDescriptor& descriptor() const { return data_->desc; }
  element identity() const { return 0; }
  element mul(element a, element b) const {
    if (!data_->table.empty()) return data_->table[static_cast<std::size_t>(a) * data_->order + b];
    return structural_mul(data_->desc, a, b);
  }
  element inv(element a) const { return data_->inverse[a]; }
  bool is_abelian() const { return data_->abelian; }
  bool has_table() const { return !data_->table.empty(); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->desc == b.data_->desc;
  }

  /// Size of the center, by brute force; used to check Heisenberg quotients.
  std::uint32_t center_order() const {
    std::uint32_t c = 0;
    for (element a = 0; a < order(); ++a) {
      bool central = true;
      for (element b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
      c += central ? 1 : 0;
    }
    return c;
  }

 private:
  struct Data {
    GroupDescriptor desc;
    std::uint32_t order = 1;
    bool abelian = true;
    std::vector<element> table;
    std::vector<element> inverse;
  };

  static void validate(const GroupDescriptor& d) {
    switch (d.kind) {
      case GroupDescriptor::Kind::Cyclic:
      case GroupDescriptor::Kind::Heisenberg:
        require(d.n >= 1, ErrorCode::InvalidQuotient, "modulus must be >= 1");
        break;
      case GroupDescriptor::Kind::Product:
        require(!d.factors.empty(), ErrorCode::InvalidQuotient, "empty product");
        for (const auto& f : d.factors) validate(f);
        break;
    }
  }

  static std::uint64_t structural_mul(const GroupDescriptor& d, std::uint64_t a, std::uint64_t b) {
    switch (d.kind) {
      case GroupDescriptor::Kind::Cyclic: return (a + b) % static_cast<std::uint64_t>(d.n);
      case GroupDescriptor::Kind::Heisenberg: {
        const std::uint64_t n = static_cast<std::uint64_t>(d.n);
        const std::uint64_t a0 = a / (n * n), a1 = (a / n) % n, a2 = a % n;
        const std::uint64_t b0 = b / (n * n), b1 = (b / n) % n, b2 = b % n;
        return (((a0 + b0) % n) * n + (a1 + b1) % n) * n + (a2 + b2 + a0 * b1) % n;
      }
      case GroupDescriptor::Kind::Product: {
        std::uint64_t result = 0;
        std::uint64_t stride = 1;
        for (std::size_t i = d.factors.size(); i-- > 0;) {
          const std::uint64_t k = d.factors[i].order();
          const std::uint64_t ai = (a / stride) % k, bi = (b / stride) % k;
          result += structural_mul(d.factors[i], ai, bi) * stride;
          stride *= k;
        }
        return result;
      }
    }
    return 0;
  }

  static std::uint64_t structural_inv(const GroupDescriptor& d, std::uint64_t a) {
    switch (d.kind) {
      case GroupDescriptor::Kind::Cyclic: {
        const std::uint64_t n = static_cast<std::uint64_t>(d.n);
        return (n - a % n) % n;
      }
      case GroupDescriptor::Kind::Heisenberg: {
        const std::uint64_t n = static_cast<std::uint64_t>(d.n);
        const std::uint64_t a0 = a / (n * n), a1 = (a / n) % n, a2 = a % n;
        const std::uint64_t i0 = (n - a0) % n, i1 = (n - a1) % n;
        const std::uint64_t i2 = ((a0 * a1) % n + n - a2) % n;
        return (i0 * n + i1) * n + i2;
      }
      case GroupDescriptor::Kind::Product: {
        std::uint64_t result = 0;
        std::uint64_t stride = 1;
        for (std::size_t i = d.factors.size(); i-- > 0;) {
          const std::uint64_t k = d.factors[i].order();
          result += structural_inv(d.factors[i], (a / stride) % k) * stride;
          stride *= k;
        }
        return result;
      }
    }
    return 0;
  }

  void verify() const {
    const element m = order();
    auto check_triple = [&](element a, element b, element c) {
      require(mul(mul(a, b), c) == mul(a, mul(b, c)), ErrorCode::InvalidQuotient,
              "associativity fails in " + descriptor().str());
    };
    for (element a = 0; a < m; ++a) {
      require(mul(a, 0) == a && mul(0, a) == a, ErrorCode::InvalidQuotient, "identity law fails");
      require(mul(a, inv(a)) == 0 && mul(inv(a), a) == 0, ErrorCode::InvalidQuotient, "inverse law fails");
    }
    if (m <= 512) {
      for (element a = 0; a < m; ++a)
        for (element b = 0; b < m; ++b)
          for (element c = 0; c < m; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<element> pick(0, m - 1);
      for (int i = 0; i < 20000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
    }
  }

  std::shared_ptr<const Data> data_;
};

inline FiniteGroup build_quotient_group(const GroupDescriptor& desc,
                                        std::uint64_t order_cap = FiniteGroup::kDefaultOrderCap) {
  return FiniteGroup(desc, order_cap);
}

/// Reduction Z^d -> (Z/n1) x ... x (Z/nd), i.e. the quotient by n1 Z x ... x nd Z.
class TorusQuotient {
 public:
  explicit TorusQuotient(std::vector<long> moduli) : moduli_(std::move(moduli)), group_(make(moduli_)) {}

  const FiniteGroup& group() const { return group_; }
  const std::vector<long>& moduli() const { return moduli_; }
  std::uint64_t index() const { return group_.order(); }

  FiniteGroup::element project(const FreeAbelianGroup::element& e) const {
    require(e.size() == moduli_.size(), ErrorCode::DimensionMismatch, "exponent dimension differs from quotient");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::int64_t n = moduli_[i];
      std::int64_t r = e[i] % n;
      if (r < 0) r += n;
      idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r);
    }
    return static_cast<FiniteGroup::element>(idx);
  }

 private:
  static FiniteGroup make(const std::vector<long>& moduli) {
    require(!moduli.empty(), ErrorCode::InvalidQuotient, "empty modulus vector");
    for (long n : moduli) require(n >= 1, ErrorCode::InvalidQuotient, "modulus must be >= 1");
    return FiniteGroup(GroupDescriptor::torus(moduli));
  }

  std::vector<long> moduli_;
  FiniteGroup group_;
};

/// Reduction of the Heisenberg group mod n (congruence kernel).
class HeisenbergQuotient {
 public:
  explicit HeisenbergQuotient(long n) : n_(n), group_(make(n)) {}

  const FiniteGroup& group() const { return group_; }
  long modulus() const { return n_; }
  std::uint64_t index() const { return group_.order(); }

  FiniteGroup::element project(const HeisenbergGroup::element& e) const {
    auto r = [&](std::int64_t v) {
      std::int64_t t = v % n_;
      return static_cast<std::uint64_t>(t < 0 ? t + n_ : t);
    };
    const std::uint64_t n = static_cast<std::uint64_t>(n_);
    return static_cast<FiniteGroup::element>((r(e[0]) * n + r(e[1])) * n + r(e[2]));
  }

 private:
  static FiniteGroup make(long n) {
    require(n >= 1, ErrorCode::InvalidQuotient, "modulus must be >= 1");
    return FiniteGroup(GroupDescriptor::heisenberg(n));
  }

  long n_;
  FiniteGroup group_;
};

}  // namespace padent
