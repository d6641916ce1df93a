#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "padent/group_ring.hpp"

namespace padent {

// Text form of group ring elements.
//
//   input := poly | '[' row (',' row)* ']'      row := '[' poly (',' poly)* ']'
//   poly  := ['-'] term (('+' | '-') term)*
//   term  := int [['*'] mono] | mono
//   mono  := factor (['*'] factor)*             factor := var ['^' signed-int]
//   var   := t1..t9 | t | x | y | z             (t, x -> t1; y -> t2; z -> t3)
//
// Whitespace is insignificant. Words keep their factor order so the same text
// can be read over Z^d (exponents add) or over the Heisenberg group (x, y, z
// are the generators, multiplied left to right).

struct ParsedTerm {
  BigInt coeff;
  /// (variable index from 1, exponent) in textual order.
  std::vector<std::pair<int, long>> factors;
};

struct ParsedPoly {
  std::vector<ParsedTerm> terms;
};

struct ParsedInput {
  bool is_matrix = false;
  std::size_t rows = 1;
  std::vector<ParsedPoly> entries;  // row-major
  int max_var = 0;                  // largest variable index used, 0 if none
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  ParsedInput parse_input() {
    ParsedInput out;
    skip_ws();
    if (peek() == '[') {
      out.is_matrix = true;
      ++pos_;
      std::size_t cols = 0;
      out.rows = 0;
      do {
        expect('[');
        std::size_t n = 0;
        do {
          out.entries.push_back(parse_poly());
          ++n;
        } while (accept(','));
        expect(']');
        if (out.rows == 0) cols = n;
        require(n == cols, ErrorCode::DimensionInconsistent,
                "row " + std::to_string(out.rows + 1) + " has " + std::to_string(n) + " entries, expected " +
                    std::to_string(cols));
        ++out.rows;
      } while (accept(','));
      expect(']');
      require(out.rows == cols, ErrorCode::DimensionInconsistent, "matrix must be square");
    } else {
      out.entries.push_back(parse_poly());
    }
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    out.max_var = max_var_;
    return out;
  }

 private:
  ParsedPoly parse_poly() {
    ParsedPoly poly;
    bool negative = accept('-');
    for (;;) {
      ParsedTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      poly.terms.push_back(std::move(t));
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    return poly;
  }

  ParsedTerm parse_term() {
    ParsedTerm t;
    t.coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = BigInt(read_digits());
      if (!accept('*') && !is_var_start(peek())) return t;
    }
    t.factors.push_back(parse_factor());
    while (accept('*') || is_var_start(peek())) t.factors.push_back(parse_factor());
    return t;
  }

  std::pair<int, long> parse_factor() {
    skip_ws();
    const char c = peek();
    int var = 0;
    if (c == 't') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] >= '1' && s_[pos_] <= '9') {
        var = s_[pos_] - '0';
        ++pos_;
      } else {
        var = 1;
      }
    } else if (c == 'x') {
      ++pos_;
      var = 1;
    } else if (c == 'y') {
      ++pos_;
      var = 2;
    } else if (c == 'z') {
      ++pos_;
      var = 3;
    } else {
      error("expected a variable");
    }
    max_var_ = std::max(max_var_, var);
    long e = 1;
    if (accept('^')) {
      const bool paren = accept('(');
      bool neg = false;
      if (accept('-'))
        neg = true;
      else
        accept('+');
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an exponent");
      const std::string digits = read_digits();
      if (digits.size() > 15) error("exponent too large");
      e = std::stol(digits);
      if (neg) e = -e;
      if (paren) expect(')');
    }
    return {var, e};
  }

  static bool is_var_start(char c) { return c == 't' || c == 'x' || c == 'y' || c == 'z'; }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

inline LaurentPoly<BigInt> to_laurent(const ParsedPoly& poly, int dim) {
  const FreeAbelianGroup grp{dim};
  LaurentPoly<BigInt> out(grp);
  for (const auto& t : poly.terms) {
    auto e = grp.identity();
    for (const auto& [v, k] : t.factors) {
      require(v <= dim, ErrorCode::DimensionInconsistent, "variable t" + std::to_string(v) + " exceeds dimension");
      e[static_cast<std::size_t>(v - 1)] += k;
    }
    out.add_term(e, t.coeff);
  }
  return out;
}

inline HeisenbergElem<BigInt> to_heisenberg(const ParsedPoly& poly) {
  const HeisenbergGroup grp;
  HeisenbergElem<BigInt> out(grp);
  for (const auto& t : poly.terms) {
    auto g = grp.identity();
    for (const auto& [v, k] : t.factors) {
      require(v <= 3, ErrorCode::DimensionInconsistent, "Heisenberg words use x, y, z only");
      HeisenbergGroup::element power{0, 0, 0};  // generator^k
      power[static_cast<std::size_t>(v - 1)] = k;
      g = grp.mul(g, power);
    }
    out.add_term(g, t.coeff);
  }
  return out;
}

}  // namespace detail

inline ParsedInput parse_input(std::string_view text) { return detail::PolyParser(text).parse_input(); }

/// Dimension implied by the variables in the text (at least 1).
inline int implied_dim(const ParsedInput& in) { return std::max(1, in.max_var); }

/// Matrix over Z[Z^d]; dim <= 0 means the implied dimension. A bare
/// polynomial gives a 1x1 matrix.
inline RingMatrix<FreeAbelianGroup, BigInt> parse_laurent_matrix(std::string_view text, int dim = 0) {
  const ParsedInput in = parse_input(text);
  if (dim <= 0) dim = implied_dim(in);
  require(in.max_var <= dim, ErrorCode::DimensionInconsistent, "text uses more variables than the dimension");
  RingMatrix<FreeAbelianGroup, BigInt> out(FreeAbelianGroup{dim}, in.rows);
  for (std::size_t k = 0; k < in.entries.size(); ++k)
    out(k / in.rows, k % in.rows) = detail::to_laurent(in.entries[k], dim);
  return out;
}

inline LaurentPoly<BigInt> parse_poly(std::string_view text, int dim = 0) {
  const ParsedInput in = parse_input(text);
  require(!in.is_matrix, ErrorCode::DimensionInconsistent, "expected a polynomial, got a matrix");
  return detail::to_laurent(in.entries[0], dim > 0 ? dim : implied_dim(in));
}

inline RingMatrix<HeisenbergGroup, BigInt> parse_heisenberg_matrix(std::string_view text) {
  const ParsedInput in = parse_input(text);
  RingMatrix<HeisenbergGroup, BigInt> out(HeisenbergGroup{}, in.rows);
  for (std::size_t k = 0; k < in.entries.size(); ++k)
    out(k / in.rows, k % in.rows) = detail::to_heisenberg(in.entries[k]);
  return out;
}

inline HeisenbergElem<BigInt> parse_heisenberg(std::string_view text) {
  const ParsedInput in = parse_input(text);
  require(!in.is_matrix, ErrorCode::DimensionInconsistent, "expected a polynomial, got a matrix");
  return detail::to_heisenberg(in.entries[0]);
}

namespace detail {

inline void append_power(std::string& mono, const std::string& var, std::int64_t e) {
  if (e == 0) return;
  if (!mono.empty()) mono += '*';
  mono += var;
  if (e != 1) mono += '^' + std::to_string(e);
}

/// Joins (coefficient, monomial) pairs; an empty monomial is the identity.
inline std::string join_terms(const std::vector<std::pair<BigInt, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, mono] = terms[i];
    const bool neg = c < 0;
    const BigInt a = abs(c);
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace detail

/// Canonical form: terms by decreasing exponent vector (lexicographic), "t"
/// when d = 1 and t1..td otherwise.
inline std::string to_string(const LaurentPoly<BigInt>& f) {
  const int d = f.group().dim;
  std::vector<std::pair<BigInt, std::string>> terms;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string mono;
    for (int i = 0; i < d; ++i)
      detail::append_power(mono, d == 1 ? "t" : "t" + std::to_string(i + 1), it->first[static_cast<std::size_t>(i)]);
    terms.emplace_back(it->second, mono);
  }
  return detail::join_terms(terms);
}

/// Canonical form in the normal form x^a y^b z^k, where (a, b, c) = x^a y^b z^(c - ab).
inline std::string to_string(const HeisenbergElem<BigInt>& f) {
  std::vector<std::pair<BigInt, std::string>> terms;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [a, b, c] = it->first;
    std::string mono;
    detail::append_power(mono, "x", a);
    detail::append_power(mono, "y", b);
    detail::append_power(mono, "z", c - a * b);
    terms.emplace_back(it->second, mono);
  }
  return detail::join_terms(terms);
}

template <GroupPolicy G>
std::string to_string(const RingMatrix<G, BigInt>& F) {
  if (F.size() == 1) return to_string(F(0, 0));
  std::string out = "[";
  for (std::size_t i = 0; i < F.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < F.size(); ++j) out += (j ? ", " : "") + to_string(F(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace padent
