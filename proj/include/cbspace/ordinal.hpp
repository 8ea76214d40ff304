#pragma once

// Exact arithmetic for ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a finite list of terms (exponent, coefficient) with strictly
// decreasing exponents and coefficients >= 1; the empty list is 0. Exponents
// are themselves ordinals, so the representation is a well-founded tree.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbspace {

using Nat = boost::multiprecision::cpp_int;

enum class Comparison { Less, Equal, Greater };

class OrdinalParseError : public std::runtime_error {
 public:
  OrdinalParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotALimit : public std::runtime_error {
 public:
  NotALimit() : std::runtime_error("fund_seq requires a limit ordinal") {}
};

struct Ordinal {
  struct Term;

  std::vector<Term> terms;  // strictly decreasing exponents

  static Ordinal zero() { return Ordinal{}; }
  static Ordinal from_nat(const Nat& n);
  static Ordinal one() { return from_nat(1); }
  static Ordinal omega();

  bool is_zero() const { return terms.empty(); }
  // True for 0 and for naturals (single term with exponent 0).
  bool is_finite() const;
  // Value as a natural; valid only when is_finite().
  Nat as_nat() const;
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient;
};

inline Comparison compare(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Comparison ce = compare(a.terms[i].exponent, b.terms[i].exponent);
    if (ce != Comparison::Equal) return ce;
    if (a.terms[i].coefficient != b.terms[i].coefficient) {
      return a.terms[i].coefficient < b.terms[i].coefficient
                 ? Comparison::Less
                 : Comparison::Greater;
    }
  }
  if (a.terms.size() == b.terms.size()) return Comparison::Equal;
  return a.terms.size() < b.terms.size() ? Comparison::Less
                                         : Comparison::Greater;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Comparison::Equal;
}
inline bool operator!=(const Ordinal& a, const Ordinal& b) {
  return !(a == b);
}

inline bool Ordinal::is_finite() const {
  return terms.empty() ||
         (terms.size() == 1 && terms.front().exponent.is_zero());
}

inline Nat Ordinal::as_nat() const {
  if (terms.empty()) return 0;
  return terms.front().coefficient;
}

inline Ordinal Ordinal::from_nat(const Nat& n) {
  Ordinal o;
  if (n > 0) o.terms.push_back({Ordinal{}, n});
  return o;
}

inline Ordinal Ordinal::omega() {
  Ordinal o;
  o.terms.push_back({Ordinal::one(), 1});
  return o;
}

// CNF sum: terms of `a` below the leading exponent of `b` are absorbed.
inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms.front().exponent;
  Ordinal result;
  std::size_t i = 0;
  while (i < a.terms.size() &&
         compare(a.terms[i].exponent, lead) == Comparison::Greater) {
    result.terms.push_back(a.terms[i]);
    ++i;
  }
  result.terms.push_back(b.terms.front());
  if (i < a.terms.size() &&
      compare(a.terms[i].exponent, lead) == Comparison::Equal) {
    result.terms.back().coefficient += a.terms[i].coefficient;
  }
  result.terms.insert(result.terms.end(), b.terms.begin() + 1, b.terms.end());
  return result;
}

// a added to itself k times; only natural right factors are needed here.
inline Ordinal mul_nat(const Ordinal& a, const Nat& k) {
  if (k == 0 || a.is_zero()) return Ordinal::zero();
  Ordinal result = a;
  result.terms.front().coefficient *= k;
  return result;
}

inline Ordinal omega_pow(const Ordinal& e) {
  Ordinal o;
  o.terms.push_back({e, 1});
  return o;
}

struct Split {
  enum class Kind { Zero, Successor, Limit };
  Kind kind = Kind::Zero;
  Ordinal predecessor;  // meaningful for Successor only
};

inline Split split(const Ordinal& a) {
  if (a.is_zero()) return {Split::Kind::Zero, {}};
  if (!a.terms.back().exponent.is_zero()) return {Split::Kind::Limit, {}};
  Ordinal pred = a;
  if (--pred.terms.back().coefficient == 0) pred.terms.pop_back();
  return {Split::Kind::Successor, std::move(pred)};
}

inline bool is_limit(const Ordinal& a) {
  return split(a).kind == Split::Kind::Limit;
}

// Standard assignment of fundamental sequences below epsilon_0:
//   (delta + w^(gamma+1))[n] = delta + w^gamma * n
//   (delta + w^gamma)[n]     = delta + w^(gamma[n])   for gamma limit
// where delta is lambda minus one copy of its last CNF term.
inline Ordinal fund_seq(const Ordinal& lambda, unsigned long long n) {
  if (!is_limit(lambda)) throw NotALimit();
  Ordinal delta = lambda;
  const Ordinal gamma = delta.terms.back().exponent;
  if (--delta.terms.back().coefficient == 0) delta.terms.pop_back();
  const Split sg = split(gamma);
  if (sg.kind == Split::Kind::Successor) {
    return add(delta, mul_nat(omega_pow(sg.predecessor), Nat(n)));
  }
  return add(delta, omega_pow(fund_seq(gamma, n)));
}

struct CbPair {
  Ordinal rank;
  Nat count = 0;
};

inline bool operator==(const CbPair& a, const CbPair& b) {
  return a.rank == b.rank && a.count == b.count;
}
inline bool operator!=(const CbPair& a, const CbPair& b) { return !(a == b); }

// Characteristic of the compact ordinal space [0, o] with the order topology:
// the space w^e*c + r + 1 has e-th derivative of size c, and a finite o gives
// a discrete space of o+1 points.
inline CbPair ordinal_cb(const Ordinal& o) {
  if (o.is_finite()) return {Ordinal::zero(), o.as_nat() + 1};
  return {o.terms.front().exponent, o.terms.front().coefficient};
}

namespace detail {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  Ordinal parse_expr() {
    Ordinal value = parse_term();
    while (accept('+')) value = add(value, parse_term());
    return value;
  }

  Ordinal parse_term() {
    Ordinal value = parse_factor();
    if (accept('*')) value = mul_nat(value, parse_nat());
    return value;
  }

  Ordinal parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected factor");
    const char c = text_[pos_];
    if (c == 'w') {
      ++pos_;
      if (accept('^')) return omega_pow(parse_factor());
      return Ordinal::omega();
    }
    if (c >= '0' && c <= '9') return Ordinal::from_nat(parse_nat());
    if (c == '(') {
      ++pos_;
      Ordinal value = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    fail("expected 'w', number or '('");
  }

  Nat parse_nat() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
      fail("expected number");
    }
    Nat value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw OrdinalParseError(what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Accepts any expression of the grammar and normalizes it by evaluation,
// so non-CNF input like "1+w" comes back as "w".
inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse();
}

inline std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Ordinal::Term& t : a.terms) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::one()) {
      out += '^';
      // The exponent is a factor of the grammar exactly when it is a single
      // term with coefficient 1 or a bare natural; anything else needs parens.
      const bool factor =
          t.exponent.terms.size() == 1 &&
          (t.exponent.terms.front().coefficient == 1 ||
           t.exponent.terms.front().exponent.is_zero());
      if (factor) {
        out += print_ordinal(t.exponent);
      } else {
        out += '(';
        out += print_ordinal(t.exponent);
        out += ')';
      }
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
  return out;
}

// CNF well-formedness check, used by tests after every operation.
inline bool is_valid_cnf(const Ordinal& a) {
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].coefficient < 1) return false;
    if (!is_valid_cnf(a.terms[i].exponent)) return false;
    if (i + 1 < a.terms.size() &&
        compare(a.terms[i].exponent, a.terms[i + 1].exponent) !=
            Comparison::Greater) {
      return false;
    }
  }
  return true;
}

}  // namespace cbspace
