#pragma once

// Exact rational arithmetic for the embedding geometry. Denominators are
// powers of two except where an interval is split into m equal pieces.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cbspace {

using Nat = boost::multiprecision::cpp_int;

struct Rat {
  Nat num = 0;
  Nat den = 1;  // always > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(Nat n) : num(std::move(n)) {}  // NOLINT: implicit from integers is handy
  Rat(Nat n, Nat d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Nat g = boost::multiprecision::gcd(num < 0 ? Nat(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

inline Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num * b.num, a.den * b.den);
}
inline Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw std::invalid_argument("division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}

inline bool operator==(const Rat& a, const Rat& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
inline bool operator<(const Rat& a, const Rat& b) {
  return a.num * b.den < b.num * a.den;
}
inline bool operator>(const Rat& a, const Rat& b) { return b < a; }
inline bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
inline bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

inline Rat abs(const Rat& a) {
  Rat r = a;
  if (r.num < 0) r.num = -r.num;
  return r;
}

inline std::string to_string(const Rat& a) {
  if (a.den == 1) return a.num.str();
  return a.num.str() + "/" + a.den.str();
}

// Parses "n" or "n/d"; used for CLI interval endpoints.
inline Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Nat(std::string(text)));
    }
    return Rat(Nat(std::string(text.substr(0, slash))),
               Nat(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
}

}  // namespace cbspace
