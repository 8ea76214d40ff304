#pragma once

// Finite symbolic descriptions of compact countable point sets.
//
// A Compactum is a finite list of Pieces. A Piece is either a single isolated
// point (Atom) or an apex point together with a sequence of annuli (Omega):
// annulus n holds prefix[n] for n < |prefix| and follows the tail rule
// afterwards. Tails are eventually-constant (Const) or follow a fundamental
// sequence (Fund); this class is closed under the constructions used here and
// represents every w^a*p+1 with a < epsilon_0.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbspace/ordinal.hpp"

namespace cbspace {

struct Piece;

struct Compactum {
  std::vector<Piece> pieces;  // empty = the empty set

  bool is_empty() const { return pieces.empty(); }
};

struct Tail {
  enum class Kind { None, Const, Fund };

  Kind kind = Kind::None;
  std::shared_ptr<const Compactum> body;  // Const: nonempty annulus content
  Ordinal lambda;                         // Fund: a limit ordinal

  static Tail none() { return Tail{}; }
  static Tail constant(Compactum c) {
    return Tail{Kind::Const, std::make_shared<const Compactum>(std::move(c)),
                {}};
  }
  static Tail fund(Ordinal lambda) {
    return Tail{Kind::Fund, nullptr, std::move(lambda)};
  }
};

struct Piece {
  enum class Kind { Atom, Omega };

  Kind kind = Kind::Atom;
  std::vector<Compactum> prefix;  // Omega only
  Tail tail;                      // Omega only

  static Piece atom() { return Piece{}; }
  static Piece omega(std::vector<Compactum> prefix, Tail tail);
};

// Path to a point: <piece index, annulus index, piece index, ...>; an Atom or
// an Omega apex is named by the path to its piece.
using Address = std::vector<int>;

class UnsupportedSchematic : public std::runtime_error {
 public:
  explicit UnsupportedSchematic(const std::string& what)
      : std::runtime_error(what) {}
};

class InvalidTree : public std::runtime_error {
 public:
  explicit InvalidTree(const std::string& what) : std::runtime_error(what) {}
};

// An Omega with no tail rule and nothing in its annuli is a lone point.
inline Piece Piece::omega(std::vector<Compactum> prefix, Tail tail) {
  if (tail.kind == Tail::Kind::None) {
    bool all_empty = true;
    for (const Compactum& c : prefix) {
      if (!c.is_empty()) {
        all_empty = false;
        break;
      }
    }
    if (all_empty) return Piece::atom();
  }
  Piece p;
  p.kind = Kind::Omega;
  p.prefix = std::move(prefix);
  p.tail = std::move(tail);
  return p;
}

inline Compactum union_of(const Compactum& k1, const Compactum& k2) {
  Compactum out = k1;
  out.pieces.insert(out.pieces.end(), k2.pieces.begin(), k2.pieces.end());
  return out;
}

inline Compactum singleton(Piece p) {
  Compactum k;
  k.pieces.push_back(std::move(p));
  return k;
}

// Canonical generator with cb_char(result) == (alpha, p):
// Atoms for rank 0, Const(canonical(beta,1)) annuli for a successor beta+1,
// Fund(alpha) annuli for a limit alpha.
inline Compactum canonical(const Ordinal& alpha, const Nat& p) {
  Compactum out;
  if (p == 0) return out;
  Piece piece;
  const Split s = split(alpha);
  switch (s.kind) {
    case Split::Kind::Zero:
      piece = Piece::atom();
      break;
    case Split::Kind::Successor:
      piece = Piece::omega({}, Tail::constant(canonical(s.predecessor, 1)));
      break;
    case Split::Kind::Limit:
      piece = Piece::omega({}, Tail::fund(alpha));
      break;
  }
  for (Nat i = 0; i < p; ++i) out.pieces.push_back(piece);
  return out;
}

inline std::vector<std::string> validate(const Compactum& k);

namespace detail {

inline void validate_piece(const Piece& p, std::vector<std::string>& out) {
  if (p.kind == Piece::Kind::Atom) return;
  switch (p.tail.kind) {
    case Tail::Kind::None: {
      bool all_empty = true;
      for (const Compactum& c : p.prefix) {
        if (!c.is_empty()) all_empty = false;
      }
      if (all_empty) {
        out.push_back("omega with none tail and all-empty prefix "
                      "should be an atom");
      }
      break;
    }
    case Tail::Kind::Const:
      if (!p.tail.body || p.tail.body->is_empty()) {
        out.push_back("const tail is empty");
      }
      break;
    case Tail::Kind::Fund:
      if (!is_limit(p.tail.lambda)) {
        out.push_back("fund tail requires a limit ordinal, got " +
                      print_ordinal(p.tail.lambda));
      }
      break;
  }
  for (const Compactum& c : p.prefix) {
    for (std::string& v : validate(c)) out.push_back(std::move(v));
  }
  if (p.tail.kind == Tail::Kind::Const && p.tail.body) {
    for (std::string& v : validate(*p.tail.body)) out.push_back(std::move(v));
  }
}

}  // namespace detail

inline std::vector<std::string> validate(const Compactum& k) {
  std::vector<std::string> out;
  for (const Piece& p : k.pieces) detail::validate_piece(p, out);
  return out;
}

inline Compactum derive(const Compactum& k);

namespace detail {

// Derived set of a single piece, as a compactum. An Atom vanishes. An Omega
// keeps its apex exactly when infinitely many annuli are nonempty, i.e. when
// the tail rule is Const; the annuli are derived in place (Lemma on derived
// sets of closed restrictions makes this annulus-wise computation sound).
inline Compactum derive_piece(const Piece& p) {
  if (p.kind == Piece::Kind::Atom) return Compactum{};
  if (p.tail.kind == Tail::Kind::Fund) {
    throw UnsupportedSchematic(
        "derive is not defined on fund tails; use cb_char for ranks");
  }
  std::vector<Compactum> dprefix;
  dprefix.reserve(p.prefix.size());
  for (const Compactum& c : p.prefix) dprefix.push_back(derive(c));
  if (p.tail.kind == Tail::Kind::None) {
    // Apex is isolated: only finitely many annuli are nonempty.
    Compactum out;
    for (Compactum& c : dprefix) {
      out.pieces.insert(out.pieces.end(), c.pieces.begin(), c.pieces.end());
    }
    return out;
  }
  Compactum dtail = derive(*p.tail.body);
  Tail tail = dtail.is_empty() ? Tail::none() : Tail::constant(std::move(dtail));
  return singleton(Piece::omega(std::move(dprefix), std::move(tail)));
}

}  // namespace detail

inline Compactum derive(const Compactum& k) {
  Compactum out;
  for (const Piece& p : k.pieces) {
    Compactum d = detail::derive_piece(p);
    out.pieces.insert(out.pieces.end(), d.pieces.begin(), d.pieces.end());
  }
  return out;
}

inline Compactum truncate(const Compactum& k, std::size_t depth);

namespace detail {

inline Piece truncate_piece(const Piece& p, std::size_t depth) {
  if (p.kind == Piece::Kind::Atom) return p;
  const std::size_t count = std::max(p.prefix.size(), depth);
  std::vector<Compactum> annuli;
  annuli.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Compactum content;
    if (n < p.prefix.size()) {
      content = p.prefix[n];
    } else if (p.tail.kind == Tail::Kind::Const) {
      content = *p.tail.body;
    } else if (p.tail.kind == Tail::Kind::Fund) {
      content = canonical(fund_seq(p.tail.lambda, n), 1);
    }
    annuli.push_back(truncate(content, depth));
  }
  return Piece::omega(std::move(annuli), Tail::none());
}

}  // namespace detail

// Finite view: materializes annuli 0..max(|prefix|, depth)-1 at every level
// and drops the tail rule. The result is Fund-free and finite.
inline Compactum truncate(const Compactum& k, std::size_t depth) {
  Compactum out;
  out.pieces.reserve(k.pieces.size());
  for (const Piece& p : k.pieces) {
    out.pieces.push_back(detail::truncate_piece(p, depth));
  }
  return out;
}

inline bool is_fund_free(const Compactum& k) {
  for (const Piece& p : k.pieces) {
    if (p.kind == Piece::Kind::Atom) continue;
    if (p.tail.kind == Tail::Kind::Fund) return false;
    for (const Compactum& c : p.prefix) {
      if (!is_fund_free(c)) return false;
    }
    if (p.tail.kind == Tail::Kind::Const && !is_fund_free(*p.tail.body)) {
      return false;
    }
  }
  return true;
}

inline bool is_truncated(const Compactum& k) {
  for (const Piece& p : k.pieces) {
    if (p.kind == Piece::Kind::Atom) continue;
    if (p.tail.kind != Tail::Kind::None) return false;
    for (const Compactum& c : p.prefix) {
      if (!is_truncated(c)) return false;
    }
  }
  return true;
}

}  // namespace cbspace
