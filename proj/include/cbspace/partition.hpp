#pragma once

// Model spaces and the homeomorphism-class partition at desk scale:
// realizing characteristics, enumerating realized pairs within bounds, and
// symbolic class-count summaries.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbspace/cb.hpp"
#include "cbspace/compactum.hpp"
#include "cbspace/ordinal.hpp"

namespace cbspace {

struct ModelSpace {
  enum class Kind {
    FiniteDiscrete,
    CountableDiscrete,
    DyadicInterval,
    UncountableDiscrete,
  };

  Kind kind = Kind::FiniteDiscrete;
  Nat n = 0;  // FiniteDiscrete carrier size

  static ModelSpace finite_discrete(Nat n) {
    return {Kind::FiniteDiscrete, std::move(n)};
  }
  static ModelSpace countable_discrete() { return {Kind::CountableDiscrete, 0}; }
  static ModelSpace dyadic_interval() { return {Kind::DyadicInterval, 0}; }
  static ModelSpace uncountable_discrete() {
    return {Kind::UncountableDiscrete, 0};
  }
};

struct RealizeResult {
  std::optional<Compactum> witness;
  std::string reason;  // set when not realizable

  bool ok() const { return witness.has_value(); }
};

// Witness compactum with cb_char(witness) == target, when the model space
// admits one. Compacta of a discrete space are exactly its finite subsets, so
// discrete models realize rank-0 pairs only.
inline RealizeResult realize(const ModelSpace& space, const CbPair& target) {
  switch (space.kind) {
    case ModelSpace::Kind::FiniteDiscrete:
      if (!target.rank.is_zero()) {
        return {std::nullopt,
                "compacta of a discrete space are finite, so every positive "
                "rank is unrealizable"};
      }
      if (target.count > space.n) {
        return {std::nullopt, "carrier has only " + space.n.str() + " points"};
      }
      return {canonical(Ordinal::zero(), target.count), {}};
    case ModelSpace::Kind::CountableDiscrete:
    case ModelSpace::Kind::UncountableDiscrete:
      if (!target.rank.is_zero()) {
        return {std::nullopt,
                "compacta of a discrete space are finite, so every positive "
                "rank is unrealizable"};
      }
      return {canonical(Ordinal::zero(), target.count), {}};
    case ModelSpace::Kind::DyadicInterval:
      if (target.rank.is_zero() || target.count >= 1) {
        return {canonical(target.rank, target.count), {}};
      }
      return {std::nullopt, "positive rank requires count >= 1"};
  }
  return {std::nullopt, "unknown model space"};
}

struct ClassSummary {
  enum class TotalKind { Finite, CountablyInfinite, Aleph1 };

  std::vector<CbPair> realized;
  TotalKind total = TotalKind::Finite;
  Nat total_finite = 0;  // meaningful when total == Finite
};

namespace detail {

// Deterministic desk-scale sample of candidate ranks: CNF values
// w^e*c + m with e in 0..3, c in 1..3, m in 0..2, plus 0, deduplicated and
// sorted. Realized sets are reported against this sample.
inline std::vector<Ordinal> rank_sample(const Ordinal& rank_bound) {
  std::vector<Ordinal> out;
  out.push_back(Ordinal::zero());
  for (unsigned e = 0; e <= 3; ++e) {
    for (unsigned c = 1; c <= 3; ++c) {
      for (unsigned m = 0; m <= 2; ++m) {
        const Ordinal value =
            add(mul_nat(omega_pow(Ordinal::from_nat(e)), c),
                Ordinal::from_nat(m));
        if (compare(value, rank_bound) != Comparison::Greater) {
          bool seen = false;
          for (const Ordinal& o : out) {
            if (o == value) seen = true;
          }
          if (!seen) out.push_back(value);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Ordinal& x, const Ordinal& y) {
    return compare(x, y) == Comparison::Less;
  });
  return out;
}

}  // namespace detail

// Realized characteristics within the bounds, plus the symbolic class count
// of the whole space. Transfinite totals are tags, never computed.
inline ClassSummary cb_image(const ModelSpace& space, const Ordinal& rank_bound,
                             const Nat& count_bound) {
  ClassSummary out;
  for (const Ordinal& rank : detail::rank_sample(rank_bound)) {
    for (Nat count = 0; count <= count_bound; ++count) {
      const CbPair target{rank, count};
      if (realize(space, target).ok()) out.realized.push_back(target);
    }
  }
  switch (space.kind) {
    case ModelSpace::Kind::FiniteDiscrete:
      // Classes are the subset sizes 0..n: n+1 of them. (Enumeration includes
      // the full carrier, one more than the n sometimes quoted.)
      out.total = ClassSummary::TotalKind::Finite;
      out.total_finite = space.n + 1;
      break;
    case ModelSpace::Kind::CountableDiscrete:
    case ModelSpace::Kind::UncountableDiscrete:
      out.total = ClassSummary::TotalKind::CountablyInfinite;
      break;
    case ModelSpace::Kind::DyadicInterval:
      out.total = ClassSummary::TotalKind::Aleph1;
      break;
  }
  return out;
}

// Class function induced by the characteristic; representative independence
// is exactly what the equivalence tests exercise.
inline CbPair cb_tilde(const Compactum& k) { return cb_char(k); }

}  // namespace cbspace
