#pragma once

// Cantor-Bendixson characteristic, classification onto w^a*p+1, the
// block-sum homeomorphism labeling, equivalence, and the metric epsilon
// derivative used as an independent oracle.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "cbspace/compactum.hpp"
#include "cbspace/ordinal.hpp"
#include "cbspace/rational.hpp"

namespace cbspace {

namespace detail {

inline CbPair cb_char_unchecked(const Compactum& k);

inline CbPair cb_char_piece(const Piece& p) {
  if (p.kind == Piece::Kind::Atom) return {Ordinal::zero(), 1};
  // Threshold at which the apex stops surviving derivation.
  Ordinal sigma;
  switch (p.tail.kind) {
    case Tail::Kind::None:
      sigma = Ordinal::zero();
      break;
    case Tail::Kind::Const:
      sigma = add(cb_char_unchecked(*p.tail.body).rank, Ordinal::one());
      break;
    case Tail::Kind::Fund:
      sigma = p.tail.lambda;
      break;
  }
  Ordinal rank = sigma;
  Nat count = 1;  // the apex, while rank == sigma
  for (const Compactum& c : p.prefix) {
    const CbPair pc = cb_char_unchecked(c);
    if (c.is_empty()) continue;
    const Comparison cmp = compare(pc.rank, rank);
    if (cmp == Comparison::Greater) {
      rank = pc.rank;
      count = pc.count;
    } else if (cmp == Comparison::Equal) {
      count += pc.count;
    }
  }
  return {std::move(rank), std::move(count)};
}

inline CbPair cb_char_unchecked(const Compactum& k) {
  CbPair out{Ordinal::zero(), 0};
  for (const Piece& p : k.pieces) {
    CbPair pc = cb_char_piece(p);
    const Comparison cmp = compare(pc.rank, out.rank);
    if (cmp == Comparison::Greater) {
      out = std::move(pc);
    } else if (cmp == Comparison::Equal) {
      out.count += pc.count;
    }
  }
  return out;
}

inline void require_valid(const Compactum& k) {
  const std::vector<std::string> violations = validate(k);
  if (!violations.empty()) throw InvalidTree(violations.front());
}

}  // namespace detail

// The characteristic (a, p): least a with the a-th derivative finite, paired
// with the size of that derivative. Computed by structural recursion; always
// terminates with rank < epsilon_0.
inline CbPair cb_char(const Compactum& k) {
  detail::require_valid(k);
  return detail::cb_char_unchecked(k);
}

// Homeomorphism type: the ordinal p for a p-point discrete space, and
// w^a*p + 1 when the rank a is positive.
inline Ordinal classify(const Compactum& k) {
  const CbPair cb = cb_char(k);
  if (cb.rank.is_zero()) return Ordinal::from_nat(cb.count);
  return add(mul_nat(omega_pow(cb.rank), cb.count), Ordinal::one());
}

// Characteristic equality is complete for homeomorphism on this class.
inline bool equivalent(const Compactum& k1, const Compactum& k2) {
  return cb_char(k1) == cb_char(k2);
}

struct Labeling {
  struct Entry {
    Address address;
    Ordinal label;
  };
  std::vector<Entry> entries;  // in address order; covers truncate(k, depth)
  Ordinal top;                 // maximum label of the untruncated tree
};

namespace detail {

// Maximum label of a piece/compactum under the block-sum labeling: the label
// set of a nonempty compactum is exactly [0, max_label].
inline Ordinal max_label_compactum(const Compactum& k);

inline Ordinal max_label_piece(const Piece& p) {
  if (p.kind == Piece::Kind::Atom) return Ordinal::zero();
  // Chain the prefix blocks, then take the sup contributed by the tail; the
  // apex is labeled by that sup.
  Ordinal offset;
  for (const Compactum& c : p.prefix) {
    if (c.is_empty()) continue;
    offset = add(add(offset, max_label_compactum(c)), Ordinal::one());
  }
  switch (p.tail.kind) {
    case Tail::Kind::None:
      return offset;
    case Tail::Kind::Const: {
      // Blocks of order type M+1 repeat forever: sup = offset + w^(e+1)
      // where e is the leading exponent of M+1.
      const Ordinal m = add(max_label_compactum(*p.tail.body), Ordinal::one());
      const Ordinal lead = m.terms.front().exponent;
      return add(offset, omega_pow(add(lead, Ordinal::one())));
    }
    case Tail::Kind::Fund:
      // Blocks w^(lambda[n]) are cofinal below w^lambda.
      return add(offset, omega_pow(p.tail.lambda));
  }
  return offset;  // unreachable
}

inline Ordinal max_label_compactum(const Compactum& k) {
  Ordinal out;
  bool first = true;
  for (const Piece& p : k.pieces) {
    if (!first) out = add(out, Ordinal::one());
    out = add(out, max_label_piece(p));
    first = false;
  }
  return out;
}

inline void label_compactum(const Compactum& k, std::size_t depth,
                            const Ordinal& offset, Address& address,
                            std::vector<Labeling::Entry>& out);

inline void label_piece(const Piece& p, std::size_t depth,
                        const Ordinal& offset, Address& address,
                        std::vector<Labeling::Entry>& out) {
  if (p.kind == Piece::Kind::Atom) {
    out.push_back({address, offset});
    return;
  }
  // Annulus blocks in annulus order; block offsets use the symbolic order
  // type of each block, so truncation does not disturb later labels.
  Ordinal block_offset = offset;
  const std::size_t count = std::max(p.prefix.size(), depth);
  for (std::size_t n = 0; n < count; ++n) {
    Compactum content;
    if (n < p.prefix.size()) {
      content = p.prefix[n];
    } else if (p.tail.kind == Tail::Kind::Const) {
      content = *p.tail.body;
    } else if (p.tail.kind == Tail::Kind::Fund) {
      content = canonical(fund_seq(p.tail.lambda, n), 1);
    }
    if (content.is_empty()) continue;
    address.push_back(static_cast<int>(n));
    label_compactum(content, depth, block_offset, address, out);
    address.pop_back();
    block_offset =
        add(add(block_offset, max_label_compactum(content)), Ordinal::one());
  }
  out.push_back({address, add(offset, max_label_piece(p))});
}

inline void label_compactum(const Compactum& k, std::size_t depth,
                            const Ordinal& offset, Address& address,
                            std::vector<Labeling::Entry>& out) {
  Ordinal piece_offset = offset;
  for (std::size_t i = 0; i < k.pieces.size(); ++i) {
    address.push_back(static_cast<int>(i));
    label_piece(k.pieces[i], depth, piece_offset, address, out);
    address.pop_back();
    piece_offset = add(add(piece_offset, max_label_piece(k.pieces[i])),
                       Ordinal::one());
  }
}

}  // namespace detail

// Labels the truncation truncate(k, depth) following the block-sum maps:
// block 0 starts at 0, block n is offset by the partial block sum plus one,
// each apex is labeled by the sup of its block partial sums, and sibling
// pieces get consecutive blocks. `top` is the symbolic maximum label of the
// untruncated tree; for canonical(a, p) with a > 0 it equals w^a*p.
inline Labeling homeo_labels(const Compactum& k, std::size_t depth) {
  detail::require_valid(k);
  Labeling out;
  Address address;
  detail::label_compactum(k, depth, Ordinal::zero(), address, out.entries);
  out.top = detail::max_label_compactum(k);
  return out;
}

// Scale-eps derived set: the points with another point within eps.
inline std::vector<Rat> eps_derived(const std::vector<Rat>& points,
                                    const Rat& eps) {
  std::vector<Rat> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Rat> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const bool near_prev = i > 0 && sorted[i] - sorted[i - 1] <= eps;
    const bool near_next =
        i + 1 < sorted.size() && sorted[i + 1] - sorted[i] <= eps;
    if (near_prev || near_next) out.push_back(sorted[i]);
  }
  return out;
}

}  // namespace cbspace
