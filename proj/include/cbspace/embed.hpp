#pragma once

// Deterministic embedding of a truncated compactum into a rational interval.
//
// A compactum of m pieces splits (a, b] into m equal half-open subintervals.
// Within a piece interval (a', b'] of length L, the apex sits at b' and
// annulus n occupies (b' - L/2^(n+1), b' - L/2^(n+2)]; a lone Atom sits at
// the right endpoint of its piece interval. Annulus boundaries never hit an
// image point, which replaces the paper's choice of radii outside the
// countable distance set with a reproducible rule.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbspace/compactum.hpp"
#include "cbspace/rational.hpp"

namespace cbspace {

class DegenerateInterval : public std::runtime_error {
 public:
  DegenerateInterval() : std::runtime_error("interval requires a < b") {}
};

class NotTruncated : public std::runtime_error {
 public:
  NotTruncated()
      : std::runtime_error("embed requires a truncated (tail-free) tree") {}
};

struct EmbeddedPoint {
  Address address;
  Rat value;
};

struct Embedding {
  Rat a;
  Rat b;
  std::vector<EmbeddedPoint> points;  // in address order
};

namespace detail {

inline std::pair<Rat, Rat> piece_subinterval(const Rat& a, const Rat& b,
                                             std::size_t i, std::size_t m) {
  const Rat len = b - a;
  const Rat lo = a + len * Rat(Nat(i), Nat(m));
  const Rat hi = a + len * Rat(Nat(i + 1), Nat(m));
  return {lo, hi};
}

inline std::pair<Rat, Rat> annulus_subinterval(const Rat& lo, const Rat& hi,
                                               std::size_t n) {
  const Rat len = hi - lo;
  Nat half = 2;
  half <<= n;  // 2^(n+1)
  const Rat left = hi - len / Rat(half);
  const Rat right = hi - len / Rat(half * 2);
  return {left, right};
}

inline void embed_compactum(const Compactum& k, const Rat& a, const Rat& b,
                            Address& address, std::vector<EmbeddedPoint>& out);

inline void embed_piece(const Piece& p, const Rat& lo, const Rat& hi,
                        Address& address, std::vector<EmbeddedPoint>& out) {
  out.push_back({address, hi});  // atom, or the apex of an omega
  if (p.kind == Piece::Kind::Atom) return;
  if (p.tail.kind != Tail::Kind::None) throw NotTruncated();
  for (std::size_t n = 0; n < p.prefix.size(); ++n) {
    if (p.prefix[n].is_empty()) continue;
    const auto [alo, ahi] = annulus_subinterval(lo, hi, n);
    address.push_back(static_cast<int>(n));
    embed_compactum(p.prefix[n], alo, ahi, address, out);
    address.pop_back();
  }
}

inline void embed_compactum(const Compactum& k, const Rat& a, const Rat& b,
                            Address& address, std::vector<EmbeddedPoint>& out) {
  const std::size_t m = k.pieces.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto [lo, hi] = piece_subinterval(a, b, i, m);
    address.push_back(static_cast<int>(i));
    embed_piece(k.pieces[i], lo, hi, address, out);
    address.pop_back();
  }
}

}  // namespace detail

inline Embedding embed(const Compactum& k, const Rat& a, const Rat& b) {
  if (!(a < b)) throw DegenerateInterval();
  Embedding e{a, b, {}};
  Address address;
  detail::embed_compactum(k, a, b, address, e.points);
  return e;
}

// Interval allocated to the piece named by `address` under the embedding of
// `k` over (a, b]. Used by the metric derivative oracle to recover the local
// scale of a point.
inline std::pair<Rat, Rat> piece_interval(const Compactum& k, const Rat& a,
                                          const Rat& b,
                                          const Address& address) {
  if (address.empty() || address.size() % 2 == 0) {
    throw std::invalid_argument("address must end at a piece");
  }
  const Compactum* node = &k;
  Rat lo = a;
  Rat hi = b;
  std::size_t i = 0;
  while (true) {
    const std::size_t piece_idx = static_cast<std::size_t>(address[i]);
    if (piece_idx >= node->pieces.size()) {
      throw std::invalid_argument("address out of range");
    }
    auto [plo, phi] =
        detail::piece_subinterval(lo, hi, piece_idx, node->pieces.size());
    lo = plo;
    hi = phi;
    if (++i == address.size()) return {lo, hi};
    const Piece& piece = node->pieces[piece_idx];
    const std::size_t annulus_idx = static_cast<std::size_t>(address[i]);
    if (piece.kind != Piece::Kind::Omega ||
        annulus_idx >= piece.prefix.size()) {
      throw std::invalid_argument("address out of range");
    }
    auto [alo, ahi] = detail::annulus_subinterval(lo, hi, annulus_idx);
    lo = alo;
    hi = ahi;
    node = &piece.prefix[annulus_idx];
    ++i;
  }
}

}  // namespace cbspace
