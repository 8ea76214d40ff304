#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "cbspace/cb.hpp"
#include "cbspace/compactum.hpp"
#include "cbspace/embed.hpp"

using namespace cbspace;

namespace {

Ordinal ord(const char* text) { return parse_ordinal(text); }

std::vector<Rat> values(const Embedding& e) {
  std::vector<Rat> out;
  for (const EmbeddedPoint& p : e.points) out.push_back(p.value);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cb_char on basic shapes") {
  CHECK(cb_char(Compactum{}) == CbPair{Ordinal::zero(), 0});
  CHECK(cb_char(singleton(Piece::atom())) == CbPair{Ordinal::zero(), 1});
  CHECK(cb_char(canonical(ord("1"), 1)) == CbPair{ord("1"), 1});
  CHECK(cb_char(canonical(ord("w"), 2)) == CbPair{ord("w"), 2});
  CHECK(cb_char(canonical(ord("w^2+3"), 4)) == CbPair{ord("w^2+3"), 4});
  CHECK(cb_char(union_of(canonical(ord("2"), 1), canonical(ord("1"), 3))) ==
        CbPair{ord("2"), 1});
}

TEST_CASE("cb_char rejects invalid trees") {
  Piece bad;
  bad.kind = Piece::Kind::Omega;
  bad.tail = Tail::fund(ord("5"));
  CHECK_THROWS_AS(cb_char(singleton(bad)), InvalidTree);
}

TEST_CASE("cb_char matches iterated structural derivation") {
  const std::vector<Compactum> trees = {
      canonical(ord("1"), 2),
      canonical(ord("3"), 1),
      union_of(canonical(ord("2"), 1), canonical(ord("1"), 3)),
      union_of(canonical(ord("3"), 2), canonical(ord("2"), 2)),
  };
  for (const Compactum& k : trees) {
    const CbPair cb = cb_char(k);
    Compactum it = k;
    Nat steps = 0;
    while (!cb_char(it).rank.is_zero()) {
      it = derive(it);
      ++steps;
    }
    CHECK(Ordinal::from_nat(steps) == cb.rank);
    CHECK(Nat(it.pieces.size()) == cb.count);
  }
}

TEST_CASE("classify gives the homeomorphism type") {
  CHECK(classify(canonical(ord("1"), 1)) == ord("w+1"));
  CHECK(classify(Compactum{}) == Ordinal::zero());
  CHECK(classify(canonical(ord("2"), 3)) == ord("w^2*3+1"));
  CHECK(classify(canonical(Ordinal::zero(), 4)) == ord("4"));
}

TEST_CASE("equivalent is characteristic equality") {
  CHECK(equivalent(canonical(ord("1"), 2),
                   union_of(canonical(ord("1"), 1), canonical(ord("1"), 1))));
  CHECK_FALSE(equivalent(canonical(ord("1"), 1), canonical(ord("2"), 1)));
  CHECK(equivalent(Compactum{}, Compactum{}));
}

TEST_CASE("homeo_labels on the base shapes") {
  // Lemma shape: atoms 0,1,2 and apex w.
  const Labeling l1 = homeo_labels(canonical(ord("1"), 1), 3);
  REQUIRE(l1.entries.size() == 4);
  CHECK(l1.entries[0].label == ord("0"));
  CHECK(l1.entries[1].label == ord("1"));
  CHECK(l1.entries[2].label == ord("2"));
  CHECK(l1.entries[3].label == ord("w"));
  CHECK(l1.entries[3].address == Address{0});
  CHECK(l1.top == ord("w"));

  // Two blocks: apexes w and w*2.
  const Labeling l2 = homeo_labels(
      union_of(canonical(ord("1"), 1), canonical(ord("1"), 1)), 2);
  std::map<Address, Ordinal> by_address;
  for (const auto& e : l2.entries) by_address[e.address] = e.label;
  CHECK(by_address[Address{0}] == ord("w"));
  CHECK(by_address[Address{1}] == ord("w*2"));
  CHECK(l2.top == ord("w*2"));

  // A single atom.
  const Labeling l3 = homeo_labels(singleton(Piece::atom()), 4);
  REQUIRE(l3.entries.size() == 1);
  CHECK(l3.entries[0].label == Ordinal::zero());
  CHECK(l3.top == Ordinal::zero());
}

TEST_CASE("labeling contracts") {
  const std::vector<std::pair<const char*, Nat>> grid = {
      {"1", 1}, {"1", 3}, {"2", 2}, {"w", 1}, {"w+1", 2}, {"w^2", 1}};
  for (const auto& [alpha_text, p] : grid) {
    const Ordinal alpha = ord(alpha_text);
    const Compactum k = canonical(alpha, p);
    const Labeling l = homeo_labels(k, 3);
    CAPTURE(alpha_text);

    // Entries pairwise distinct.
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
      for (std::size_t j = i + 1; j < l.entries.size(); ++j) {
        CHECK(l.entries[i].label != l.entries[j].label);
      }
    }

    // top == w^alpha * p and its ordinal characteristic matches.
    CHECK(l.top == mul_nat(omega_pow(alpha), p));
    CHECK(ordinal_cb(l.top) == cb_char(k));
  }
}

TEST_CASE("labeling is an order isomorphism on truncations") {
  const std::vector<Compactum> trees = {
      canonical(ord("2"), 2),
      canonical(ord("w"), 1),
      union_of(canonical(ord("1"), 1), canonical(ord("2"), 1)),
  };
  for (const Compactum& k : trees) {
    for (std::size_t d = 2; d <= 3; ++d) {
      const Labeling l = homeo_labels(k, d);
      const Embedding e = embed(truncate(k, d), Rat(0), Rat(1));
      REQUIRE(l.entries.size() == e.points.size());
      std::map<Address, Rat> coordinate;
      for (const EmbeddedPoint& p : e.points) coordinate[p.address] = p.value;
      std::vector<std::pair<Rat, Ordinal>> paired;
      for (const auto& entry : l.entries) {
        REQUIRE(coordinate.count(entry.address) == 1);
        paired.push_back({coordinate[entry.address], entry.label});
      }
      std::sort(paired.begin(), paired.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (std::size_t i = 1; i < paired.size(); ++i) {
        CHECK(compare(paired[i - 1].second, paired[i].second) ==
              Comparison::Less);
      }
    }
  }
}

TEST_CASE("eps_derived is the scale-eps derived set") {
  const std::vector<Rat> pts = {Rat(0), Rat(Nat(3), Nat(4)), Rat(Nat(7), Nat(8)),
                                Rat(1)};
  const std::vector<Rat> d = eps_derived(pts, Rat(Nat(1), Nat(8)));
  CHECK(d == std::vector<Rat>{Rat(Nat(3), Nat(4)), Rat(Nat(7), Nat(8)), Rat(1)});
  CHECK(eps_derived({}, Rat(Nat(1), Nat(2))).empty());
  CHECK(eps_derived({Rat(0), Rat(1)}, Rat(Nat(1), Nat(4))).empty());
}

// The metric derivative oracle: a point of the depth-(d+1) embedding is kept
// when some other point lies within eps scaled by the point's own piece
// interval; restricted to the depth-d skeleton this reproduces the embedded
// structural derivative exactly.
namespace {

std::vector<Rat> metric_derivative(const Compactum& k, std::size_t d) {
  const Compactum deep = truncate(k, d + 1);
  const Embedding e = embed(deep, Rat(0), Rat(1));
  std::vector<Rat> all;
  for (const EmbeddedPoint& p : e.points) all.push_back(p.value);
  std::vector<Rat> out;
  Nat scale = 1;
  scale <<= (d + 2);
  for (const EmbeddedPoint& p : e.points) {
    bool skeleton = true;
    for (std::size_t i = 1; i < p.address.size(); i += 2) {
      if (p.address[i] >= static_cast<int>(d)) skeleton = false;
    }
    if (!skeleton) continue;
    const auto [lo, hi] = piece_interval(deep, Rat(0), Rat(1), p.address);
    const Rat eps = (hi - lo) / Rat(scale);
    const std::vector<Rat> kept = eps_derived(all, eps);
    if (std::binary_search(kept.begin(), kept.end(), p.value)) {
      out.push_back(p.value);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("metric derivative agrees with structural derive") {
  const std::vector<Compactum> trees = {
      canonical(ord("1"), 1),
      canonical(ord("2"), 1),
      canonical(ord("2"), 3),
      union_of(canonical(ord("2"), 1), canonical(ord("1"), 2)),
  };
  for (const Compactum& k : trees) {
    for (std::size_t d = 3; d <= 4; ++d) {
      const std::vector<Rat> lhs = metric_derivative(k, d);
      const std::vector<Rat> rhs =
          values(embed(truncate(derive(k), d), Rat(0), Rat(1)));
      CHECK(lhs == rhs);
    }
  }
}
