#pragma once

// JSON and CSV exchange formats.
//
// Compactum:  {"pieces":[Piece]}
// Piece:      {"kind":"atom"} |
//             {"kind":"omega","prefix":[Compactum],"tail":Tail}
// Tail:       {"kind":"none"} | {"kind":"const","body":Compactum} |
//             {"kind":"fund","lambda":"<ordinal notation>"}
// Embedding:  [{"address":[ints],"num":n,"den":d}] and CSV address,num,den
// Labeling:   {"entries":[{"address":[ints],"label":"<ordinal>"}],
//              "top":"<ordinal>"}
// Summary:    {"space":...,"realized":[["<ordinal>",p],...],
//              "total":"finite:<m>"|"aleph0"|"aleph1"}

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cbspace/cb.hpp"
#include "cbspace/compactum.hpp"
#include "cbspace/embed.hpp"
#include "cbspace/ordinal.hpp"
#include "cbspace/partition.hpp"

namespace cbspace {

using Json = nlohmann::ordered_json;

inline Json to_json(const Compactum& k);

inline Json to_json(const Piece& p) {
  if (p.kind == Piece::Kind::Atom) return Json{{"kind", "atom"}};
  Json prefix = Json::array();
  for (const Compactum& c : p.prefix) prefix.push_back(to_json(c));
  Json tail;
  switch (p.tail.kind) {
    case Tail::Kind::None:
      tail = Json{{"kind", "none"}};
      break;
    case Tail::Kind::Const:
      tail = Json{{"kind", "const"}, {"body", to_json(*p.tail.body)}};
      break;
    case Tail::Kind::Fund:
      tail = Json{{"kind", "fund"}, {"lambda", print_ordinal(p.tail.lambda)}};
      break;
  }
  return Json{{"kind", "omega"}, {"prefix", prefix}, {"tail", tail}};
}

inline Json to_json(const Compactum& k) {
  Json pieces = Json::array();
  for (const Piece& p : k.pieces) pieces.push_back(to_json(p));
  return Json{{"pieces", pieces}};
}

inline Compactum compactum_from_json(const Json& j);

inline Piece piece_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "atom") return Piece::atom();
  if (kind != "omega") throw InvalidTree("unknown piece kind: " + kind);
  std::vector<Compactum> prefix;
  for (const Json& c : j.at("prefix")) prefix.push_back(compactum_from_json(c));
  const Json& jt = j.at("tail");
  const std::string tail_kind = jt.at("kind").get<std::string>();
  Tail tail;
  if (tail_kind == "none") {
    tail = Tail::none();
  } else if (tail_kind == "const") {
    tail = Tail::constant(compactum_from_json(jt.at("body")));
  } else if (tail_kind == "fund") {
    tail = Tail::fund(parse_ordinal(jt.at("lambda").get<std::string>()));
  } else {
    throw InvalidTree("unknown tail kind: " + tail_kind);
  }
  return Piece::omega(std::move(prefix), std::move(tail));
}

inline Compactum compactum_from_json(const Json& j) {
  Compactum k;
  for (const Json& p : j.at("pieces")) k.pieces.push_back(piece_from_json(p));
  return k;
}

namespace detail {

inline Json json_int(const Nat& n) {
  // Desk-scale values fit a 64-bit integer; fail loudly rather than round.
  if (n < std::numeric_limits<long long>::min() ||
      n > std::numeric_limits<long long>::max()) {
    throw std::overflow_error("value too large for JSON integer: " + n.str());
  }
  return Json(static_cast<long long>(n));
}

inline std::string address_key(const Address& address) {
  std::string out;
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(address[i]);
  }
  return out;
}

}  // namespace detail

inline Json to_json(const Embedding& e) {
  Json out = Json::array();
  for (const EmbeddedPoint& p : e.points) {
    Json address = Json::array();
    for (int i : p.address) address.push_back(i);
    out.push_back(Json{{"address", address},
                       {"num", detail::json_int(p.value.num)},
                       {"den", detail::json_int(p.value.den)}});
  }
  return out;
}

inline std::string to_csv(const Embedding& e) {
  std::string out = "address,num,den\n";
  for (const EmbeddedPoint& p : e.points) {
    out += detail::address_key(p.address);
    out += ',';
    out += p.value.num.str();
    out += ',';
    out += p.value.den.str();
    out += '\n';
  }
  return out;
}

inline Json to_json(const Labeling& l) {
  Json entries = Json::array();
  for (const Labeling::Entry& e : l.entries) {
    Json address = Json::array();
    for (int i : e.address) address.push_back(i);
    entries.push_back(
        Json{{"address", address}, {"label", print_ordinal(e.label)}});
  }
  return Json{{"entries", entries}, {"top", print_ordinal(l.top)}};
}

inline std::string to_string(const ModelSpace& space) {
  switch (space.kind) {
    case ModelSpace::Kind::FiniteDiscrete:
      return "finite:" + space.n.str();
    case ModelSpace::Kind::CountableDiscrete:
      return "discrete-omega";
    case ModelSpace::Kind::DyadicInterval:
      return "dyadic-interval";
    case ModelSpace::Kind::UncountableDiscrete:
      return "discrete-uncountable";
  }
  return "unknown";
}

inline Json to_json(const ModelSpace& space, const ClassSummary& summary) {
  Json realized = Json::array();
  for (const CbPair& pair : summary.realized) {
    realized.push_back(
        Json::array({print_ordinal(pair.rank), detail::json_int(pair.count)}));
  }
  std::string total;
  switch (summary.total) {
    case ClassSummary::TotalKind::Finite:
      total = "finite:" + summary.total_finite.str();
      break;
    case ClassSummary::TotalKind::CountablyInfinite:
      total = "aleph0";
      break;
    case ClassSummary::TotalKind::Aleph1:
      total = "aleph1";
      break;
  }
  return Json{
      {"space", to_string(space)}, {"realized", realized}, {"total", total}};
}

}  // namespace cbspace
