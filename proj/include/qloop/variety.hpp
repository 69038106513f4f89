#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qloop/loop.hpp"

namespace qloop {

// Variety memberships and structural sets of one loop. Every flag is computed
// from its own definition, never inferred from another flag.
struct PropertyProfile {
  bool lip = false;
  bool rip = false;
  bool aaip = false;
  bool aip = false;
  bool two_sided_inverses = false;
  bool lalt = false;
  bool ralt = false;
  bool lns = false;
  bool mns = false;
  bool rns = false;
  bool commuting_squares = false;
  bool central_squares = false;       // every square lies in Z(Q)
  bool squaring_endomorphic = false;  // (xy)^2 = x^2 y^2
  bool squaring_centralizing = false; // endomorphic with image in Z(Q)
  bool power_associative = false;
  bool left_c = false;
  bool right_c = false;
  bool c_loop = false;
  bool group = false;
  bool left_steiner = false;
  bool right_steiner = false;
  bool steiner = false;  // commutative and x(xy) = y
  bool unipotent = false;

  Nuclei nuclei;
  ElementSet commutant;
  ElementSet center;

  // (key, value) pairs sorted by key; sets are rendered with `base` added.
  std::vector<std::pair<std::string, std::string>> fields(int base = 0) const;
  // "key: value" lines in key order.
  std::string render(int base = 0) const;
};

// True iff the named catalog identity holds universally in `q`.
bool satisfies(const LoopTable& q, std::string_view catalog_name);

PropertyProfile profile(const LoopTable& q);

struct PowerAssociativity {
  bool holds = true;
  std::optional<Element> witness;  // an x with <x> not a group
};

PowerAssociativity is_power_associative(const LoopTable& q);

// The five characterizations of left C loops, evaluated independently.
struct LeftCReport {
  bool bol_moufang = false;  // x(y*yz) = (x*yy)z
  bool lns_lalt = false;
  bool mns_lalt = false;
  bool lns_lip = false;
  bool mns_lip = false;
  bool verdict = false;
};

// Throws InternalInconsistency if the five characterizations disagree.
LeftCReport classify_left_c(const LoopTable& q);

// Squares of all elements.
ElementSet squares(const LoopTable& q);

}  // namespace qloop
