#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloop/loop.hpp"
#include "qloop/permutation.hpp"

namespace qloop {

enum class Side { Left, Right };

// L_a (x -> ax) or R_a (x -> xa).
Perm translation(const LoopTable& q, Element a, Side side);
// lambda: x -> x^l and rho: x -> x^r.
Perm left_inverse_map(const LoopTable& q);
Perm right_inverse_map(const LoopTable& q);

struct Autotopism {
  Perm alpha, beta, gamma;
};

// alpha(x) * beta(y) == gamma(x*y) for all x, y.
bool is_autotopism(const LoopTable& q, const Perm& alpha, const Perm& beta, const Perm& gamma);
inline bool is_autotopism(const LoopTable& q, const Autotopism& t) {
  return is_autotopism(q, t.alpha, t.beta, t.gamma);
}

// Maps a triple on the principal right isostrophe of `base` to the triple
// (gamma, rho*beta*lambda, alpha) on `base`, with rho and lambda taken in `base`.
// The input is an autotopism of the isostrophe iff the output is one of `base`.
Autotopism isostrophe_atp_transfer(const LoopTable& base, const Autotopism& t);

enum class GenSetKind { Lmlt, Rmlt, Mlt, Inn, SectionOfSubloop };

struct GenSet {
  std::vector<Perm> perms;
  GenSetKind kind;
};

// All L_x and R_x.
GenSet mlt_generators(const LoopTable& q);
// Schreier generators of the stabilizer of e in Mlt(Q), taken from a BFS
// transversal of the orbit of e. Every returned permutation fixes 0.
GenSet inner_generators(const LoopTable& q);
// The left section {L_a : a in s}.
GenSet left_section(const LoopTable& q, const ElementSet& s);

// True iff every inner generator maps `s` into itself.
bool is_inner_invariant(const LoopTable& q, const ElementSet& s);

struct SectionNormality {
  bool normal = true;
  // On failure: a generator g of Mlt and a in N such that g L_a g^-1 is not
  // a left translation by an element of N.
  std::optional<Perm> generator;
  std::optional<Element> element;
};

// For N inside the left nucleus, decides whether the section L_(N) is
// normalized by every generator of Mlt(Q). Throws PreconditionViolated if
// N is not contained in the left nucleus.
SectionNormality section_normal_in_mlt(const LoopTable& q, const ElementSet& n);

// Full closure of a generating set; throws PreconditionViolated once more
// than `cap` elements have been produced. Diagnostics only.
std::vector<Perm> close_group(const std::vector<Perm>& gens, std::size_t cap = 10'000'000);

}  // namespace qloop
