#pragma once

#include <vector>

#include "qloop/loop.hpp"

namespace qloop {

// Q = E x O for loops whose squaring map is a centralizing endomorphism.
// E collects elements of 2-power order, O those of odd order.
struct DecompositionResult {
  ElementSet e_part;
  ElementSet o_part;
  std::vector<ElementSet> e_layers;  // E_0, E_1, ... up to the first repeat
  LoopTable product;                 // induced(E) x induced(O)
  Perm iso;                          // product index -> element of Q
};

// E_n = {a : a^(2^n) = e} for n = 0, 1, ... until E_{n+1} = E_n (the
// repeated layer is included). Each layer is checked to be normal.
// Throws PreconditionViolated naming the failed profile field.
std::vector<ElementSet> e_layers(const LoopTable& q);

// Elements of odd order, checked to be central and to form an abelian group.
ElementSet o_part(const LoopTable& q);

struct Split {
  Element b;  // 2-power order
  Element c;  // odd order
};

// a = b*c with b = a^(j*m), c = a^(i*2^k) where |a| = 2^k * m, m odd and
// i*2^k + j*m = 1 with |i| minimal.
Split split_element(const LoopTable& q, Element a);

// Throws PreconditionViolated, or IsoVerificationFailed if the constructed
// map fails to be an isomorphism.
DecompositionResult decompose(const LoopTable& q);

}  // namespace qloop
