#pragma once

#include <vector>

#include "qloop/loop.hpp"
#include "qloop/perm.hpp"

namespace qloop {

// Right: x o y = x / y^r.  Left: x * y = x^l \ y.  Same identity element.
LoopTable principal_isostrophe(const LoopTable& q, Side side);

// Division tables of the principal right isostrophe, row-major n x n.
struct IsostropheDivisions {
  std::vector<Element> ldiv;  // x \\ y
  std::vector<Element> rdiv;  // x // y
};

// Computes the isostrophe's divisions from the closed forms
// x\\y = (y\x)^l and x//y = x y^r, checks them against the divisions of the
// materialized isostrophe table and throws InternalInconsistency on mismatch.
IsostropheDivisions isostrophe_divisions(const LoopTable& q);

}  // namespace qloop
