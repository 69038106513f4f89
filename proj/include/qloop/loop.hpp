#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qloop/element_set.hpp"
#include "qloop/permutation.hpp"

namespace qloop {

struct Inverses {
  Element left;
  Element right;
  std::optional<Element> two_sided;  // present iff left == right
};

struct ElementOrder {
  int order;
  // True iff the subloop generated by the element is a group, i.e. the
  // order is unambiguous.
  bool locally_power_associative;
};

struct Nuclei {
  ElementSet left, middle, right;
  ElementSet left_middle, left_right, right_middle;
  ElementSet nucleus;
};

struct CommutantCenter {
  ElementSet commutant;
  ElementSet center;
};

struct Normality {
  bool normal = true;
  // On failure: two elements exposing the defect (overlapping cosets or a
  // product whose class is not determined by the factors' classes).
  std::optional<std::pair<Element, Element>> witness;
  std::string reason;
};

class LoopTable;

struct Quotient;

// A finite loop stored as its Cayley table, identity at index 0. Both
// division tables are materialized at construction. Immutable.
class LoopTable {
 public:
  // Builds a loop from an n x n grid whose entries are in [base, base+n-1].
  // With `relabel_identity`, a table whose identity element is not first is
  // relabeled by swapping that element with 0.
  static LoopTable from_rows(const std::vector<std::vector<int>>& rows, int base = 0,
                             std::string name = {}, bool relabel_identity = false);

  // Row-major 0-based cells of an n x n table; validated like from_rows.
  static LoopTable from_cells(int n, std::span<const std::uint8_t> cells, std::string name = {});

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  LoopTable with_name(std::string name) const;

  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  // a\b: the unique x with a*x = b.
  Element ldiv(Element a, Element b) const { return ldiv_[a * n_ + b]; }
  // b/a: the unique y with y*a = b.
  Element rdiv(Element b, Element a) const { return rdiv_[b * n_ + a]; }

  Element left_inv(Element a) const { return rdiv(0, a); }
  Element right_inv(Element a) const { return ldiv(a, 0); }
  Inverses inverses(Element a) const;

  // a^k = L_a^k(e); negative k iterates the inverse of L_a.
  Element power(Element a, long long k) const;
  ElementOrder element_order(Element a) const;
  // Length of the cycle of e under L_a: the least k > 0 with a^k = e.
  int orbit_length(Element a) const;

  // [x,y,z] = (x*yz) \ (xy*z); zero iff the triple associates.
  Element associator(Element x, Element y, Element z) const;

  bool is_associative() const;
  bool is_commutative() const;

  LoopTable opposite() const;

  ElementSet generated_subloop(const ElementSet& s) const;
  bool is_subloop(const ElementSet& s) const;
  // Table of the subloop `s` relabeled by position in sorted order.
  LoopTable induced(const ElementSet& s) const;
  // Every subloop, ordered by bitmask.
  std::vector<ElementSet> subloops() const;

  Nuclei nuclei() const;
  CommutantCenter commutant_and_center() const;

  // Congruence test: left cosets of `s` must partition the loop and the class
  // of a product must depend only on the classes of the factors.
  Normality is_normal(const ElementSet& s) const;
  std::vector<ElementSet> normal_subloops() const;
  // Nontrivial with only {e} and Q as normal subloops.
  bool is_simple() const;

  Quotient quotient(const ElementSet& normal_subloop) const;

  Perm left_translation(Element a) const;
  Perm right_translation(Element a) const;

  std::vector<std::vector<int>> rows(int base = 0) const;
  std::span<const std::uint8_t> cells() const { return mul_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.mul_ == b.mul_; }

 private:
  LoopTable(int n, std::vector<std::uint8_t> cells, std::string name);

  int n_ = 0;
  std::vector<std::uint8_t> mul_, ldiv_, rdiv_;
  std::string name_;
};

struct Quotient {
  LoopTable table;
  std::vector<Element> projection;  // element -> coset index
  std::vector<ElementSet> cosets;   // coset of e first
};

// Componentwise product under the pairing (p,q) -> p*|Q| + q.
LoopTable direct_product(const LoopTable& p, const LoopTable& q);

// A bijection phi with phi(ab) = phi(a)phi(b) from `p` onto `q`, if any.
std::optional<Perm> find_isomorphism(const LoopTable& p, const LoopTable& q);

// Table of the loop transported along `phi`: result(phi a, phi b) = phi(ab).
LoopTable relabel(const LoopTable& q, const Perm& phi);

// Lexicographically least row-major table over all relabelings fixing 0.
// Exhaustive over (n-1)! relabelings; intended for n <= 8.
LoopTable canonical_form(const LoopTable& q);

}  // namespace qloop
