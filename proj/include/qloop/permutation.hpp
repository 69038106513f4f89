#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloop/element_set.hpp"

namespace qloop {

// A bijection on {0..n-1}. Permutations act on the left: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  // Throws PreconditionViolated if `images` is not a permutation.
  explicit Perm(const std::vector<Element>& images);

  static Perm identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  Element operator()(Element x) const { return images_[x]; }

  Perm inverse() const;
  bool is_identity() const;
  bool fixes(Element x) const { return images_[x] == x; }
  // True iff the image of every element of `s` lies in `s`.
  bool maps_into(const ElementSet& s) const;

  std::vector<Element> images() const { return {images_.begin(), images_.end()}; }
  const std::vector<std::uint8_t>& raw() const { return images_; }

  // One-line image list "(a b c ...)".
  std::string to_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  struct Unchecked {};
  Perm(std::vector<std::uint8_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;

  friend class LoopTable;
};

}  // namespace qloop
