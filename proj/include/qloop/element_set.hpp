#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qloop {

using Element = int;

// Loops are capped at 64 elements so that every subset fits in one word.
inline constexpr int kMaxOrder = 64;

// Sorted, duplicate-free set of elements. Stored as a sorted vector for
// deterministic iteration plus a bitmask for O(1) membership and set algebra.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }
  explicit ElementSet(const std::vector<Element>& elems) {
    for (Element e : elems) insert(e);
  }

  static ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    s.mask_ = mask;
    s.rebuild();
    return s;
  }

  static ElementSet all(int n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  void insert(Element e) {
    if (contains(e)) return;
    mask_ |= bit(e);
    elems_.insert(std::upper_bound(elems_.begin(), elems_.end(), e), e);
  }

  bool contains(Element e) const { return (mask_ & bit(e)) != 0; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  std::uint64_t mask() const { return mask_; }

  const std::vector<Element>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  Element operator[](std::size_t i) const { return elems_[i]; }

  // Position of `e` in the sorted order, or -1.
  int index_of(Element e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    return (it != elems_.end() && *it == e) ? static_cast<int>(it - elems_.begin()) : -1;
  }

  bool is_subset_of(const ElementSet& other) const { return (mask_ & ~other.mask_) == 0; }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

  // "{a,b,c}" with every element shifted by `base`.
  std::string to_string(int base = 0) const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems_[i] + base);
    }
    return out + "}";
  }

 private:
  static std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

  void rebuild() {
    elems_.clear();
    for (std::uint64_t m = mask_; m; m &= m - 1) elems_.push_back(__builtin_ctzll(m));
  }

  std::vector<Element> elems_;
  std::uint64_t mask_ = 0;
};

}  // namespace qloop
