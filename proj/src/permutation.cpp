#include "qloop/permutation.hpp"

#include "qloop/error.hpp"

namespace qloop {

Perm::Perm(const std::vector<Element>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxOrder) throw Error(ErrorKind::PreconditionViolated, "permutation degree exceeds 64");
  std::uint64_t seen = 0;
  images_.reserve(images.size());
  for (Element x : images) {
    if (x < 0 || x >= n || (seen >> x) & 1U)
      throw Error(ErrorKind::PreconditionViolated, "image list is not a permutation");
    seen |= std::uint64_t{1} << x;
    images_.push_back(static_cast<std::uint8_t>(x));
  }
}

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> images(n);
  for (int i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv), Unchecked{});
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::maps_into(const ElementSet& s) const {
  for (Element x : s)
    if (!s.contains(images_[x])) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(images_[i]);
  }
  return out + ")";
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<std::uint8_t> out(q.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Perm(std::move(out), Perm::Unchecked{});
}

}  // namespace qloop
