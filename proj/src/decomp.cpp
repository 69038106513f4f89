#include "qloop/decomp.hpp"

#include <cstdlib>
#include <numeric>

#include "qloop/error.hpp"
#include "qloop/variety.hpp"

namespace qloop {

namespace {

void require_centralizing_squaring(const LoopTable& q) {
  if (!satisfies(q, "squaring_endomorphic"))
    throw Error(ErrorKind::PreconditionViolated, "squaring_endomorphic is false");
  if (!squares(q).is_subset_of(q.commutant_and_center().center))
    throw Error(ErrorKind::PreconditionViolated, "central_squares is false");
}

struct Bezout {
  long long i, j;
};

// i*a + j*b = 1 for coprime a, b, with |i| minimal.
Bezout bezout(long long a, long long b) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long long qt = old_r / r;
    old_r -= qt * r;
    std::swap(old_r, r);
    old_s -= qt * s;
    std::swap(old_s, s);
    old_t -= qt * t;
    std::swap(old_t, t);
  }
  // Solutions are (i + k*b, j - k*a); pick k minimizing |i|.
  long long i = old_s, j = old_t;
  const long long k = -i / b;
  i += k * b;
  j -= k * a;
  for (long long d : {-1LL, 1LL})
    if (std::llabs(i + d * b) < std::llabs(i)) {
      i += d * b;
      j -= d * a;
    }
  return {i, j};
}

Split split_unchecked(const LoopTable& q, Element a) {
  const int n = q.orbit_length(a);
  int k = 0, m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  const long long two_k = 1LL << k;
  const Bezout bz = bezout(two_k, m);
  const Split s{q.power(a, bz.j * m), q.power(a, bz.i * two_k)};
  if (q.mul(s.b, s.c) != a || q.power(s.b, two_k) != 0 || q.power(s.c, m) != 0)
    throw Error(ErrorKind::InternalInconsistency, "split of " + std::to_string(a) + " does not verify");
  return s;
}

}  // namespace

std::vector<ElementSet> e_layers(const LoopTable& q) {
  require_centralizing_squaring(q);
  std::vector<ElementSet> layers;
  for (long long exp = 1;; exp *= 2) {
    ElementSet layer;
    for (int a = 0; a < q.order(); ++a)
      if (q.power(a, exp) == 0) layer.insert(a);
    if (!q.is_normal(layer).normal)
      throw Error(ErrorKind::InternalInconsistency, "layer " + layer.to_string() + " is not normal");
    const bool repeat = !layers.empty() && layers.back() == layer;
    layers.push_back(layer);
    if (repeat) break;
  }
  return layers;
}

ElementSet o_part(const LoopTable& q) {
  require_centralizing_squaring(q);
  ElementSet o;
  for (int a = 0; a < q.order(); ++a)
    if (q.orbit_length(a) % 2 == 1) o.insert(a);
  if (!o.is_subset_of(q.commutant_and_center().center))
    throw Error(ErrorKind::InternalInconsistency, "odd part " + o.to_string() + " is not central");
  if (!q.is_subloop(o) || !q.induced(o).is_associative())
    throw Error(ErrorKind::InternalInconsistency, "odd part " + o.to_string() + " is not a group");
  return o;
}

Split split_element(const LoopTable& q, Element a) {
  require_centralizing_squaring(q);
  return split_unchecked(q, a);
}

DecompositionResult decompose(const LoopTable& q) {
  DecompositionResult r{{}, {}, e_layers(q), LoopTable::from_rows({{0}}), Perm::identity(1)};
  r.e_part = r.e_layers.back();
  r.o_part = o_part(q);
  if (!((r.e_part & r.o_part) == ElementSet{0}))
    throw Error(ErrorKind::IsoVerificationFailed, "E and O intersect nontrivially");
  for (int a = 0; a < q.order(); ++a) {
    const Split s = split_unchecked(q, a);
    if (!r.e_part.contains(s.b) || !r.o_part.contains(s.c))
      throw Error(ErrorKind::IsoVerificationFailed, "split of " + std::to_string(a) + " leaves E or O");
  }
  r.product = direct_product(q.induced(r.e_part), q.induced(r.o_part));
  const int no = static_cast<int>(r.o_part.size());
  std::vector<Element> img(r.product.order());
  std::vector<char> hit(q.order(), 0);
  for (int p = 0; p < r.product.order(); ++p) {
    img[p] = q.mul(r.e_part[p / no], r.o_part[p % no]);
    if (hit[img[p]]++) throw Error(ErrorKind::IsoVerificationFailed, "(b,c) -> bc is not injective");
  }
  if (r.product.order() != q.order()) throw Error(ErrorKind::IsoVerificationFailed, "|E||O| != |Q|");
  r.iso = Perm(img);
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (r.iso(r.product.mul(x, y)) != q.mul(r.iso(x), r.iso(y)))
        throw Error(ErrorKind::IsoVerificationFailed, "(b,c) -> bc is not multiplicative");
  return r;
}

}  // namespace qloop
