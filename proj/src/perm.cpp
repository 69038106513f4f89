#include "qloop/perm.hpp"

#include <deque>
#include <set>

#include "qloop/error.hpp"

namespace qloop {

namespace {

void require_degree(const LoopTable& q, const Perm& p) {
  if (p.degree() != q.order())
    throw Error(ErrorKind::DegreeMismatch,
                "permutation of degree " + std::to_string(p.degree()) + " on loop of order " +
                    std::to_string(q.order()));
}

}  // namespace

Perm translation(const LoopTable& q, Element a, Side side) {
  return side == Side::Left ? q.left_translation(a) : q.right_translation(a);
}

Perm left_inverse_map(const LoopTable& q) {
  std::vector<Element> img(q.order());
  for (int x = 0; x < q.order(); ++x) img[x] = q.left_inv(x);
  return Perm(img);
}

Perm right_inverse_map(const LoopTable& q) {
  std::vector<Element> img(q.order());
  for (int x = 0; x < q.order(); ++x) img[x] = q.right_inv(x);
  return Perm(img);
}

bool is_autotopism(const LoopTable& q, const Perm& alpha, const Perm& beta, const Perm& gamma) {
  require_degree(q, alpha);
  require_degree(q, beta);
  require_degree(q, gamma);
  const int n = q.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul(alpha(x), beta(y)) != gamma(q.mul(x, y))) return false;
  return true;
}

Autotopism isostrophe_atp_transfer(const LoopTable& base, const Autotopism& t) {
  require_degree(base, t.alpha);
  require_degree(base, t.beta);
  require_degree(base, t.gamma);
  return {t.gamma, right_inverse_map(base) * t.beta * left_inverse_map(base), t.alpha};
}

GenSet mlt_generators(const LoopTable& q) {
  GenSet g{{}, GenSetKind::Mlt};
  for (int x = 0; x < q.order(); ++x) g.perms.push_back(q.left_translation(x));
  for (int x = 0; x < q.order(); ++x) g.perms.push_back(q.right_translation(x));
  return g;
}

GenSet inner_generators(const LoopTable& q) {
  const int n = q.order();
  const GenSet mlt = mlt_generators(q);
  // BFS transversal: transversal[y] maps 0 to y.
  std::vector<std::optional<Perm>> transversal(n);
  transversal[0] = Perm::identity(n);
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element y = queue.front();
    queue.pop_front();
    for (const Perm& g : mlt.perms) {
      const Element z = g(y);
      if (!transversal[z]) {
        transversal[z] = g * *transversal[y];
        queue.push_back(z);
      }
    }
  }
  std::set<Perm> unique;
  GenSet inn{{}, GenSetKind::Inn};
  for (int y = 0; y < n; ++y)
    for (const Perm& g : mlt.perms) {
      Perm s = transversal[g(y)]->inverse() * g * *transversal[y];
      if (!s.is_identity() && unique.insert(s).second) inn.perms.push_back(std::move(s));
    }
  return inn;
}

GenSet left_section(const LoopTable& q, const ElementSet& s) {
  GenSet g{{}, GenSetKind::SectionOfSubloop};
  for (Element a : s) g.perms.push_back(q.left_translation(a));
  return g;
}

bool is_inner_invariant(const LoopTable& q, const ElementSet& s) {
  for (const Perm& p : inner_generators(q).perms)
    if (!p.maps_into(s)) return false;
  return true;
}

SectionNormality section_normal_in_mlt(const LoopTable& q, const ElementSet& n) {
  if (!n.is_subset_of(q.nuclei().left))
    throw Error(ErrorKind::PreconditionViolated, n.to_string() + " is not inside the left nucleus");
  for (const Perm& g : mlt_generators(q).perms) {
    const Perm g_inv = g.inverse();
    for (Element a : n) {
      const Perm conj = g * q.left_translation(a) * g_inv;
      // L_b is determined by b = L_b(e); membership reduces to a table lookup.
      if (!n.contains(conj(0)) || !(conj == q.left_translation(conj(0))))
        return {false, g, a};
    }
  }
  return {};
}

std::vector<Perm> close_group(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  const int n = gens.front().degree();
  std::set<Perm> seen{Perm::identity(n)};
  std::vector<Perm> out{Perm::identity(n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Perm& g : gens) {
      Perm p = g * out[i];
      if (seen.insert(p).second) {
        out.push_back(std::move(p));
        if (out.size() > cap) throw Error(ErrorKind::PreconditionViolated, "group closure exceeded cap");
      }
    }
  return out;
}

}  // namespace qloop
