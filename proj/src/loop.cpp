#include "qloop/loop.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qloop/error.hpp"

namespace qloop {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::IdentityNotFirst: return "IdentityNotFirst";
    case ErrorKind::NotASubloop: return "NotASubloop";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownToken: return "UnknownToken";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::IsoVerificationFailed: return "IsoVerificationFailed";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

void validate_cells(int n, std::span<const std::uint8_t> cells) {
  for (int i = 0; i < n; ++i) {
    std::uint64_t row_seen = 0, col_seen = 0;
    for (int j = 0; j < n; ++j) {
      const std::uint64_t rb = std::uint64_t{1} << cells[i * n + j];
      const std::uint64_t cb = std::uint64_t{1} << cells[j * n + i];
      if (row_seen & rb)
        throw Error(ErrorKind::NotLatin, "row " + std::to_string(i) + " repeats entry " +
                                             std::to_string(cells[i * n + j]));
      if (col_seen & cb)
        throw Error(ErrorKind::NotLatin, "column " + std::to_string(i) + " repeats entry " +
                                             std::to_string(cells[j * n + i]));
      row_seen |= rb;
      col_seen |= cb;
    }
  }
}

bool identity_first(int n, std::span<const std::uint8_t> cells) {
  for (int j = 0; j < n; ++j)
    if (cells[j] != j || cells[j * n] != j) return false;
  return true;
}

}  // namespace

LoopTable::LoopTable(int n, std::vector<std::uint8_t> cells, std::string name)
    : n_(n), mul_(std::move(cells)), ldiv_(mul_.size()), rdiv_(mul_.size()), name_(std::move(name)) {
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      const int b = mul_[a * n + x];
      ldiv_[a * n + b] = static_cast<std::uint8_t>(x);  // a*x = b
      const int c = mul_[x * n + a];
      rdiv_[c * n + a] = static_cast<std::uint8_t>(x);  // x*a = c
    }
}

LoopTable LoopTable::from_rows(const std::vector<std::vector<int>>& rows, int base, std::string name,
                               bool relabel_identity) {
  const int n = static_cast<int>(rows.size());
  if (n == 0 || n > kMaxOrder)
    throw Error(ErrorKind::NotSquare, "order must be in 1.." + std::to_string(kMaxOrder));
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j] - base;
      if (v < 0 || v >= n)
        throw Error(ErrorKind::EntryOutOfRange, "entry " + std::to_string(rows[i][j]) + " at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ")");
      cells[i * n + j] = static_cast<std::uint8_t>(v);
    }
  }
  validate_cells(n, cells);
  if (!identity_first(n, cells)) {
    if (!relabel_identity)
      throw Error(ErrorKind::IdentityNotFirst, "row 0 and column 0 must read 0..n-1");
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = cells[c * n + x] == x && cells[x * n + c] == x;
      if (ok) e = c;
    }
    if (e < 0) throw Error(ErrorKind::IdentityNotFirst, "table has no identity element");
    std::vector<Element> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[e]);
    const Perm phi(swap);
    std::vector<std::uint8_t> out(cells.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out[phi(a) * n + phi(b)] = static_cast<std::uint8_t>(phi(cells[a * n + b]));
    cells = std::move(out);
  }
  return LoopTable(n, std::move(cells), std::move(name));
}

LoopTable LoopTable::from_cells(int n, std::span<const std::uint8_t> cells, std::string name) {
  if (n <= 0 || n > kMaxOrder || cells.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::NotSquare, "cell count does not match order");
  for (auto c : cells)
    if (c >= n) throw Error(ErrorKind::EntryOutOfRange, "entry " + std::to_string(c));
  validate_cells(n, cells);
  if (!identity_first(n, cells)) throw Error(ErrorKind::IdentityNotFirst, "row 0 and column 0 must read 0..n-1");
  return LoopTable(n, {cells.begin(), cells.end()}, std::move(name));
}

LoopTable LoopTable::with_name(std::string name) const {
  LoopTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Inverses LoopTable::inverses(Element a) const {
  Inverses inv{left_inv(a), right_inv(a), std::nullopt};
  if (inv.left == inv.right) inv.two_sided = inv.left;
  return inv;
}

int LoopTable::orbit_length(Element a) const {
  int k = 1;
  for (Element x = a; x != 0; x = mul(a, x)) ++k;
  return k;
}

Element LoopTable::power(Element a, long long k) const {
  const long long m = orbit_length(a);
  long long r = ((k % m) + m) % m;
  Element x = 0;
  for (long long i = 0; i < r; ++i) x = mul(a, x);
  return x;
}

ElementOrder LoopTable::element_order(Element a) const {
  return {orbit_length(a), induced(generated_subloop({a})).is_associative()};
}

Element LoopTable::associator(Element x, Element y, Element z) const {
  return ldiv(mul(x, mul(y, z)), mul(mul(x, y), z));
}

bool LoopTable::is_associative() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const int xy = mul(x, y);
      for (int z = 0; z < n_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  return true;
}

bool LoopTable::is_commutative() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

LoopTable LoopTable::opposite() const {
  std::vector<std::uint8_t> t(mul_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[i * n_ + j] = mul_[j * n_ + i];
  return LoopTable(n_, std::move(t), name_.empty() ? "" : name_ + "^op");
}

ElementSet LoopTable::generated_subloop(const ElementSet& s) const {
  // In a finite loop, closure under multiplication alone yields a subloop.
  std::vector<Element> members{0};
  std::uint64_t mask = 1;
  for (Element e : s)
    if (!((mask >> e) & 1U)) {
      mask |= std::uint64_t{1} << e;
      members.push_back(e);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (int flip = 0; flip < 2; ++flip) {
        const Element p = flip ? mul(members[j], members[i]) : mul(members[i], members[j]);
        if (!((mask >> p) & 1U)) {
          mask |= std::uint64_t{1} << p;
          members.push_back(p);
        }
      }
    }
  return ElementSet::from_mask(mask);
}

bool LoopTable::is_subloop(const ElementSet& s) const {
  if (!s.contains(0)) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(mul(a, b))) return false;
  return true;
}

LoopTable LoopTable::induced(const ElementSet& s) const {
  if (!is_subloop(s)) throw Error(ErrorKind::NotASubloop, s.to_string());
  const int m = static_cast<int>(s.size());
  std::vector<std::uint8_t> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i * m + j] = static_cast<std::uint8_t>(s.index_of(mul(s[i], s[j])));
  return LoopTable(m, std::move(t), "");
}

std::vector<ElementSet> LoopTable::subloops() const {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    const std::uint64_t cur = frontier.back();
    frontier.pop_back();
    const ElementSet cs = ElementSet::from_mask(cur);
    for (int x = 0; x < n_; ++x) {
      if ((cur >> x) & 1U) continue;
      ElementSet next = cs;
      next.insert(x);
      const std::uint64_t m = generated_subloop(next).mask();
      if (seen.insert(m).second) frontier.push_back(m);
    }
  }
  std::vector<ElementSet> out;
  out.reserve(seen.size());
  for (auto m : seen) out.push_back(ElementSet::from_mask(m));
  return out;
}

Nuclei LoopTable::nuclei() const {
  std::uint64_t l = 0, m = 0, r = 0;
  for (int a = 0; a < n_; ++a) {
    bool in_l = true, in_m = true, in_r = true;
    for (int x = 0; x < n_ && (in_l || in_m || in_r); ++x)
      for (int y = 0; y < n_; ++y) {
        if (in_l && mul(mul(a, x), y) != mul(a, mul(x, y))) in_l = false;
        if (in_m && mul(mul(x, a), y) != mul(x, mul(a, y))) in_m = false;
        if (in_r && mul(mul(x, y), a) != mul(x, mul(y, a))) in_r = false;
      }
    if (in_l) l |= std::uint64_t{1} << a;
    if (in_m) m |= std::uint64_t{1} << a;
    if (in_r) r |= std::uint64_t{1} << a;
  }
  return {ElementSet::from_mask(l),     ElementSet::from_mask(m),     ElementSet::from_mask(r),
          ElementSet::from_mask(l & m), ElementSet::from_mask(l & r), ElementSet::from_mask(r & m),
          ElementSet::from_mask(l & m & r)};
}

CommutantCenter LoopTable::commutant_and_center() const {
  std::uint64_t c = 0;
  for (int a = 0; a < n_; ++a) {
    bool commutes = true;
    for (int x = 0; x < n_ && commutes; ++x) commutes = mul(a, x) == mul(x, a);
    if (commutes) c |= std::uint64_t{1} << a;
  }
  const ElementSet commutant = ElementSet::from_mask(c);
  return {commutant, commutant & nuclei().nucleus};
}

Normality LoopTable::is_normal(const ElementSet& s) const {
  if (!is_subloop(s)) throw Error(ErrorKind::NotASubloop, s.to_string());
  std::vector<int> cls(n_, -1);
  int classes = 0;
  for (int x = 0; x < n_; ++x) {
    if (cls[x] >= 0) continue;
    for (Element a : s) {
      const Element xa = mul(x, a);
      if (cls[xa] >= 0) return {false, std::make_pair(x, xa), "left cosets overlap"};
      cls[xa] = classes;
    }
    ++classes;
  }
  std::vector<int> class_product(static_cast<std::size_t>(classes) * classes, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      const std::size_t k = static_cast<std::size_t>(cls[a]) * classes + cls[b];
      const int c = cls[mul(a, b)];
      if (class_product[k] < 0) {
        class_product[k] = c;
      } else if (class_product[k] != c) {
        return {false, std::make_pair(a, b), "class of product not determined by classes of factors"};
      }
    }
  return {};
}

std::vector<ElementSet> LoopTable::normal_subloops() const {
  std::vector<ElementSet> out;
  for (const auto& s : subloops())
    if (is_normal(s).normal) out.push_back(s);
  return out;
}

bool LoopTable::is_simple() const {
  if (n_ == 1) return false;
  return normal_subloops().size() == 2;
}

Quotient LoopTable::quotient(const ElementSet& normal_subloop) const {
  const Normality nn = is_normal(normal_subloop);
  if (!nn.normal)
    throw Error(ErrorKind::NotNormal, normal_subloop.to_string() + " (" + nn.reason + " at " +
                                          std::to_string(nn.witness->first) + "," +
                                          std::to_string(nn.witness->second) + ")");
  std::vector<Element> proj(n_, -1);
  std::vector<ElementSet> cosets;
  for (int x = 0; x < n_; ++x) {
    if (proj[x] >= 0) continue;
    ElementSet coset;
    for (Element a : normal_subloop) {
      proj[mul(x, a)] = static_cast<Element>(cosets.size());
      coset.insert(mul(x, a));
    }
    cosets.push_back(coset);
  }
  const int m = static_cast<int>(cosets.size());
  std::vector<std::uint8_t> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i * m + j] = static_cast<std::uint8_t>(proj[mul(cosets[i][0], cosets[j][0])]);
  return {LoopTable(m, std::move(t), ""), std::move(proj), std::move(cosets)};
}

Perm LoopTable::left_translation(Element a) const {
  return Perm(std::vector<std::uint8_t>(mul_.begin() + a * n_, mul_.begin() + (a + 1) * n_), Perm::Unchecked{});
}

Perm LoopTable::right_translation(Element a) const {
  std::vector<std::uint8_t> img(n_);
  for (int x = 0; x < n_; ++x) img[x] = mul_[x * n_ + a];
  return Perm(std::move(img), Perm::Unchecked{});
}

std::vector<std::vector<int>> LoopTable::rows(int base) const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = mul(i, j) + base;
  return out;
}

LoopTable direct_product(const LoopTable& p, const LoopTable& q) {
  const int np = p.order(), nq = q.order(), n = np * nq;
  if (n > kMaxOrder) throw Error(ErrorKind::PreconditionViolated, "product order exceeds 64");
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = static_cast<std::uint8_t>(p.mul(a / nq, b / nq) * nq + q.mul(a % nq, b % nq));
  return LoopTable::from_cells(n, t);
}

LoopTable relabel(const LoopTable& q, const Perm& phi) {
  const int n = q.order();
  if (phi.degree() != n) throw Error(ErrorKind::DegreeMismatch, "relabeling degree differs from loop order");
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[phi(a) * n + phi(b)] = static_cast<std::uint8_t>(phi(q.mul(a, b)));
  return LoopTable::from_cells(n, t, q.name());
}

namespace {

// Elements of a loop listed so that each is either a chosen generator or the
// product of two earlier entries.
struct GenerationPlan {
  std::vector<Element> sequence;
  std::vector<std::pair<int, int>> parents;  // (-1,-1) for generators and e
};

GenerationPlan plan_generation(const LoopTable& q) {
  const int n = q.order();
  GenerationPlan plan;
  std::vector<int> pos(n, -1);
  auto add = [&](Element e, std::pair<int, int> par) {
    pos[e] = static_cast<int>(plan.sequence.size());
    plan.sequence.push_back(e);
    plan.parents.push_back(par);
  };
  add(0, {-1, -1});
  for (Element g = 1; g < n; ++g) {
    if (pos[g] >= 0) continue;
    add(g, {-1, -1});
    for (std::size_t i = 0; i < plan.sequence.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (int flip = 0; flip < 2; ++flip) {
          const int a = flip ? static_cast<int>(j) : static_cast<int>(i);
          const int b = flip ? static_cast<int>(i) : static_cast<int>(j);
          const Element p = q.mul(plan.sequence[a], plan.sequence[b]);
          if (pos[p] < 0) add(p, {a, b});
        }
  }
  return plan;
}

bool is_homomorphism(const LoopTable& p, const LoopTable& q, const std::vector<Element>& phi) {
  const int n = p.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[p.mul(a, b)] != q.mul(phi[a], phi[b])) return false;
  return true;
}

}  // namespace

std::optional<Perm> find_isomorphism(const LoopTable& p, const LoopTable& q) {
  const int n = p.order();
  if (q.order() != n) return std::nullopt;
  const GenerationPlan plan = plan_generation(p);
  std::vector<int> p_ord(n), q_ord(n);
  for (int x = 0; x < n; ++x) {
    p_ord[x] = p.orbit_length(x);
    q_ord[x] = q.orbit_length(x);
  }
  std::vector<Element> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Element> assigned;  // positions in plan order, for undo

  // Depth-first over plan positions; generators branch, derived entries are forced.
  auto solve = [&](auto&& self, std::size_t k) -> bool {
    if (k == plan.sequence.size()) return is_homomorphism(p, q, image);
    const Element src = plan.sequence[k];
    const auto [pa, pb] = plan.parents[k];
    auto try_image = [&](Element t) -> bool {
      if (used[t] || q_ord[t] != p_ord[src]) return false;
      image[src] = t;
      used[t] = 1;
      if (self(self, k + 1)) return true;
      used[t] = 0;
      image[src] = -1;
      return false;
    };
    if (k == 0) return try_image(0);
    if (pa >= 0) return try_image(q.mul(image[plan.sequence[pa]], image[plan.sequence[pb]]));
    for (Element t = 1; t < n; ++t)
      if (try_image(t)) return true;
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return Perm(image);
}

LoopTable canonical_form(const LoopTable& q) {
  const int n = q.order();
  // For relabeling psi^{-1}: cell (i,j) of the result is psi^{-1}(q(psi i, psi j)).
  std::vector<int> psi(n), inv(n);
  std::iota(psi.begin(), psi.end(), 0);
  std::vector<std::uint8_t> best(q.cells().begin(), q.cells().end());
  do {
    for (int i = 0; i < n; ++i) inv[psi[i]] = i;
    int cmp = 0;
    for (int i = 1; i < n && cmp == 0; ++i)
      for (int j = 1; j < n; ++j) {
        const int v = inv[q.mul(psi[i], psi[j])];
        const int b = best[i * n + j];
        if (v != b) {
          cmp = v < b ? -1 : 1;
          break;
        }
      }
    if (cmp < 0)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) best[i * n + j] = static_cast<std::uint8_t>(inv[q.mul(psi[i], psi[j])]);
  } while (std::next_permutation(psi.begin() + 1, psi.end()));
  return LoopTable::from_cells(n, best, q.name());
}

}  // namespace qloop
