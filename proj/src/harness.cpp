#include "qloop/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <map>
#include <sstream>

#include "qloop/decomp.hpp"
#include "qloop/error.hpp"
#include "qloop/identity.hpp"
#include "qloop/io.hpp"
#include "qloop/isostrophe.hpp"
#include "qloop/perm.hpp"
#include "qloop/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qloop {

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name.size() != 2 || std::toupper(static_cast<unsigned char>(name[0])) != 'S') return std::nullopt;
  const int k = name[1] - '0';
  if (k < 1 || k > 8) return std::nullopt;
  return static_cast<Suite>(k);
}

std::string to_string(Suite s) { return "S" + std::to_string(static_cast<int>(s)); }

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (int k = 1; k <= 8; ++k) out.push_back(static_cast<Suite>(k));
  return out;
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Counterexample: return "counterexample";
    case ClaimStatus::Skipped: return "skipped";
    case ClaimStatus::ExpectedFailure: return "expected_failure";
    case ClaimStatus::ControlNotRefuted: return "control_not_refuted";
  }
  return "?";
}

struct Analysis::Cache {
  std::optional<PropertyProfile> profile;
  std::optional<LoopTable> right_iso, left_iso;
  std::optional<PropertyProfile> right_iso_profile;
  std::optional<std::vector<ElementSet>> subloops, normal;
};

Analysis::Analysis(const LoopTable& q, std::string label)
    : q_(q), label_(std::move(label)), cache_(std::make_unique<Cache>()) {}

Analysis::~Analysis() = default;

const PropertyProfile& Analysis::profile() const {
  if (!cache_->profile) cache_->profile = qloop::profile(q_);
  return *cache_->profile;
}

const LoopTable& Analysis::right_isostrophe() const {
  if (!cache_->right_iso) cache_->right_iso = principal_isostrophe(q_, Side::Right);
  return *cache_->right_iso;
}

const LoopTable& Analysis::left_isostrophe() const {
  if (!cache_->left_iso) cache_->left_iso = principal_isostrophe(q_, Side::Left);
  return *cache_->left_iso;
}

const PropertyProfile& Analysis::right_isostrophe_profile() const {
  if (!cache_->right_iso_profile) cache_->right_iso_profile = qloop::profile(right_isostrophe());
  return *cache_->right_iso_profile;
}

const std::vector<ElementSet>& Analysis::subloops() const {
  if (!cache_->subloops) cache_->subloops = q_.subloops();
  return *cache_->subloops;
}

const std::vector<ElementSet>& Analysis::normal_subloops() const {
  if (!cache_->normal) {
    std::vector<ElementSet> out;
    for (const ElementSet& s : subloops())
      if (q_.is_normal(s).normal) out.push_back(s);
    cache_->normal = std::move(out);
  }
  return *cache_->normal;
}

bool Analysis::simple() const { return q_.order() > 1 && normal_subloops().size() == 2; }

bool Analysis::squares_in_two_nuclei() const {
  const auto& p = profile();
  return (p.lns && p.mns) || (p.lns && p.rns) || (p.mns && p.rns);
}

namespace {

using V = Verdict;

std::string el(std::string_view name, Element v) { return std::string(name) + "=" + std::to_string(v); }

std::string els(std::initializer_list<std::pair<std::string_view, Element>> items) {
  std::string out;
  for (const auto& [n, v] : items) {
    if (!out.empty()) out += ",";
    out += el(n, v);
  }
  return out;
}

std::string yn(bool b) { return b ? "true" : "false"; }

V implies(bool hyp, bool concl, const std::string& what) {
  if (!hyp) return V::not_applicable();
  return concl ? V::holds() : V::fails("", what);
}

V iff(bool a, bool b, const std::string& lhs, const std::string& rhs) {
  if (a == b) return V::holds();
  return V::fails("", lhs + "=" + yn(a) + " but " + rhs + "=" + yn(b));
}

std::vector<Perm> translations(const LoopTable& q, Side side) {
  std::vector<Perm> out;
  for (int a = 0; a < q.order(); ++a) out.push_back(translation(q, a, side));
  return out;
}

bool normal_in(const LoopTable& q, const ElementSet& s) { return q.is_normal(s).normal; }

// --- S1: nuclei, autotopisms and translation characterizations --------------

V s1_atp_left(const Analysis& a) {
  const LoopTable& q = a.loop();
  const Perm id = Perm::identity(q.order());
  for (int x = 0; x < q.order(); ++x) {
    const Perm l = q.left_translation(x);
    if (a.profile().nuclei.left.contains(x) != is_autotopism(q, l, id, l))
      return V::fails(el("a", x), "membership in the left nucleus disagrees with (L_a, id, L_a) in Atp");
  }
  return V::holds();
}

V s1_atp_middle(const Analysis& a) {
  const LoopTable& q = a.loop();
  const Perm id = Perm::identity(q.order());
  for (int x = 0; x < q.order(); ++x) {
    const Perm alpha = q.right_translation(x).inverse();
    const Perm beta = q.left_translation(q.right_inv(x)).inverse();
    if (a.profile().nuclei.middle.contains(x) != is_autotopism(q, alpha, beta, id))
      return V::fails(el("a", x), "membership in the middle nucleus disagrees with (R_a^-1, L_{a^r}^-1, id) in Atp");
  }
  return V::holds();
}

V s1_atp_right(const Analysis& a) {
  const LoopTable& q = a.loop();
  const Perm id = Perm::identity(q.order());
  for (int x = 0; x < q.order(); ++x) {
    const Perm r = q.right_translation(x);
    if (a.profile().nuclei.right.contains(x) != is_autotopism(q, id, r, r))
      return V::fails(el("a", x), "membership in the right nucleus disagrees with (id, R_a, R_a) in Atp");
  }
  return V::holds();
}

V s1_translation_forms(const Analysis& a) {
  const LoopTable& q = a.loop();
  const int n = q.order();
  const auto L = translations(q, Side::Left);
  const auto R = translations(q, Side::Right);
  ElementSet l1, l2, m1, m2, r1, r2;
  for (int s = 0; s < n; ++s) {
    bool a1 = true, a2 = true, b1 = true, b2 = true, c1 = true, c2 = true;
    for (int x = 0; x < n; ++x) {
      a1 = a1 && L[s] * L[x] == L[q.mul(s, x)];
      a2 = a2 && L[s] * R[x] == R[x] * L[s];
      b1 = b1 && L[x] * L[s] == L[q.mul(x, s)];
      b2 = b2 && R[x] * R[s] == R[q.mul(s, x)];
      c1 = c1 && R[s] * R[x] == R[q.mul(x, s)];
      c2 = c2 && L[x] * R[s] == R[s] * L[x];
    }
    if (a1) l1.insert(s);
    if (a2) l2.insert(s);
    if (b1) m1.insert(s);
    if (b2) m2.insert(s);
    if (c1) r1.insert(s);
    if (c2) r2.insert(s);
  }
  const Nuclei& nu = a.profile().nuclei;
  if (!(l1 == nu.left && l2 == nu.left)) return V::fails("", "left nucleus " + nu.left.to_string() + " vs translation forms " + l1.to_string() + ", " + l2.to_string());
  if (!(m1 == nu.middle && m2 == nu.middle)) return V::fails("", "middle nucleus " + nu.middle.to_string() + " vs translation forms " + m1.to_string() + ", " + m2.to_string());
  if (!(r1 == nu.right && r2 == nu.right)) return V::fails("", "right nucleus " + nu.right.to_string() + " vs translation forms " + r1.to_string() + ", " + r2.to_string());
  return V::holds();
}

V s1_nuclear_sets(const Analysis& a) {
  const LoopTable& q = a.loop();
  const PropertyProfile& p = a.profile();
  const Nuclei& nu = p.nuclei;
  for (const ElementSet* s : {&nu.left, &nu.middle, &nu.right, &nu.left_middle, &nu.left_right, &nu.right_middle, &nu.nucleus})
    if (!q.is_subloop(*s)) return V::fails("", s->to_string() + " is not a subloop");
  if (!(nu.nucleus == (nu.left & nu.middle & nu.right))) return V::fails("", "Nuc differs from the triple intersection");
  if (!(nu.left_middle == (nu.left & nu.middle) && nu.left_right == (nu.left & nu.right) &&
        nu.right_middle == (nu.right & nu.middle)))
    return V::fails("", "a pairwise intersection is wrong");
  const ElementSet& c = p.commutant;
  if (!(p.center == (c & nu.nucleus) && p.center == (c & nu.left_middle) && p.center == (c & nu.left_right) &&
        p.center == (c & nu.right_middle)))
    return V::fails("", "Z differs from C intersected with some pair of nuclei");
  if (!normal_in(q, p.center)) return V::fails("", "center is not normal");
  return V::holds();
}

V s1_center_inner_fixed(const Analysis& a) {
  const LoopTable& q = a.loop();
  ElementSet fixed = ElementSet::all(q.order());
  for (const Perm& g : inner_generators(q).perms)
    for (int x = 0; x < q.order(); ++x)
      if (!g.fixes(x)) fixed = fixed & ElementSet::from_mask(~(std::uint64_t{1} << x));
  if (fixed == a.profile().center) return V::holds();
  return V::fails("", "fixed points of Inn " + fixed.to_string() + " vs center " + a.profile().center.to_string());
}

// --- S2: inverse properties and the nuclei ------------------------------------

V s2_lip(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.lip, p.nuclei.left == p.nuclei.middle, "Nl=" + p.nuclei.left.to_string() + " Nm=" + p.nuclei.middle.to_string());
}

V s2_rip(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.rip, p.nuclei.right == p.nuclei.middle, "Nr=" + p.nuclei.right.to_string() + " Nm=" + p.nuclei.middle.to_string());
}

V s2_aaip(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.aaip, p.nuclei.left == p.nuclei.right, "Nl=" + p.nuclei.left.to_string() + " Nr=" + p.nuclei.right.to_string());
}

V s2_aip(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.aip) return V::not_applicable();
  if (!p.nuclei.middle.is_subset_of(p.commutant))
    return V::fails("", "Nm=" + p.nuclei.middle.to_string() + " not inside C=" + p.commutant.to_string());
  const auto& nu = p.nuclei;
  if (!(nu.left_middle == p.center && nu.left_right == p.center && nu.right_middle == p.center))
    return V::fails("", "pairwise nuclei " + nu.left_middle.to_string() + nu.left_right.to_string() +
                            nu.right_middle.to_string() + " vs Z=" + p.center.to_string());
  return V::holds();
}

V s2_two_sided(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.lip || p.rip || p.aaip, p.two_sided_inverses, "one-sided inverses differ");
}

V s2_two_of_three(const Analysis& a) {
  const auto& p = a.profile();
  const int k = int{p.lip} + int{p.rip} + int{p.aaip};
  if (k < 2) return V::not_applicable();
  if (k == 3) return V::holds();
  return V::fails("", "lip=" + yn(p.lip) + " rip=" + yn(p.rip) + " aaip=" + yn(p.aaip));
}

V s2_control_aip_two_sided(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.aip) return V::not_applicable();
  if (p.two_sided_inverses) return V::holds();
  for (int x = 0; x < a.loop().order(); ++x)
    if (a.loop().left_inv(x) != a.loop().right_inv(x))
      return V::fails(el("x", x), "x^l=" + std::to_string(a.loop().left_inv(x)) + " x^r=" + std::to_string(a.loop().right_inv(x)));
  return V::fails("", "one-sided inverses differ");
}

// --- S3: principal isostrophes ------------------------------------------------

V s3_involution(const Analysis& a) {
  if (!(principal_isostrophe(a.right_isostrophe(), Side::Right) == a.loop()))
    return V::fails("", "right isostrophe applied twice differs from the loop");
  if (!(principal_isostrophe(a.left_isostrophe(), Side::Left) == a.loop()))
    return V::fails("", "left isostrophe applied twice differs from the loop");
  return V::holds();
}

V s3_same_normal(const Analysis& a) {
  const std::vector<ElementSet>& ours = a.normal_subloops();
  for (const LoopTable* iso : {&a.right_isostrophe(), &a.left_isostrophe()}) {
    const std::vector<ElementSet> theirs = iso->normal_subloops();
    if (theirs != ours) {
      for (const ElementSet& s : theirs)
        if (std::find(ours.begin(), ours.end(), s) == ours.end())
          return V::fails("", s.to_string() + " is normal only in the isostrophe");
      for (const ElementSet& s : ours)
        if (std::find(theirs.begin(), theirs.end(), s) == theirs.end())
          return V::fails("", s.to_string() + " is normal only in the loop");
    }
  }
  return V::holds();
}

V s3_atp_transfer(const Analysis& a) {
  const LoopTable& q = a.loop();
  const LoopTable& o = a.right_isostrophe();
  const int n = q.order();
  const Perm id = Perm::identity(n);
  auto probe = [&](const Autotopism& t, Element x, const char* form) -> std::optional<V> {
    if (is_autotopism(o, t) != is_autotopism(q, isostrophe_atp_transfer(q, t)))
      return V::fails(el("a", x), std::string("transfer changes autotopism status of ") + form);
    return std::nullopt;
  };
  if (auto f = probe({id, id, id}, 0, "(id,id,id)")) return *f;
  for (int x = 0; x < n; ++x) {
    const Perm l = o.left_translation(x);
    const Perm r = o.right_translation(x);
    if (auto f = probe({l, id, l}, x, "(L_a,id,L_a)")) return *f;
    if (auto f = probe({id, r, r}, x, "(id,R_a,R_a)")) return *f;
    if (auto f = probe({r.inverse(), o.left_translation(o.right_inv(x)).inverse(), id}, x, "(R_a^-1,L_{a^r}^-1,id)"))
      return *f;
    if (auto f = probe({l, l, l}, x, "(L_a,L_a,L_a)")) return *f;
  }
  return V::holds();
}

V s3_nuclei_transfer(const Analysis& a) {
  const Nuclei& ours = a.profile().nuclei;
  const Nuclei& theirs = a.right_isostrophe_profile().nuclei;
  if (!(ours.left == theirs.left))
    return V::fails("", "Nl=" + ours.left.to_string() + " but Nl(o)=" + theirs.left.to_string());
  if (!(ours.middle == theirs.right))
    return V::fails("", "Nm=" + ours.middle.to_string() + " but Nr(o)=" + theirs.right.to_string());
  return V::holds();
}

V s3_divisions(const Analysis& a) {
  const LoopTable& q = a.loop();
  const LoopTable& o = a.right_isostrophe();
  isostrophe_divisions(q);  // throws on disagreement
  for (int x = 0; x < q.order(); ++x) {
    if (o.left_inv(x) != q.right_inv(x)) return V::fails(el("x", x), "left inverse in the isostrophe is not x^r");
    if (o.right_inv(x) != q.left_inv(x)) return V::fails(el("x", x), "right inverse in the isostrophe is not x^l");
  }
  return V::holds();
}

V s3_inverse_property_fixed(const Analysis& a) {
  const auto& p = a.profile();
  if (p.lip != (a.left_isostrophe() == a.loop()))
    return V::fails("", "lip=" + yn(p.lip) + " disagrees with the left isostrophe being the loop");
  if (p.rip != (a.right_isostrophe() == a.loop()))
    return V::fails("", "rip=" + yn(p.rip) + " disagrees with the right isostrophe being the loop");
  return V::holds();
}

// --- S4: square identities under left and middle nuclear squares -------------

V s4_square_left_inverse(const Analysis& a) {
  const LoopTable& q = a.loop();
  const ElementSet& nl = a.profile().nuclei.left;
  bool any = false;
  for (int x = 0; x < q.order(); ++x) {
    const Element x2 = q.mul(x, x);
    if (!nl.contains(x2)) continue;
    any = true;
    if (q.mul(x2, q.left_inv(x)) != x) return V::fails(el("a", x), "a^2 a^l != a");
    if (!(q.left_translation(x2) * q.left_translation(q.left_inv(x)) == q.left_translation(x)))
      return V::fails(el("a", x), "L_{a^2} L_{a^l} != L_a");
  }
  return any ? V::holds() : V::not_applicable();
}

bool lns_mns(const Analysis& a) { return a.profile().lns && a.profile().mns; }

V s4_square_translations(const Analysis& a) {
  if (!lns_mns(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const ElementSet& nlm = a.profile().nuclei.left_middle;
  auto L = [&](Element e) { return q.left_translation(e); };
  for (int x = 0; x < q.order(); ++x) {
    const Element xl = q.left_inv(x), xr = q.right_inv(x);
    const Element xll = q.left_inv(xl), xrr = q.right_inv(xr);
    const Element x2 = q.mul(x, x);
    if (q.mul(xl, x2) != xll) return V::fails(el("x", x), "x^l x^2 != x^ll");
    if (!(L(xl) * L(x2) == L(xll))) return V::fails(el("x", x), "L_{x^l} L_{x^2} != L_{x^ll}");
    if (!(L(xl) * L(x) == L(x) * L(xr))) return V::fails(el("x", x), "L_{x^l} L_x != L_x L_{x^r}");
    const Element u = q.mul(x, xrr);
    if (!(L(x) * L(xr).inverse() == L(u))) return V::fails(el("x", x), "L_x L_{x^r}^-1 != L_{x x^rr}");
    if (!nlm.contains(u)) return V::fails(el("x", x), "x x^rr is not in Nlm");
  }
  return V::holds();
}

V s4_xax(const Analysis& a) {
  if (!lns_mns(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const ElementSet& nlm = a.profile().nuclei.left_middle;
  for (Element s : nlm)
    for (int x = 0; x < q.order(); ++x)
      if (!nlm.contains(q.mul(q.mul(x, s), x))) return V::fails(els({{"a", s}, {"x", x}}), "xax is not in Nlm");
  return V::holds();
}

V s4_conjugation(const Analysis& a) {
  if (!lns_mns(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const ElementSet& nlm = a.profile().nuclei.left_middle;
  for (Element s : nlm) {
    const Perm ls = q.left_translation(s);
    for (int x = 0; x < q.order(); ++x) {
      const Perm lx = q.left_translation(x);
      const Element u = q.mul(q.mul(x, s), q.right_inv(x));
      if (!(lx * ls * lx.inverse() == q.left_translation(u)))
        return V::fails(els({{"a", s}, {"x", x}}), "L_x L_a L_x^-1 != L_{x a x^r}");
      if (!nlm.contains(u)) return V::fails(els({{"a", s}, {"x", x}}), "x a x^r is not in Nlm");
      const Element v = q.ldiv(x, q.mul(s, x));
      if (!(lx.inverse() * ls * lx == q.left_translation(v)))
        return V::fails(els({{"a", s}, {"x", x}}), "L_x^-1 L_a L_x != L_{x\\(ax)}");
      if (!nlm.contains(v)) return V::fails(els({{"a", s}, {"x", x}}), "x\\(ax) is not in Nlm");
    }
  }
  return V::holds();
}

// --- S5: nuclear squares, isostrophes and normality ---------------------------

V s5_lns_transfer(const Analysis& a) {
  const auto& p = a.profile();
  const auto& o = a.right_isostrophe_profile();
  if (p.lns != o.lns) return iff(p.lns, o.lns, "lns", "lns(o)");
  if (!p.lns) return V::holds();
  const LoopTable& q = a.loop();
  const LoopTable& iso = a.right_isostrophe();
  for (int x = 0; x < q.order(); ++x) {
    const Element xr = q.right_inv(x);
    const Element sq = q.mul(xr, xr);
    if (q.left_inv(sq) != q.right_inv(sq)) return V::fails(el("x", x), "(x^r)^2 lacks a two-sided inverse");
    if (iso.mul(x, x) != q.right_inv(sq)) return V::fails(el("x", x), "x o x != ((x^r)^2)^-1");
  }
  return V::holds();
}

V s5_two_nuclei_transfer(const Analysis& a) {
  const auto& p = a.profile();
  const auto& o = a.right_isostrophe_profile();
  return iff(p.lns && p.mns, o.lns && o.rns, "lns&mns", "lns&rns(o)");
}

V s5_control_mns_rns(const Analysis& a) {
  if (!a.profile().mns) return V::not_applicable();
  if (a.right_isostrophe_profile().rns) return V::holds();
  const Identity& rns = catalog_identity("rns");
  const CheckResult r = check(a.right_isostrophe(), rns);
  std::string asg;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    asg = els({{"x", c[0]}, {"y", c[1]}, {"z", c[2]}});
  }
  return V::fails(asg, "mns holds but the right isostrophe fails rns");
}

V s5_lm_normal(const Analysis& a) {
  if (!lns_mns(a)) return V::not_applicable();
  const ElementSet& n = a.profile().nuclei.left_middle;
  const Normality nm = a.loop().is_normal(n);
  if (!nm.normal) return V::fails("", "Nlm=" + n.to_string() + " is not normal: " + nm.reason);
  const SectionNormality sn = section_normal_in_mlt(a.loop(), n);
  if (!sn.normal)
    return V::fails(el("a", *sn.element), "L_(Nlm) is not normalized by " + sn.generator->to_string());
  return V::holds();
}

V s5_lr_normal(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.lns && p.rns, normal_in(a.loop(), p.nuclei.left_right), "Nlr=" + p.nuclei.left_right.to_string() + " is not normal");
}

V s5_rm_normal(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.mns && p.rns, normal_in(a.loop(), p.nuclei.right_middle), "Nrm=" + p.nuclei.right_middle.to_string() + " is not normal");
}

V s5_nucleus_normal(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.lns && p.mns && p.rns, normal_in(a.loop(), p.nuclei.nucleus), "Nuc=" + p.nuclei.nucleus.to_string() + " is not normal");
}

V s5_simple(const Analysis& a) {
  if (!a.squares_in_two_nuclei() || !a.simple()) return V::not_applicable();
  const auto& p = a.profile();
  if (p.group || p.unipotent) return V::holds();
  return V::fails("", "simple, squares in two nuclei, neither a group nor of exponent two");
}

// --- S6: central squares --------------------------------------------------------

V s6_power_assoc(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.central_squares) return V::not_applicable();
  const PowerAssociativity pa = is_power_associative(a.loop());
  if (pa.holds) return V::holds();
  return V::fails(el("x", *pa.witness), "<x> is not a group");
}

V s6_cs_ident(const Analysis& a) {
  if (!a.profile().central_squares) return V::not_applicable();
  const CheckResult r = check(a.loop(), catalog_identity("cs_ident"));
  if (r.holds) return V::holds();
  const auto& w = r.counterexample ? *r.counterexample : *r.undefined_at;
  return V::fails(els({{"x", w[0]}, {"y", w[1]}}), r.counterexample ? "x^2 y^2 != xy (x^-1 y^-1)^-1" : "a two-sided inverse is undefined");
}

V s6_cs_aip_endo(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.central_squares) return V::not_applicable();
  return iff(p.aip, p.squaring_endomorphic, "aip", "squaring_endomorphic");
}

V s6_two_nuclei(const Analysis& a) {
  if (!a.squares_in_two_nuclei()) return V::not_applicable();
  const auto& p = a.profile();
  if (p.aip != p.squaring_endomorphic) return iff(p.aip, p.squaring_endomorphic, "aip", "squaring_endomorphic");
  if (p.aip && !p.central_squares) return V::fails("", "aip and endomorphic squaring but squares are not central");
  return V::holds();
}

V s6_fixture_profiles(const Analysis& a) {
  for (const FixtureExpectation& fx : fixture_expectations()) {
    if (fx.label != a.label()) continue;
    const auto fields = a.profile().fields();
    for (const auto& [key, want] : fx.flags) {
      auto it = std::find_if(fields.begin(), fields.end(), [&](const auto& kv) { return kv.first == key; });
      if (it == fields.end()) return V::fails("", "unknown profile field " + key);
      if (it->second != yn(want)) return V::fails("", key + "=" + it->second + ", expected " + yn(want));
    }
    return V::holds();
  }
  return V::not_applicable();
}

// --- S7: torsion decomposition --------------------------------------------------

bool centralizing(const Analysis& a) { return a.profile().squaring_centralizing; }

V s7_layers(const Analysis& a) {
  if (!centralizing(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const std::vector<ElementSet> layers = e_layers(q);
  for (std::size_t k = 0; k < layers.size(); ++k) {
    ElementSet kernel;
    for (int x = 0; x < q.order(); ++x)
      if (q.power(x, 1LL << k) == 0) kernel.insert(x);
    if (!(kernel == layers[k])) return V::fails("", "E_" + std::to_string(k) + " differs from the kernel of s^" + std::to_string(k));
    if (!normal_in(q, layers[k])) return V::fails("", "E_" + std::to_string(k) + " is not normal");
    if (k && !layers[k - 1].is_subset_of(layers[k])) return V::fails("", "layers are not nested");
  }
  if (!normal_in(q, layers.back())) return V::fails("", "E is not normal");
  return V::holds();
}

V s7_e1_quotient(const Analysis& a) {
  if (!centralizing(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const ElementSet e1 = e_layers(q).at(1);
  const int n = q.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!e1.contains(q.associator(x, y, z)))
          return V::fails(els({{"x", x}, {"y", y}, {"z", z}}), "associator outside E_1");
  const LoopTable quot = q.quotient(e1).table;
  if (!quot.is_associative() || !quot.is_commutative()) return V::fails("", "Q/E_1 is not an abelian group");
  return V::holds();
}

V s7_odd_part(const Analysis& a) {
  if (!centralizing(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const ElementSet o = o_part(q);
  if (!o.is_subset_of(a.profile().center)) return V::fails("", "O is not central");
  const ElementSet sq = squares(q);
  for (Element x : o)
    if (!sq.contains(x)) return V::fails(el("x", x), "element of odd order is not a square");
  const LoopTable ind = q.induced(o);
  if (!ind.is_associative() || !ind.is_commutative()) return V::fails("", "O is not an abelian group");
  return V::holds();
}

V s7_decomposition(const Analysis& a) {
  if (!centralizing(a)) return V::not_applicable();
  const LoopTable& q = a.loop();
  const DecompositionResult r = decompose(q);
  if (!((r.e_part & r.o_part) == ElementSet{0})) return V::fails("", "E and O intersect nontrivially");
  for (int x = 0; x < q.order(); ++x) {
    const Split s = split_element(q, x);
    if (!r.e_part.contains(s.b) || !r.o_part.contains(s.c) || q.mul(s.b, s.c) != x)
      return V::fails(el("a", x), "split a=bc with b in E, c in O failed");
  }
  const int n = q.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (r.iso(r.product.mul(u, v)) != q.mul(r.iso(u), r.iso(v)))
        return V::fails(els({{"u", u}, {"v", v}}), "E x O -> Q is not multiplicative");
  return V::holds();
}

V s7_control_central_squares(const Analysis& a) {
  if (!a.profile().central_squares) return V::not_applicable();
  try {
    decompose(a.loop());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated) throw;
    return V::fails("", e.what());
  }
  return V::holds();
}

// --- S8: left C loops -------------------------------------------------------------

V s8_characterizations(const Analysis& a) {
  const LoopTable& q = a.loop();
  const LeftCReport r = classify_left_c(q);  // throws if the five disagree
  for (const char* side : {"left_c_", "right_c_"}) {
    const bool first = satisfies(q, std::string(side) + "1");
    for (int k = 2; k <= 4; ++k)
      if (satisfies(q, std::string(side) + std::to_string(k)) != first)
        return V::fails("", std::string(side) + "1 and " + side + std::to_string(k) + " disagree");
  }
  if (r.verdict != a.profile().left_c) return V::fails("", "left C verdict disagrees with the profile");
  return V::holds();
}

V s8_c_sides(const Analysis& a) {
  const auto& p = a.profile();
  return iff(p.c_loop, p.left_c && p.right_c, "c_loop", "left_c&right_c");
}

V s8_left_c_squares(const Analysis& a) {
  const auto& p = a.profile();
  return implies(p.left_c, p.lns && p.mns, "left C without left and middle nuclear squares");
}

V s8_left_nucleus_normal(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.left_c) return V::not_applicable();
  if (!(p.nuclei.left == p.nuclei.middle)) return V::fails("", "Nl != Nm in a left C loop");
  if (!normal_in(a.loop(), p.nuclei.left)) return V::fails("", "Nl=" + p.nuclei.left.to_string() + " is not normal");
  const SectionNormality sn = section_normal_in_mlt(a.loop(), p.nuclei.left);
  if (!sn.normal) return V::fails(el("a", *sn.element), "L_(Nl) is not normal in Mlt");
  return V::holds();
}

V s8_steiner_quotient(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.left_c) return V::not_applicable();
  const LoopTable quot = a.loop().quotient(p.nuclei.left).table;
  if (!satisfies(quot, "left_steiner")) return V::fails("", "Q/Nl does not satisfy x(xy)=y");
  return V::holds();
}

V s8_left_steiner_forms(const Analysis& a) {
  const auto& p = a.profile();
  const bool ls = p.left_steiner;
  if (ls != (p.lalt && p.unipotent)) return iff(ls, p.lalt && p.unipotent, "left_steiner", "lalt&unipotent");
  if (ls != (p.lip && p.unipotent)) return iff(ls, p.lip && p.unipotent, "left_steiner", "lip&unipotent");
  if (ls != (p.left_c && p.unipotent)) return iff(ls, p.left_c && p.unipotent, "left_steiner", "left_c&unipotent");
  return V::holds();
}

V s8_steiner_sides(const Analysis& a) {
  const auto& p = a.profile();
  const bool both = p.left_steiner && p.right_steiner;
  if (p.steiner != both) return iff(p.steiner, both, "steiner", "left_steiner&right_steiner");
  if (both && !a.loop().is_commutative()) return V::fails("", "left and right Steiner but not commutative");
  return V::holds();
}

V s8_simple_left_c(const Analysis& a) {
  const auto& p = a.profile();
  if (!p.left_c || !a.simple()) return V::not_applicable();
  return (p.group || p.left_steiner) ? V::holds() : V::fails("", "simple left C loop is neither a group nor left Steiner");
}

V s8_single_axiom(const Analysis& a) {
  const auto& p = a.profile();
  return iff(satisfies(a.loop(), "aip_left_c"), p.left_c && p.aip, "aip_left_c", "left_c&aip");
}

V s8_aip_left_c_decomposes(const Analysis& a) {
  const auto& p = a.profile();
  if (!(p.left_c && p.aip)) return V::not_applicable();
  if (!p.squaring_centralizing) return V::fails("", "AIP left C loop without centralizing endomorphic squaring");
  decompose(a.loop());
  return V::holds();
}

std::vector<Claim> build_claims() {
  using S = Suite;
  std::vector<Claim> c = {
      {"S1.atp_left_nucleus", S::S1, "a in Nl <=> (L_a, id, L_a) is an autotopism", false, s1_atp_left},
      {"S1.atp_middle_nucleus", S::S1, "a in Nm <=> (R_a^-1, L_{a^r}^-1, id) is an autotopism", false, s1_atp_middle},
      {"S1.atp_right_nucleus", S::S1, "a in Nr <=> (id, R_a, R_a) is an autotopism", false, s1_atp_right},
      {"S1.translation_forms", S::S1, "each nucleus equals both of its translation characterizations", false, s1_translation_forms},
      {"S1.nuclear_sets", S::S1, "nuclei are subloops; Z = C & Nuc = C & N_ij for every pair; Z is normal", false, s1_nuclear_sets},
      {"S1.center_inner_fixed", S::S1, "Z is the common fixed point set of the inner generators", false, s1_center_inner_fixed},

      {"S2.lip_left_middle", S::S2, "LIP => Nl = Nm", false, s2_lip},
      {"S2.rip_right_middle", S::S2, "RIP => Nr = Nm", false, s2_rip},
      {"S2.aaip_left_right", S::S2, "AAIP => Nl = Nr", false, s2_aaip},
      {"S2.aip_middle_central", S::S2, "AIP => Nm in C and Nlm = Nlr = Nrm = Z", false, s2_aip},
      {"S2.inverse_properties_two_sided", S::S2, "LIP or RIP or AAIP => two-sided inverses", false, s2_two_sided},
      {"S2.two_of_three", S::S2, "any two of LIP, RIP, AAIP => the third", false, s2_two_of_three},
      {"S2.control_aip_two_sided", S::S2, "(must be refuted) AIP => two-sided inverses", true, s2_control_aip_two_sided},

      {"S3.isostrophe_involution", S::S3, "each principal isostrophe applied twice is the identity", false, s3_involution},
      {"S3.same_normal_subloops", S::S3, "a loop and its principal isostrophes have the same normal subloops", false, s3_same_normal},
      {"S3.autotopism_transfer", S::S3, "(a,b,c) in Atp(o) <=> (c, rho b lambda, a) in Atp(.)", false, s3_atp_transfer},
      {"S3.nuclei_transfer", S::S3, "Nl(.) = Nl(o) and Nm(.) = Nr(o)", false, s3_nuclei_transfer},
      {"S3.isostrophe_divisions", S::S3, "x\\\\y = (y\\x)^l, x//y = x y^r, inverses swap", false, s3_divisions},
      {"S3.inverse_property_fixed", S::S3, "LIP <=> left isostrophe is Q; RIP <=> right isostrophe is Q", false, s3_inverse_property_fixed},

      {"S4.square_left_inverse", S::S4, "a^2 in Nl => a^2 a^l = a and L_{a^2} L_{a^l} = L_a", false, s4_square_left_inverse},
      {"S4.square_translations", S::S4, "LNS & MNS => x^l x^2 = x^ll, L_{x^l} L_x = L_x L_{x^r}, L_x L_{x^r}^-1 = L_{x x^rr}, x x^rr in Nlm", false, s4_square_translations},
      {"S4.xax_in_nucleus", S::S4, "LNS & MNS, a in Nlm => xax in Nlm", false, s4_xax},
      {"S4.conjugation", S::S4, "LNS & MNS, a in Nlm => L_x L_a L_x^-1 = L_{x a x^r}, L_x^-1 L_a L_x = L_{x\\(ax)}, both in Nlm", false, s4_conjugation},

      {"S5.lns_transfer", S::S5, "LNS(.) <=> LNS(o), with x o x = ((x^r)^2)^-1", false, s5_lns_transfer},
      {"S5.two_nuclei_transfer", S::S5, "LNS & MNS (.) <=> LNS & RNS (o)", false, s5_two_nuclei_transfer},
      {"S5.control_mns_rns", S::S5, "(must be refuted) MNS(.) => RNS(o)", true, s5_control_mns_rns},
      {"S5.lm_nucleus_normal", S::S5, "LNS & MNS => Nlm normal and L_(Nlm) normal in Mlt", false, s5_lm_normal},
      {"S5.lr_nucleus_normal", S::S5, "LNS & RNS => Nlr normal", false, s5_lr_normal},
      {"S5.rm_nucleus_normal", S::S5, "MNS & RNS => Nrm normal", false, s5_rm_normal},
      {"S5.nucleus_normal", S::S5, "LNS & MNS & RNS => Nuc normal", false, s5_nucleus_normal},
      {"S5.simple_two_nuclei", S::S5, "simple with squares in two nuclei => group or exponent two", false, s5_simple},

      {"S6.central_squares_power_associative", S::S6, "central squares => power-associative", false, s6_power_assoc},
      {"S6.central_squares_identity", S::S6, "central squares => x^2 y^2 = xy (x^-1 y^-1)^-1", false, s6_cs_ident},
      {"S6.central_squares_aip_endo", S::S6, "central squares => (AIP <=> endomorphic squaring)", false, s6_cs_aip_endo},
      {"S6.two_nuclei_aip_endo", S::S6, "squares in two nuclei => (AIP <=> endomorphic squaring), and then central squares", false, s6_two_nuclei},
      {"S6.fixture_profiles", S::S6, "fixture profiles match their recorded property values", false, s6_fixture_profiles},

      {"S7.e_layers", S::S7, "centralizing endomorphic squaring => each E_n = ker s^n is normal, E normal", false, s7_layers},
      {"S7.e1_quotient_abelian", S::S7, "centralizing endomorphic squaring => associators in E_1, Q/E_1 abelian group", false, s7_e1_quotient},
      {"S7.odd_part_central", S::S7, "centralizing endomorphic squaring => O central abelian group of squares", false, s7_odd_part},
      {"S7.decomposition", S::S7, "centralizing endomorphic squaring => Q = E x O by a verified isomorphism", false, s7_decomposition},
      {"S7.control_central_squares", S::S7, "(must be refuted) central squares alone admit the decomposition", true, s7_control_central_squares},

      {"S8.left_c_characterizations", S::S8, "left C <=> LNS&LAlt <=> MNS&LAlt <=> LNS&LIP <=> MNS&LIP; four forms agree, mirrors agree", false, s8_characterizations},
      {"S8.c_loop_sides", S::S8, "C <=> left C & right C", false, s8_c_sides},
      {"S8.left_c_squares", S::S8, "left C => LNS & MNS", false, s8_left_c_squares},
      {"S8.left_nucleus_normal", S::S8, "left C => Nl = Nm, Nl normal, L_(Nl) normal in Mlt", false, s8_left_nucleus_normal},
      {"S8.left_steiner_quotient", S::S8, "left C => Q/Nl satisfies x(xy) = y", false, s8_steiner_quotient},
      {"S8.left_steiner_forms", S::S8, "x(xy)=y <=> LAlt & exponent 2 <=> LIP & exponent 2 <=> left C & exponent 2", false, s8_left_steiner_forms},
      {"S8.steiner_sides", S::S8, "Steiner <=> left Steiner & right Steiner; the latter forces commutativity", false, s8_steiner_sides},
      {"S8.simple_left_c", S::S8, "simple left C => group or left Steiner", false, s8_simple_left_c},
      {"S8.single_axiom", S::S8, "x((y(yx))z) = (yx)((yx)z) <=> left C & AIP", false, s8_single_axiom},
      {"S8.aip_left_c_decomposes", S::S8, "AIP left C => centralizing endomorphic squaring and Q = E x O", false, s8_aip_left_c_decomposes},
  };
  return c;
}

struct Accum {
  std::uint64_t examined = 0;
  std::uint64_t applicable = 0;
  bool failed = false;
  std::pair<std::uint64_t, std::uint64_t> first_at{};  // (branch, sequence) in catalog order
  CounterexampleRecord record;

  void note_failure(std::pair<std::uint64_t, std::uint64_t> at, CounterexampleRecord r) {
    if (failed && first_at <= at) return;
    failed = true;
    first_at = at;
    record = std::move(r);
  }

  void merge(const Accum& o) {
    examined += o.examined;
    applicable += o.applicable;
    if (o.failed) note_failure(o.first_at, o.record);
  }
};

std::vector<const Claim*> select(const std::vector<Suite>& suites) {
  std::vector<const Claim*> out;
  for (const Claim& c : claims())
    if (suites.empty() || std::find(suites.begin(), suites.end(), c.suite) != suites.end()) out.push_back(&c);
  return out;
}

void run_one(const LoopTable& q, const std::string& label, std::pair<std::uint64_t, std::uint64_t> at,
             const std::vector<const Claim*>& sel, std::vector<Accum>& acc) {
  const Analysis a(q, label);
  for (std::size_t k = 0; k < sel.size(); ++k) {
    Verdict v;
    try {
      v = sel[k]->check(a);
    } catch (const Error& e) {
      v = Verdict::fails("", e.what());
    }
    ++acc[k].examined;
    if (v.kind == Verdict::Kind::NotApplicable) continue;
    ++acc[k].applicable;
    if (v.kind == Verdict::Kind::Fails) acc[k].note_failure(at, {label, format_loop(q, 0), v.assignment, v.detail});
  }
}

VerificationReport assemble(const std::vector<const Claim*>& sel, const std::vector<Accum>& acc) {
  VerificationReport r;
  for (std::size_t k = 0; k < sel.size(); ++k) {
    const Claim& c = *sel[k];
    if (r.suites.empty() || r.suites.back().suite != c.suite) r.suites.push_back({c.suite, {}});
    ClaimResult cr;
    cr.id = c.id;
    cr.statement = c.statement;
    cr.examined = acc[k].examined;
    cr.applicable = acc[k].applicable;
    if (acc[k].failed) cr.counterexample = acc[k].record;
    if (c.negative_control) {
      cr.status = acc[k].failed ? ClaimStatus::ExpectedFailure : ClaimStatus::ControlNotRefuted;
    } else if (acc[k].failed) {
      cr.status = ClaimStatus::Counterexample;
    } else if (cr.applicable == 0) {
      cr.status = ClaimStatus::Skipped;
      cr.note = "no loop in the catalog meets the hypotheses";
    } else {
      cr.status = ClaimStatus::Verified;
    }
    r.suites.back().claims.push_back(std::move(cr));
  }
  return r;
}

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// Catalog index in the high bits keeps earlier catalogs first when merging.
constexpr std::uint64_t kCatalogShift = 48;

void run_list(const std::vector<CatalogLoop>& loops, std::uint64_t catalog_index, const std::vector<const Claim*>& sel,
              int workers, std::vector<Accum>& total) {
  const int n = static_cast<int>(loops.size());
  const int threads = thread_count(workers);
  std::vector<std::vector<Accum>> part(threads, std::vector<Accum>(sel.size()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int i = 0; i < n; ++i) {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    run_one(loops[i].loop, loops[i].label, {catalog_index << kCatalogShift, static_cast<std::uint64_t>(i)}, sel, part[t]);
  }
  for (const auto& p : part)
    for (std::size_t k = 0; k < sel.size(); ++k) total[k].merge(p[k]);
}

std::uint64_t run_exhaustive(int order, std::uint64_t catalog_index, const std::vector<const Claim*>& sel, int workers,
                             std::vector<Accum>& total) {
  SearchSpec spec;
  spec.order = order;
  const std::vector<SearchBranch> branches = root_branches(spec);
  const int nb = static_cast<int>(branches.size());
  std::vector<std::vector<Accum>> part(nb, std::vector<Accum>(sel.size()));
  std::vector<std::uint64_t> counts(nb, 0);
  const int threads = thread_count(workers);
  const std::string prefix = "order " + std::to_string(order) + " table ";
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int b = 0; b < nb; ++b) {
    SearchStats stats;
    search_branch(
        spec, branches[b],
        [&, b](const LoopTable& q) {
          const std::uint64_t seq = counts[b]++;
          run_one(q, prefix + std::to_string(b) + "." + std::to_string(seq),
                  {(catalog_index << kCatalogShift) | static_cast<std::uint64_t>(b), seq}, sel, part[b]);
          return true;
        },
        stats);
  }
  (void)threads;
  std::uint64_t total_count = 0;
  for (int b = 0; b < nb; ++b) {
    for (std::size_t k = 0; k < sel.size(); ++k) total[k].merge(part[b][k]);
    total_count += counts[b];
  }
  return total_count;
}

}  // namespace

const std::vector<Claim>& claims() {
  static const std::vector<Claim> c = build_claims();
  return c;
}

const std::vector<FixtureExpectation>& fixture_expectations() {
  static const std::vector<FixtureExpectation> e = {
      {"aip5", {{"aip", true}, {"two_sided_inverses", false}}},
      {"iso_pair_dot", {{"mns", true}}},
      {"iso_pair_circ", {{"rns", false}}},
      {"lns_aip_no_endo6", {{"lns", true}, {"aip", true}, {"squaring_endomorphic", false}}},
      {"mns_aip_no_endo6", {{"mns", true}, {"aip", true}, {"commuting_squares", true}, {"squaring_endomorphic", false}}},
      {"mns_cs_endo_no_aip8",
       {{"mns", true}, {"commuting_squares", true}, {"squaring_endomorphic", true}, {"aip", false}}},
      {"lns_endo_aip_no_cs8",
       {{"lns", true}, {"squaring_endomorphic", true}, {"aip", true}, {"commuting_squares", false}}},
      {"mns_endo_aip_no_lns8",
       {{"mns", true}, {"squaring_endomorphic", true}, {"aip", true}, {"commuting_squares", true}, {"lns", false}}},
      {"dihedral8", {{"group", true}, {"central_squares", true}, {"squaring_endomorphic", false}}},
  };
  return e;
}

std::vector<CatalogLoop> fixture_catalog(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".loop") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogLoop> out;
  for (const auto& f : files) {
    LoadedLoop l = load_loop(f);
    out.push_back({std::move(l.loop), f.stem().string()});
  }
  return out;
}

VerificationReport verify_catalog(const std::vector<CatalogLoop>& loops, const std::vector<Suite>& suites,
                                  const std::string& catalog_label, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto sel = select(suites);
  std::vector<Accum> acc(sel.size());
  run_list(loops, 0, sel, workers, acc);
  VerificationReport r = assemble(sel, acc);
  r.catalogs.push_back({catalog_label, loops.size()});
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify_theorems(const VerifyOptions& opts) {
  if (opts.max_order >= 7 && !opts.allow_order7)
    throw Error(ErrorKind::PreconditionViolated, "exhaustive order 7 needs the explicit opt-in");
  if (opts.max_order > 7) throw Error(ErrorKind::PreconditionViolated, "exhaustive verification stops at order 7");
  const auto start = std::chrono::steady_clock::now();
  const auto sel = select(opts.suites);
  std::vector<Accum> acc(sel.size());
  std::vector<CatalogSummary> cats;
  std::uint64_t idx = 0;
  if (opts.include_fixtures) {
    const auto fx = fixture_catalog(opts.fixture_dir);
    run_list(fx, idx++, sel, opts.workers, acc);
    cats.push_back({"fixtures", fx.size()});
  }
  for (int n = std::max(1, opts.min_order); n <= opts.max_order; ++n) {
    const std::uint64_t count = run_exhaustive(n, idx++, sel, opts.workers, acc);
    cats.push_back({"order " + std::to_string(n), count});
  }
  VerificationReport r = assemble(sel, acc);
  r.catalogs = std::move(cats);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool VerificationReport::passed() const {
  for (const SuiteReport& s : suites)
    for (const ClaimResult& c : s.claims)
      if (c.status == ClaimStatus::Counterexample || c.status == ClaimStatus::ControlNotRefuted) return false;
  return true;
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const CatalogSummary& c : catalogs) out << "catalog " << c.label << ": " << c.loops << " loops\n";
  for (const SuiteReport& s : suites) {
    out << to_string(s.suite) << "\n";
    for (const ClaimResult& c : s.claims) {
      out << "  " << c.id << " " << to_string(c.status) << " applicable=" << c.applicable << "/" << c.examined
          << "  # " << c.statement << "\n";
      if (c.counterexample) {
        const CounterexampleRecord& r = *c.counterexample;
        out << "    loop: " << r.loop_label << "\n";
        if (!r.assignment.empty()) out << "    assignment: " << r.assignment << "\n";
        out << "    detail: " << r.detail << "\n";
        std::istringstream lines(r.loop_text);
        for (std::string line; std::getline(lines, line);) out << "    | " << line << "\n";
      }
      if (!c.note.empty()) out << "    note: " << c.note << "\n";
    }
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace qloop
