#include "qloop/variety.hpp"

#include <algorithm>

#include "qloop/error.hpp"
#include "qloop/identity.hpp"

namespace qloop {

bool satisfies(const LoopTable& q, std::string_view catalog_name) {
  return check(q, catalog_identity(catalog_name)).holds;
}

ElementSet squares(const LoopTable& q) {
  ElementSet s;
  for (int x = 0; x < q.order(); ++x) s.insert(q.mul(x, x));
  return s;
}

PowerAssociativity is_power_associative(const LoopTable& q) {
  for (int x = 0; x < q.order(); ++x)
    if (!q.induced(q.generated_subloop({x})).is_associative()) return {false, x};
  return {};
}

PropertyProfile profile(const LoopTable& q) {
  PropertyProfile p;
  p.lip = satisfies(q, "lip");
  p.rip = satisfies(q, "rip");
  p.aaip = satisfies(q, "aaip");
  p.aip = satisfies(q, "aip");
  p.two_sided_inverses = satisfies(q, "two_sided_inverses");
  p.lalt = satisfies(q, "lalt");
  p.ralt = satisfies(q, "ralt");
  p.lns = satisfies(q, "lns");
  p.mns = satisfies(q, "mns");
  p.rns = satisfies(q, "rns");
  p.commuting_squares = satisfies(q, "commuting_squares");
  p.squaring_endomorphic = satisfies(q, "squaring_endomorphic");
  p.power_associative = is_power_associative(q).holds;
  p.left_c = satisfies(q, "left_c_1");
  p.right_c = satisfies(q, "right_c_1");
  p.c_loop = satisfies(q, "c");
  p.group = satisfies(q, "associativity");
  p.left_steiner = satisfies(q, "left_steiner");
  p.right_steiner = satisfies(q, "right_steiner");
  p.steiner = q.is_commutative() && p.left_steiner;
  p.unipotent = satisfies(q, "unipotent");

  p.nuclei = q.nuclei();
  const CommutantCenter cc = q.commutant_and_center();
  p.commutant = cc.commutant;
  p.center = cc.center;
  p.central_squares = squares(q).is_subset_of(p.center);
  p.squaring_centralizing = p.squaring_endomorphic && p.central_squares;
  return p;
}

std::vector<std::pair<std::string, std::string>> PropertyProfile::fields(int base) const {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::vector<std::pair<std::string, std::string>> f = {
      {"aaip", b(aaip)},
      {"aip", b(aip)},
      {"c_loop", b(c_loop)},
      {"center", center.to_string(base)},
      {"central_squares", b(central_squares)},
      {"commutant", commutant.to_string(base)},
      {"commuting_squares", b(commuting_squares)},
      {"group", b(group)},
      {"lalt", b(lalt)},
      {"left_c", b(left_c)},
      {"left_steiner", b(left_steiner)},
      {"lip", b(lip)},
      {"lns", b(lns)},
      {"mns", b(mns)},
      {"nuc", nuclei.nucleus.to_string(base)},
      {"nuc_l", nuclei.left.to_string(base)},
      {"nuc_lm", nuclei.left_middle.to_string(base)},
      {"nuc_lr", nuclei.left_right.to_string(base)},
      {"nuc_m", nuclei.middle.to_string(base)},
      {"nuc_r", nuclei.right.to_string(base)},
      {"nuc_rm", nuclei.right_middle.to_string(base)},
      {"power_associative", b(power_associative)},
      {"ralt", b(ralt)},
      {"right_c", b(right_c)},
      {"right_steiner", b(right_steiner)},
      {"rip", b(rip)},
      {"rns", b(rns)},
      {"squaring_centralizing", b(squaring_centralizing)},
      {"squaring_endomorphic", b(squaring_endomorphic)},
      {"steiner", b(steiner)},
      {"two_sided_inverses", b(two_sided_inverses)},
      {"unipotent", b(unipotent)},
  };
  std::sort(f.begin(), f.end());
  return f;
}

std::string PropertyProfile::render(int base) const {
  std::string out;
  for (const auto& [k, v] : fields(base)) out += k + ": " + v + "\n";
  return out;
}

LeftCReport classify_left_c(const LoopTable& q) {
  LeftCReport r;
  const bool lns = satisfies(q, "lns");
  const bool mns = satisfies(q, "mns");
  const bool lalt = satisfies(q, "lalt");
  const bool lip = satisfies(q, "lip");
  r.bol_moufang = satisfies(q, "left_c_1");
  r.lns_lalt = lns && lalt;
  r.mns_lalt = mns && lalt;
  r.lns_lip = lns && lip;
  r.mns_lip = mns && lip;
  const bool all_same = r.lns_lalt == r.bol_moufang && r.mns_lalt == r.bol_moufang &&
                        r.lns_lip == r.bol_moufang && r.mns_lip == r.bol_moufang;
  if (!all_same)
    throw Error(ErrorKind::InternalInconsistency, "left C characterizations disagree on " +
                                                      (q.name().empty() ? std::string("loop") : q.name()));
  r.verdict = r.bol_moufang;
  return r;
}

}  // namespace qloop
