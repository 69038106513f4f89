// Acceptance run: one PASS/FAIL line per criterion, details under failures.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qloop/decomp.hpp"
#include "qloop/error.hpp"
#include "qloop/harness.hpp"
#include "qloop/identity.hpp"
#include "qloop/io.hpp"
#include "qloop/isostrophe.hpp"
#include "qloop/perm.hpp"
#include "qloop/search.hpp"
#include "qloop/variety.hpp"

#ifndef QLOOP_FIXTURE_DIR
#define QLOOP_FIXTURE_DIR "fixtures"
#endif

using namespace qloop;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

LoopTable fixture(const std::string& stem) {
  return load_loop(std::string(QLOOP_FIXTURE_DIR) + "/" + stem + ".loop").loop;
}

// Arithmetic in the 1-based labels of the fixture files.
int m1(const LoopTable& q, int a, int b) { return q.mul(a - 1, b - 1) + 1; }
int sq1(const LoopTable& q, int a) { return m1(q, a, a); }
int ld1(const LoopTable& q, int a, int b) { return q.ldiv(a - 1, b - 1) + 1; }

const ClaimResult* find_claim(const VerificationReport& r, const std::string& id) {
  for (const SuiteReport& s : r.suites)
    for (const ClaimResult& c : s.claims)
      if (c.id == id) return &c;
  return nullptr;
}

bool flag(const PropertyProfile& p, const std::string& key) {
  for (const auto& [k, v] : p.fields())
    if (k == key) return v == "true";
  throw Error(ErrorKind::InternalInconsistency, "no profile field " + key);
}

// --- 1 ---------------------------------------------------------------------

void fixture_fidelity(Criterion& c) {
  const auto start = Clock::now();
  const auto cat = fixture_catalog(QLOOP_FIXTURE_DIR);
  c.expect(cat.size() == 9, "expected 9 fixture files, found " + std::to_string(cat.size()));

  const LoopTable aip5 = fixture("aip5");
  c.expect(aip5.left_inv(1) == 2 && aip5.right_inv(1) == 3, "aip5: 1^l = 2 and 1^r = 3");
  c.expect(check(aip5, catalog_identity("aip")).holds, "aip5: AIP holds");

  const LoopTable dot = fixture("iso_pair_dot"), circ = fixture("iso_pair_circ");
  c.expect(principal_isostrophe(dot, Side::Right) == circ, "right isostrophe of iso_pair_dot equals iso_pair_circ");
  c.expect(dot.nuclei().middle == ElementSet({0, 1}), "Nm(dot) = {1,2} 1-based");
  c.expect(circ.nuclei().right == ElementSet({0, 1}), "Nr(circ) = {1,2} 1-based");
  c.expect(satisfies(dot, "mns"), "dot has MNS");
  c.expect(!satisfies(circ, "rns"), "circ fails RNS");

  for (const FixtureExpectation& fx : fixture_expectations()) {
    const PropertyProfile p = profile(fixture(fx.label));
    for (const auto& [key, want] : fx.flags)
      c.expect(flag(p, key) == want, fx.label + ": " + key + " should be " + (want ? "true" : "false"));
  }

  // lns_aip_no_endo6: 4^2 2^2 = 1*3 = 3 but (4*2)^2 = 6^2 = 2; 3^2*4 = 2*4 = 5 != 6 = 4*2 = 4*3^2.
  const LoopTable e1 = fixture("lns_aip_no_endo6");
  c.expect(sq1(e1, 4) == 1 && sq1(e1, 2) == 3 && m1(e1, 1, 3) == 3, "lns_aip_no_endo6: 4^2*2^2 = 1*3 = 3");
  c.expect(m1(e1, 4, 2) == 6 && sq1(e1, 6) == 2, "lns_aip_no_endo6: (4*2)^2 = 6^2 = 2");
  c.expect(sq1(e1, 3) == 2 && m1(e1, 2, 4) == 5 && m1(e1, 4, 2) == 6, "lns_aip_no_endo6: 3^2*4 = 5 != 6 = 4*3^2");
  c.expect(!e1.commutant_and_center().commutant.contains(sq1(e1, 3) - 1), "lns_aip_no_endo6: 3^2 not in C");

  // mns_aip_no_endo6: 2^2 4^2 = 3*1 = 3 but (2*4)^2 = 5^2 = 2.
  const LoopTable e2 = fixture("mns_aip_no_endo6");
  c.expect(sq1(e2, 2) == 3 && sq1(e2, 4) == 1 && m1(e2, 3, 1) == 3, "mns_aip_no_endo6: 2^2*4^2 = 3*1 = 3");
  c.expect(m1(e2, 2, 4) == 5 && sq1(e2, 5) == 2, "mns_aip_no_endo6: (2*4)^2 = 5^2 = 2");

  // mns_cs_endo_no_aip8: (3*5)\1 = 7\1 = 5 but (3\1)(5\1) = 3*8 = 6.
  const LoopTable e3 = fixture("mns_cs_endo_no_aip8");
  c.expect(m1(e3, 3, 5) == 7 && ld1(e3, 7, 1) == 5, "mns_cs_endo_no_aip8: (3*5)\\1 = 7\\1 = 5");
  c.expect(ld1(e3, 3, 1) == 3 && ld1(e3, 5, 1) == 8 && m1(e3, 3, 8) == 6, "mns_cs_endo_no_aip8: (3\\1)(5\\1) = 3*8 = 6");

  // lns_endo_aip_no_cs8: 3^2*3 = 2*3 = 4 != 5 = 3*2 = 3*3^2. The literal
  // exponent 3 on the left factor is checked against the table too.
  const LoopTable e4 = fixture("lns_endo_aip_no_cs8");
  c.expect(sq1(e4, 3) == 2 && m1(e4, 2, 3) == 4 && m1(e4, 3, 2) == 5, "lns_endo_aip_no_cs8: 3^2*3 = 4 != 5 = 3*3^2");
  const int cube = e4.power(2, 3) + 1;
  const int cube_times = m1(e4, cube, 3);
  c.expect(cube_times != 4, "lns_endo_aip_no_cs8: the cube reading 3^3*3 should not give 4");
  c.note("lns_endo_aip_no_cs8: 3^3 = " + std::to_string(cube) + ", 3^3*3 = " + std::to_string(cube_times) +
         "; the table supports the 3^2*3 reading");

  // mns_endo_aip_no_lns8: (3^2*3)*3 = (2*3)*3 = 4*3 = 8 != 1 = 2*2 = 3^2*(3*3).
  const LoopTable e5 = fixture("mns_endo_aip_no_lns8");
  c.expect(sq1(e5, 3) == 2 && m1(e5, 2, 3) == 4 && m1(e5, 4, 3) == 8, "mns_endo_aip_no_lns8: (3^2*3)*3 = 8");
  c.expect(m1(e5, 3, 3) == 2 && m1(e5, 2, 2) == 1, "mns_endo_aip_no_lns8: 3^2*(3*3) = 1");
  const Identity& lns = catalog_identity("lns");
  const std::vector<Element> witness{2, 2, 2};
  c.expect(eval_term(lns.lhs, witness, e5) != eval_term(lns.rhs, witness, e5),
           "mns_endo_aip_no_lns8: LNS fails at x = y = z = 3");
  const CheckResult r = check(e5, lns);
  if (r.counterexample) {
    std::string s;
    for (Element v : *r.counterexample) s += std::to_string(v + 1) + " ";
    c.note("mns_endo_aip_no_lns8: first LNS counterexample in scan order (1-based) " + s);
  }

  const PropertyProfile d = profile(fixture("dihedral8"));
  c.expect(d.group && d.central_squares && !d.squaring_endomorphic, "dihedral8: group with central squares, not endomorphic");

  const double t = since(start);
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
  c.note("runtime " + std::to_string(t) + " s");
}

// --- 2 ---------------------------------------------------------------------

void small_orders(Criterion& c) {
  const auto start = Clock::now();
  VerifyOptions o;
  o.min_order = 1;
  o.max_order = 5;
  o.include_fixtures = false;
  o.suites = {Suite::S1, Suite::S2, Suite::S3, Suite::S4};
  const VerificationReport r = verify_theorems(o);
  const double t = since(start);
  c.expect(r.passed(), "report failed:\n" + r.render());
  std::vector<std::uint64_t> sizes;
  for (const CatalogSummary& s : r.catalogs) sizes.push_back(s.loops);
  c.expect(sizes == std::vector<std::uint64_t>{1, 1, 1, 4, 56}, "catalog sizes should be 1,1,1,4,56");
  int verified = 0, skipped = 0;
  for (const SuiteReport& s : r.suites)
    for (const ClaimResult& cl : s.claims) {
      c.expect(!cl.counterexample || cl.status == ClaimStatus::ExpectedFailure, cl.id + " has a counterexample");
      verified += cl.status == ClaimStatus::Verified;
      skipped += cl.status == ClaimStatus::Skipped;
    }
  c.expect(t < 5.0, "runtime " + std::to_string(t) + " s exceeds 5 s");
  c.note(std::to_string(verified) + " claims verified, " + std::to_string(skipped) + " skipped; runtime " +
         std::to_string(t) + " s");
}

// --- 3 ---------------------------------------------------------------------

void order_six(Criterion& c) {
  const auto start = Clock::now();
  SearchSpec spec;
  spec.order = 6;
  const EnumerationResult e = enumerate(spec);
  const std::vector<oracle::Table> brute = oracle::normalized_tables(6);
  c.expect(e.loops.size() == 9408, "search enumeration gave " + std::to_string(e.loops.size()));
  c.expect(brute.size() == 9408, "row-by-row generation gave " + std::to_string(brute.size()));
  bool same = e.loops.size() == brute.size();
  for (std::size_t i = 0; same && i < brute.size(); ++i) same = e.loops[i].rows() == brute[i];
  c.expect(same, "the two generation strategies emit different tables");

  VerifyOptions o;
  o.min_order = 1;
  o.max_order = 6;
  o.fixture_dir = QLOOP_FIXTURE_DIR;
  const VerificationReport r = verify_theorems(o);
  const double t = since(start);
  c.expect(r.passed(), "report failed:\n" + r.render());
  c.expect(!r.catalogs.empty() && r.catalogs.back().loops == 9408, "order 6 catalog should hold 9408 loops");
  for (const char* id : {"S5.lm_nucleus_normal", "S5.lr_nucleus_normal", "S6.two_nuclei_aip_endo",
                         "S6.central_squares_power_associative", "S7.decomposition", "S8.left_c_characterizations",
                         "S8.single_axiom"}) {
    const ClaimResult* cl = find_claim(r, id);
    c.expect(cl && cl->status == ClaimStatus::Verified && cl->applicable > 0,
             std::string(id) + " should be verified on at least one loop");
    if (cl) c.note(std::string(id) + " applicable=" + std::to_string(cl->applicable));
  }
  c.expect(t < 300.0, "runtime " + std::to_string(t) + " s exceeds 5 min");
  c.note("runtime " + std::to_string(t) + " s");
}

// --- 4 ---------------------------------------------------------------------

struct SearchCase {
  int order;
  std::vector<std::string> require, forbid;
  bool one_sided = false;
};

const std::vector<SearchCase>& search_cases() {
  static const std::vector<SearchCase> cases = {
      {5, {"aip"}, {}, true},
      {6, {"lns", "aip"}, {"squaring_endomorphic"}},
      {6, {"mns", "aip"}, {"squaring_endomorphic"}},
      {8, {"mns", "commuting_squares", "squaring_endomorphic"}, {"aip"}},
      {8, {"lns", "squaring_endomorphic", "aip"}, {"commuting_squares"}},
      {8, {"mns", "squaring_endomorphic", "aip"}, {"lns"}},
  };
  return cases;
}

SearchSpec to_spec(const SearchCase& sc) {
  SearchSpec s;
  s.order = sc.order;
  for (const auto& r : sc.require) s.required.push_back(catalog_identity(r));
  for (const auto& f : sc.forbid) s.forbidden.push_back(catalog_identity(f));
  if (sc.one_sided) s.points.push_back(PointConstraint::OneSidedInverse);
  s.limits.nodes = 1'000'000;
  return s;
}

std::string describe(const SearchCase& sc) {
  std::string s = "order " + std::to_string(sc.order) + " {";
  for (const auto& r : sc.require) s += r + " ";
  for (const auto& f : sc.forbid) s += "!" + f + " ";
  if (sc.one_sided) s += "one_sided_inverse ";
  s.back() = '}';
  return s;
}

void searches(Criterion& c) {
  for (const SearchCase& sc : search_cases()) {
    const SearchOutcome out = find_one(to_spec(sc));
    const std::string name = describe(sc);
    c.expect(out.status == SearchStatus::Found, name + ": " + std::string(to_string(out.status)));
    c.expect(out.stats.nodes <= 1'000'000, name + ": node budget exceeded");
    if (!out.loop) continue;
    const PropertyProfile p = profile(*out.loop);
    for (const auto& r : sc.require) c.expect(flag(p, r), name + ": result fails " + r);
    for (const auto& f : sc.forbid) c.expect(!flag(p, f), name + ": result satisfies " + f);
    if (sc.one_sided) c.expect(!p.two_sided_inverses, name + ": result has two-sided inverses");
    c.note(name + ": " + std::to_string(out.stats.nodes) + " nodes");
  }
}

// --- 5 ---------------------------------------------------------------------

void negative_controls(Criterion& c) {
  const LoopTable dot = fixture("iso_pair_dot");
  c.expect(satisfies(dot, "mns") && !satisfies(principal_isostrophe(dot, Side::Right), "rns"),
           "iso_pair_dot should have MNS while its right isostrophe fails RNS");

  const VerificationReport r = verify_catalog(fixture_catalog(QLOOP_FIXTURE_DIR), {Suite::S5, Suite::S7}, "fixtures");
  const ClaimResult* mns = find_claim(r, "S5.control_mns_rns");
  c.expect(mns && mns->status == ClaimStatus::ExpectedFailure && mns->counterexample &&
               mns->counterexample->loop_label == "iso_pair_dot",
           "S5.control_mns_rns should be refuted by iso_pair_dot");

  try {
    decompose(fixture("dihedral8"));
    c.expect(false, "decompose accepted dihedral8");
  } catch (const Error& e) {
    c.expect(e.kind() == ErrorKind::PreconditionViolated, std::string("wrong error kind: ") + e.what());
    c.expect(std::string(e.what()).find("squaring_endomorphic is false") != std::string::npos,
             std::string("wrong reason: ") + e.what());
    c.note(std::string("dihedral8 rejected: ") + e.what());
  }
  const ClaimResult* cs = find_claim(r, "S7.control_central_squares");
  c.expect(cs && cs->status == ClaimStatus::ExpectedFailure, "S7.control_central_squares should be refuted");
}

// --- 6 ---------------------------------------------------------------------

void oracle_equivalence(Criterion& c) {
  for (int n = 1; n <= 4; ++n) {
    SearchSpec spec;
    spec.order = n;
    std::vector<oracle::Table> got;
    for (const LoopTable& q : enumerate(spec).loops) got.push_back(q.rows());
    c.expect(got == oracle::normalized_tables(n), "order " + std::to_string(n) + ": enumerate differs from brute force");
  }
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    SearchSpec spec;
    spec.order = n;
    for (const LoopTable& q : enumerate(spec).loops) {
      const oracle::Table t = q.rows();
      std::vector<std::uint64_t> lib;
      for (const ElementSet& s : q.subloops()) lib.push_back(s.mask());
      const std::vector<std::uint64_t> subs = oracle::subloops(t);
      c.expect(lib == subs, "subloop lists differ on " + oracle::show(t));
      for (std::uint64_t m : subs) {
        const ElementSet s = ElementSet::from_mask(m);
        const bool congruence = q.is_normal(s).normal;
        const bool inner = is_inner_invariant(q, s);
        const bool brute = oracle::normal_by_inner_closure(t, m);
        c.expect(congruence == inner && inner == brute,
                 "normality disagrees on " + oracle::show(t) + " for " + s.to_string());
        ++pairs;
      }
    }
  }
  c.note(std::to_string(pairs) + " (loop, subloop) pairs compared");
}

// --- 7 ---------------------------------------------------------------------

void determinism(Criterion& c) {
  VerifyOptions o;
  o.max_order = 5;
  o.fixture_dir = QLOOP_FIXTURE_DIR;
  const std::string a = verify_theorems(o).render(), b = verify_theorems(o).render();
  c.expect(a == b, "repeated single-worker verification reports differ");
  o.workers = 4;
  c.expect(verify_theorems(o).render() == a, "4-worker verification report differs from single-worker");

  for (const SearchCase& sc : search_cases()) {
    const SearchSpec s = to_spec(sc);
    const SearchOutcome x = find_one(s), y = find_one(s);
    c.expect(x.loop == y.loop && x.stats.nodes == y.stats.nodes, describe(sc) + ": repeated searches differ");
  }

  for (const std::vector<std::string>& req : {std::vector<std::string>{}, {"lns", "mns"}, {"aip"}}) {
    SearchSpec s;
    s.order = 6;
    for (const auto& r : req) s.required.push_back(catalog_identity(r));
    const EnumerationResult serial = enumerate(s), parallel = enumerate_parallel(s, Dedup::None, 4);
    std::set<std::vector<std::uint8_t>> x, y;
    for (const LoopTable& q : serial.loops) x.insert({q.cells().begin(), q.cells().end()});
    for (const LoopTable& q : parallel.loops) y.insert({q.cells().begin(), q.cells().end()});
    c.expect(x == y && x.size() == serial.loops.size(), "parallel enumeration set differs at order 6");
  }
  SearchSpec s5;
  s5.order = 5;
  c.expect(enumerate(s5, Dedup::Iso).loops == enumerate_parallel(s5, Dedup::Iso, 4).loops,
           "parallel iso classes differ at order 5");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1 fixture fidelity", fixture_fidelity},
      {"2 exhaustive orders <= 5, suites S1-S4", small_orders},
      {"3 exhaustive order 6, suites S1-S8", order_six},
      {"4 search reproduction", searches},
      {"5 negative controls", negative_controls},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto start = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << since(start) << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& f : c.failures) std::cout << "      failure: " << f << "\n";
    for (const std::string& n : c.notes) std::cout << "      " << n << "\n";
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
  return failed ? 1 : 0;
}
