#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qloop/error.hpp"
#include "qloop/isostrophe.hpp"
#include "qloop/perm.hpp"
#include "qloop/search.hpp"
#include "qloop/variety.hpp"
#include "support.hpp"

using namespace qloop;
using testing_support::cyclic;
using testing_support::fixture;

namespace {

std::vector<LoopTable> all_up_to(int max_n) {
  std::vector<LoopTable> out;
  for (int n = 1; n <= max_n; ++n) {
    SearchSpec spec;
    spec.order = n;
    for (LoopTable& q : enumerate(spec).loops) out.push_back(std::move(q));
  }
  return out;
}

Perm L(const LoopTable& q, Element a) { return translation(q, a, Side::Left); }
Perm R(const LoopTable& q, Element a) { return translation(q, a, Side::Right); }

}  // namespace

TEST(PermBasics, CompositionActsOnTheLeft) {
  const Perm p({1, 2, 0}), q({0, 2, 1});
  EXPECT_EQ((p * q)(1), p(q(1)));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_THROW(Perm({0, 0, 1}), Error);
}

TEST(Translation, IdentityAndFixtureRow) {
  const LoopTable q = fixture("aip5");
  EXPECT_TRUE(L(q, 0).is_identity());
  EXPECT_TRUE(R(q, 0).is_identity());
  EXPECT_EQ(L(q, 1).images(), (std::vector<Element>{1, 4, 3, 0, 2}));
}

TEST(Translation, InverseMapsReadColumnAndRowOfIdentity) {
  const LoopTable q = fixture("aip5");
  const Perm lambda = left_inverse_map(q), rho = right_inverse_map(q);
  for (int x = 0; x < 5; ++x) {
    EXPECT_EQ(q.mul(lambda(x), x), 0);
    EXPECT_EQ(q.mul(x, rho(x)), 0);
  }
  EXPECT_TRUE((rho * lambda).is_identity());
}

TEST(Autotopism, IdentityTripleAndDegreeMismatch) {
  const LoopTable q = fixture("aip5");
  const Perm id = Perm::identity(5);
  EXPECT_TRUE(is_autotopism(q, id, id, id));
  try {
    is_autotopism(q, id, Perm::identity(4), id);
    ADD_FAILURE() << "expected DegreeMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
}

TEST(Autotopism, NucleiAsAutotopismsExhaustive) {
  for (const LoopTable& q : all_up_to(6)) {
    const Nuclei nu = q.nuclei();
    const Perm id = Perm::identity(q.order());
    for (int a = 0; a < q.order(); ++a) {
      EXPECT_EQ(is_autotopism(q, L(q, a), id, L(q, a)), nu.left.contains(a));
      EXPECT_EQ(is_autotopism(q, id, R(q, a), R(q, a)), nu.right.contains(a));
      EXPECT_EQ(is_autotopism(q, R(q, a).inverse(), L(q, q.right_inv(a)).inverse(), id), nu.middle.contains(a));
    }
  }
}

TEST(Translation, NuclearCompositionRules) {
  for (const LoopTable& q : all_up_to(5)) {
    const Nuclei nu = q.nuclei();
    for (int a = 0; a < q.order(); ++a)
      for (int x = 0; x < q.order(); ++x) {
        if (nu.left.contains(a)) EXPECT_EQ(L(q, a) * L(q, x), L(q, q.mul(a, x)));
        if (nu.middle.contains(a)) {
          EXPECT_EQ(L(q, x) * L(q, a), L(q, q.mul(x, a)));
          EXPECT_EQ(R(q, x) * R(q, a), R(q, q.mul(a, x)));
        }
        if (nu.right.contains(a)) EXPECT_EQ(R(q, a) * R(q, x), R(q, q.mul(x, a)));
      }
  }
}

TEST(AtpTransfer, IdentityTriple) {
  const LoopTable q = fixture("aip5");
  const Perm id = Perm::identity(5);
  const Autotopism t = isostrophe_atp_transfer(q, {id, id, id});
  EXPECT_EQ(t.alpha, id);
  EXPECT_EQ(t.gamma, id);
  EXPECT_EQ(t.beta, right_inverse_map(q) * left_inverse_map(q));
  EXPECT_TRUE(t.beta.is_identity());
}

TEST(AtpTransfer, NuclearAutotopismsOfIsoPair) {
  const LoopTable dot = fixture("iso_pair_dot"), circ = fixture("iso_pair_circ");
  ASSERT_EQ(principal_isostrophe(dot, Side::Right), circ);
  const Nuclei nu = circ.nuclei();
  const Perm id = Perm::identity(6);
  int checked = 0;
  for (int a = 0; a < 6; ++a) {
    std::vector<Autotopism> ts;
    if (nu.left.contains(a)) ts.push_back({L(circ, a), id, L(circ, a)});
    if (nu.right.contains(a)) ts.push_back({id, R(circ, a), R(circ, a)});
    for (const Autotopism& t : ts) {
      ASSERT_TRUE(is_autotopism(circ, t));
      EXPECT_TRUE(is_autotopism(dot, isostrophe_atp_transfer(dot, t)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 2);
}

TEST(AtpTransfer, RandomTriplesAgreeOnBothSides) {
  const LoopTable dot = fixture("iso_pair_dot"), circ = fixture("iso_pair_circ");
  std::mt19937 rng(12345);
  std::vector<Element> base{0, 1, 2, 3, 4, 5};
  auto random_perm = [&] {
    std::vector<Element> p = base;
    std::shuffle(p.begin(), p.end(), rng);
    return Perm(p);
  };
  for (int i = 0; i < 500; ++i) {
    const Autotopism t{random_perm(), random_perm(), random_perm()};
    EXPECT_EQ(is_autotopism(circ, t), is_autotopism(dot, isostrophe_atp_transfer(dot, t)));
  }
}

TEST(InnerGenerators, AbelianGroupIsTrivial) {
  for (const Perm& p : inner_generators(cyclic(6)).perms) EXPECT_TRUE(p.is_identity());
}

TEST(InnerGenerators, AllFixIdentity) {
  const GenSet g = inner_generators(fixture("aip5"));
  EXPECT_EQ(g.kind, GenSetKind::Inn);
  EXPECT_FALSE(g.perms.empty());
  for (const Perm& p : g.perms) EXPECT_TRUE(p.fixes(0));
  EXPECT_EQ(mlt_generators(fixture("aip5")).perms.size(), 10u);
}

TEST(InnerGenerators, InvarianceEqualsNormalityExhaustive) {
  for (const LoopTable& q : all_up_to(5)) {
    const oracle::Table t = q.rows();
    for (const ElementSet& s : q.subloops()) {
      const bool inv = is_inner_invariant(q, s);
      EXPECT_EQ(inv, q.is_normal(s).normal) << oracle::show(t) << " " << s.to_string();
      EXPECT_EQ(inv, oracle::normal_by_inner_closure(t, s.mask())) << oracle::show(t) << " " << s.to_string();
    }
  }
}

TEST(CloseGroup, MultiplicationGroupSizes) {
  EXPECT_EQ(close_group(mlt_generators(cyclic(6)).perms).size(), 6u);
  // Mlt of a group is (G x G)/Z(G).
  EXPECT_EQ(close_group(mlt_generators(testing_support::symmetric3()).perms).size(), 36u);
  EXPECT_THROW(close_group(mlt_generators(testing_support::symmetric3()).perms, 10), Error);
}

TEST(SectionNormal, TrivialAndPrecondition) {
  const LoopTable q = fixture("aip5");
  EXPECT_TRUE(section_normal_in_mlt(q, {0}).normal);
  ASSERT_FALSE(q.nuclei().left == ElementSet::all(5));
  try {
    section_normal_in_mlt(q, ElementSet::all(5));
    ADD_FAILURE() << "expected PreconditionViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(SectionNormal, WitnessInNonNormalSubgroup) {
  const LoopTable q = testing_support::symmetric3();
  const SectionNormality r = section_normal_in_mlt(q, {0, 1});
  EXPECT_FALSE(r.normal);
  EXPECT_TRUE(r.generator.has_value());
  EXPECT_TRUE(r.element.has_value());
}

TEST(SectionNormal, LeftMiddleNucleusWithNuclearSquaresExhaustive) {
  int applicable = 0;
  for (const LoopTable& q : all_up_to(6)) {
    if (!satisfies(q, "lns") || !satisfies(q, "mns")) continue;
    ++applicable;
    const Nuclei nu = q.nuclei();
    EXPECT_TRUE(section_normal_in_mlt(q, nu.left_middle).normal);
    // L_x L_a L_x^-1 = L_{x a x^r} for a in Nlm.
    for (Element a : nu.left_middle)
      for (int x = 0; x < q.order(); ++x)
        EXPECT_EQ(L(q, x) * L(q, a) * L(q, x).inverse(), L(q, q.mul(q.mul(x, a), q.right_inv(x))));
  }
  EXPECT_GT(applicable, 0);
}
