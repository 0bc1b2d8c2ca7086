#include <gtest/gtest.h>

#include "monoidal/classify.hpp"
#include "monoidal/fixtures.hpp"

using namespace monoidal;

namespace {

const ExponentVector x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};

}  // namespace

TEST(LocalizedMember, ConstructionChains) {
  CycleDynamics dyn(fixtures::construction_3_4());
  ChainReport r = detect_chains(dyn);
  Ideal xs = Ideal::of_chain(r.chains[0]);
  // z is a unit of S_{xS}.
  Verdict v = localized_member(dyn, xs, {0, 0, -1});
  ASSERT_TRUE(v.is_yes());
  ASSERT_TRUE(v.witness->monomial);
  EXPECT_TRUE(chainprime_member(dyn, r.chains[0], *v.witness->monomial).is_no());
  EXPECT_TRUE(member_S(dyn, ExponentVector{0, 0, -1} + *v.witness->monomial).is_yes());
  EXPECT_TRUE(localized_member(dyn, xs, {-1, 0, 0}).is_no());
}

TEST(ValuationCheck, Examples) {
  CycleDynamics c34(fixtures::construction_3_4());
  ChainReport r = detect_chains(c34);
  EXPECT_TRUE(valuation_check_at(c34, Ideal::of_chain(r.chains[0]), 4, 8).verdict.is_yes());
  EXPECT_TRUE(valuation_check_at(c34, Ideal::of_chain(r.chains[1]), 4, 8).verdict.is_yes());

  CycleDynamics pq(fixtures::pure_quadratic());
  ValuationCheck q = valuation_check_at(pq, Ideal::maximal(), 1, 8);
  ASSERT_TRUE(q.verdict.is_no());
  EXPECT_TRUE(member_S(pq, y - z).is_no());
  EXPECT_TRUE(member_S(pq, z - y).is_no());

  CycleDynamics e56(fixtures::example_5_6());
  EXPECT_TRUE(valuation_check_at(e56, Ideal::maximal(), 4, 8).verdict.is_yes());
}

TEST(NoetherianProbe, Examples) {
  CycleDynamics c34(fixtures::construction_3_4());
  NoetherianProbe n = noetherian_probe(c34, 0);
  ASSERT_TRUE(n.verdict.is_yes());
  EXPECT_EQ(n.generator_count, 2u);
  EXPECT_EQ(n.generators, (std::vector<ExponentVector>{x, z}));
  EXPECT_TRUE(n.bound_holds);

  CycleDynamics e56(fixtures::example_5_6());
  NoetherianProbe e = noetherian_probe(e56, 0);
  ASSERT_TRUE(e.verdict.is_yes());
  EXPECT_EQ(e.generators, std::vector<ExponentVector>{x});

  // y/x^k = x * y/x^(k+1): the maximal ideal of the pure quadratic union is xS.
  CycleDynamics pq(fixtures::pure_quadratic());
  NoetherianProbe p = noetherian_probe(pq, 0);
  ASSERT_TRUE(p.verdict.is_yes());
  EXPECT_EQ(p.generators, std::vector<ExponentVector>{x});
}

TEST(BoundaryOrd, Examples) {
  CycleDynamics c34(fixtures::construction_3_4());
  EXPECT_TRUE(boundary_ord_check(c34, {1, 0, -1}).is_yes());
  EXPECT_TRUE(member_S(c34, {1, 0, -1}).is_no());
  EXPECT_TRUE(boundary_ord_check(c34, y).is_yes());
  Verdict v = boundary_ord_check(c34, {0, -1, 1});
  ASSERT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate->kind, CertificateKind::AffineDrift);
}

TEST(BoundaryOrd, MembersHaveNonnegativeOrder) {
  for (const auto& name : fixtures::names()) {
    CycleDynamics dyn(fixtures::by_name(name));
    const std::size_t d = dyn.dimension();
    ExponentVector w(d);
    for (long a = -2; a <= 2; ++a) {
      for (long b = -2; b <= 2; ++b) {
        w[0] = a;
        w[1] = b;
        w[d - 1] = a - b;
        if (member_S(dyn, w).is_yes()) EXPECT_TRUE(boundary_ord_check(dyn, w).is_yes()) << name << w.to_string();
      }
    }
  }
}

TEST(GcdClassify, Fixtures) {
  ClassificationReport c = gcd_classify(CycleDynamics(fixtures::construction_3_4()));
  EXPECT_TRUE(c.gcd.is_yes());
  EXPECT_EQ(c.gcd_path, GcdPath::Theorem);
  EXPECT_TRUE(c.cross_validated);

  ClassificationReport p = gcd_classify(CycleDynamics(fixtures::pure_quadratic()));
  ASSERT_TRUE(p.gcd.is_no());
  EXPECT_EQ(p.gcd_path, GcdPath::Counterexample);
  ASSERT_TRUE(p.counterexample);
  EXPECT_EQ(p.counterexample->a, y);
  EXPECT_EQ(p.counterexample->b, z);
  EXPECT_TRUE(p.sbid.is_yes());

  ClassificationReport e = gcd_classify(CycleDynamics(fixtures::example_5_6()));
  EXPECT_TRUE(e.gcd.is_yes());
}

TEST(GcdClassify, SbidEquivalence) {
  // For an SBID, GCD holds exactly when S itself is a valuation domain.
  for (const auto& name : fixtures::names()) {
    CycleDynamics dyn(fixtures::by_name(name));
    ClassificationReport r = gcd_classify(dyn);
    if (!r.sbid.is_yes()) continue;
    ValuationCheck m = valuation_check_at(dyn, Ideal::maximal(), 4, 8);
    EXPECT_EQ(r.gcd.is_yes(), m.verdict.is_yes()) << name;
  }
}

TEST(GcdClassify, DeterministicAcrossThreadCounts) {
  CycleDynamics dyn(fixtures::pure_quadratic());
  ClassifyOptions one;
  one.threads = 1;
  ClassifyOptions many;
  many.threads = 8;
  ClassificationReport a = gcd_classify(dyn, one), b = gcd_classify(dyn, many);
  EXPECT_EQ(a.sampled_diverging, b.sampled_diverging);
  EXPECT_EQ(a.counterexample->a, b.counterexample->a);
  EXPECT_EQ(a.counterexample->b, b.counterexample->b);
}
