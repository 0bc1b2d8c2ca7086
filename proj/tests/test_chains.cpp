#include <gtest/gtest.h>

#include "monoidal/chains.hpp"
#include "monoidal/fixtures.hpp"

using namespace monoidal;

namespace {

const ExponentVector x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};

}  // namespace

TEST(DetectChains, Construction) {
  CycleDynamics dyn(fixtures::construction_3_4());
  ChainReport r = detect_chains(dyn, 3);
  ASSERT_EQ(r.chains.size(), 2u);
  EXPECT_TRUE(r.unabsorbed.empty());
  EXPECT_EQ(r.chains[0].positions, std::vector<std::size_t>{0});
  EXPECT_EQ(r.chains[1].positions, std::vector<std::size_t>{1});
  for (const auto& d : r.chains[0].divisor_monomials) EXPECT_EQ(d, x);
  for (const auto& d : r.chains[1].divisor_monomials) EXPECT_EQ(d, z);
}

TEST(DetectChains, PureQuadraticAndExample) {
  EXPECT_EQ(detect_chains(CycleDynamics(fixtures::pure_quadratic())).chains.size(), 1u);
  ChainReport r = detect_chains(CycleDynamics(fixtures::example_5_6()));
  ASSERT_EQ(r.chains.size(), 2u);
  // Odd chain divisors y/x^(k+1).
  for (std::size_t i = 0; i < r.chains[1].stages.size(); ++i) {
    long k = static_cast<long>(r.chains[1].stages[i] / 2);
    EXPECT_EQ(r.chains[1].divisor_monomials[i], (ExponentVector{-(k + 1), 1, 0}));
  }
}

TEST(DetectChains, ContainmentsReverifyLater) {
  for (const auto& name : fixtures::names()) {
    CycleDynamics dyn(fixtures::by_name(name));
    ChainReport r = detect_chains(dyn, 2);
    auto frames = expand_frames(dyn.program(), 40);
    for (const auto& c : r.chains) {
      for (std::size_t i = 0; i + 1 < c.stages.size(); ++i) {
        // Containment persists when tested at a much later stage.
        EXPECT_TRUE(ideal_contained(frames[30], c.loci[i], c.loci[i + 1])) << name;
      }
      for (const auto& xd : c.divisor_monomials) EXPECT_TRUE(chainprime_member(dyn, c, xd).is_yes()) << name;
    }
  }
}

TEST(ChainprimeMember, Construction) {
  CycleDynamics dyn(fixtures::construction_3_4());
  ChainReport r = detect_chains(dyn);
  const ChainPrime& even = r.chains[0];
  Verdict vy = chainprime_member(dyn, even, y);
  ASSERT_TRUE(vy.is_yes());
  EXPECT_TRUE(all_nonnegative(vy.witness->coords));
  Verdict vz = chainprime_member(dyn, even, z);
  ASSERT_TRUE(vz.is_no());
  EXPECT_TRUE(chainprime_member(dyn, even, x).is_yes());
  // Disjoint witness sets across the two chains.
  EXPECT_TRUE(chainprime_member(dyn, r.chains[1], z).is_yes());
  EXPECT_TRUE(chainprime_member(dyn, r.chains[1], x).is_no());
}

TEST(ChainprimeMember, ExampleDisjointOnX) {
  CycleDynamics dyn(fixtures::example_5_6());
  ChainReport r = detect_chains(dyn);
  EXPECT_TRUE(chainprime_member(dyn, r.chains[0], x).is_yes());
  EXPECT_TRUE(chainprime_member(dyn, r.chains[1], x).is_no());
  EXPECT_TRUE(chainprime_member(dyn, r.chains[1], y).is_yes());
}

TEST(ChainprimeMaximal, Fixtures) {
  CycleDynamics pq(fixtures::pure_quadratic());
  EXPECT_TRUE(chainprime_maximal(pq, detect_chains(pq).chains[0]).is_yes());
  CycleDynamics c34(fixtures::construction_3_4());
  Verdict v = chainprime_maximal(c34, detect_chains(c34).chains[0]);
  ASSERT_TRUE(v.is_no());
  EXPECT_EQ(v.certificate->coordinate, 2u);
  CycleDynamics e56(fixtures::example_5_6());
  EXPECT_TRUE(chainprime_maximal(e56, detect_chains(e56).chains[0]).is_yes());
}

TEST(FinitelyManyChains, Counts) {
  EXPECT_EQ(finitely_many_chains(CycleDynamics(fixtures::construction_3_4())).count, 2u);
  EXPECT_EQ(finitely_many_chains(CycleDynamics(fixtures::example_5_6())).count, 2u);
  EXPECT_EQ(finitely_many_chains(CycleDynamics(fixtures::pure_quadratic())).count, 1u);
  auto d4 = finitely_many_chains(CycleDynamics(fixtures::quadratic_extended_d4()));
  EXPECT_TRUE(d4.verdict.is_yes());
  EXPECT_EQ(d4.count, 3u);
}

TEST(PowerIntersection, Membership) {
  CycleDynamics c34(fixtures::construction_3_4());
  Ideal P = Ideal::power_intersection(x);
  EXPECT_TRUE(ideal_member(c34, P, y).is_yes());
  EXPECT_TRUE(ideal_member(c34, P, x).is_no());
  EXPECT_TRUE(ideal_member(c34, P, z).is_no());

  CycleDynamics e56(fixtures::example_5_6());
  EXPECT_TRUE(ideal_member(e56, Ideal::power_intersection(y), z).is_yes());
  EXPECT_TRUE(ideal_member(e56, Ideal::power_intersection(x), y).is_yes());
  EXPECT_TRUE(ideal_member(e56, Ideal::power_intersection(y), y).is_no());
}

TEST(VerifyPrimeChain, Construction) {
  CycleDynamics dyn(fixtures::construction_3_4());
  auto r = verify_prime_chain(dyn, {{Ideal::power_intersection(x), y}, {Ideal::principal(x), x}});
  EXPECT_TRUE(r.verdict.is_yes());
  EXPECT_EQ(r.height_bound, 2u);
  // Reversed order is not a chain.
  auto bad = verify_prime_chain(dyn, {{Ideal::principal(x), x}, {Ideal::power_intersection(x), y}});
  EXPECT_FALSE(bad.verdict.is_yes());
  auto single = verify_prime_chain(dyn, {{Ideal::principal(x), x}});
  EXPECT_TRUE(single.verdict.is_yes());
  EXPECT_EQ(single.height_bound, 1u);
  EXPECT_THROW(verify_prime_chain(dyn, {}), InputError);
}

TEST(VerifyPrimeChain, Example) {
  CycleDynamics dyn(fixtures::example_5_6());
  auto r = verify_prime_chain(dyn, {{Ideal::power_intersection(y), z},
                                    {Ideal::power_intersection(x), y},
                                    {Ideal::maximal(), x}});
  EXPECT_TRUE(r.verdict.is_yes());
  EXPECT_EQ(r.height_bound, 3u);
}

TEST(QuadraticTest, Fixtures) {
  CycleDynamics e56(fixtures::example_5_6());
  ChainReport r = detect_chains(e56);
  QuadraticCheck q = quadratic_test(e56, Ideal::of_chain(r.chains[1]));
  EXPECT_TRUE(q.verdict.is_no());
  EXPECT_EQ(q.position_inside[1], Status::Yes);
  EXPECT_EQ(q.position_inside[0], Status::No);
  EXPECT_TRUE(quadratic_test(e56, Ideal::power_intersection(x)).verdict.is_no());

  CycleDynamics pq(fixtures::pure_quadratic());
  EXPECT_TRUE(quadratic_test(pq, Ideal::zero()).verdict.is_yes());

  CycleDynamics c34(fixtures::construction_3_4());
  QuadraticCheck c = quadratic_test(c34, Ideal::of_chain(detect_chains(c34).chains[0]));
  EXPECT_EQ(c.position_inside[1], Status::No);
  EXPECT_EQ(c.position_inside[0], Status::Yes);
}

TEST(SbidCheck, Fixtures) {
  EXPECT_TRUE(sbid_check(CycleDynamics(fixtures::pure_quadratic())).is_yes());
  EXPECT_TRUE(sbid_check(CycleDynamics(fixtures::construction_3_4())).is_no());
  EXPECT_TRUE(sbid_check(CycleDynamics(fixtures::example_5_6())).is_yes());
}

TEST(ChainProperty, NonmaximalChainsInCodimensionOne) {
  // Loci of height d - 1: parameters outside a nonmaximal chain's locus lie outside Q.
  for (const auto& name : {"construction-3-4", "example-5-6"}) {
    CycleDynamics dyn(fixtures::by_name(name));
    for (const auto& c : detect_chains(dyn).chains) {
      if (!chainprime_maximal(dyn, c).is_no()) continue;
      for (std::size_t n : c.stages) {
        Frame f = expand(dyn.program(), n).frame;
        const auto& locus = dyn.program().step(n).locus;
        for (std::size_t j = 0; j < dyn.dimension(); ++j) {
          if (std::find(locus.begin(), locus.end(), j) != locus.end()) continue;
          EXPECT_TRUE(chainprime_member(dyn, c, f.column(j)).is_no()) << name;
        }
      }
    }
  }
}
