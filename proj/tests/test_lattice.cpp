#include <gtest/gtest.h>

#include <random>

#include "monoidal/fixtures.hpp"
#include "monoidal/lattice.hpp"
#include "monoidal/program.hpp"

using namespace monoidal;

namespace {

Frame stage2_frame() {
  return Frame::from_columns({ExponentVector{1, 0, 0}, ExponentVector{-1, 1, -1}, ExponentVector{0, 0, 1}});
}

// Independent oracle: integer coordinates by Cramer's rule.
IntVec cramer(const Frame& f, const ExponentVector& w) {
  const std::size_t d = f.dimension();
  std::vector<IntVec> rows(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = f.column(j)[i];
  Integer det = determinant(rows);
  IntVec out(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto m = rows;
    for (std::size_t i = 0; i < d; ++i) m[i][j] = w[i];
    out[j] = determinant(m) / det;
  }
  return out;
}

}  // namespace

TEST(Coords, IdentityFrame) {
  EXPECT_EQ(coords(Frame::identity(3), {2, 0, 1}).entries, to_intvec({2, 0, 1}));
}

TEST(Coords, ConstructionStageTwo) {
  Frame f = stage2_frame();
  EXPECT_EQ(coords(f, {0, 1, 0}).entries, to_intvec({1, 1, 1}));
  EXPECT_EQ(coords(f, {1, 0, -1}).entries, to_intvec({1, 0, -1}));
  EXPECT_EQ(coords(f, {0, 1, 0}).entries, cramer(f, {0, 1, 0}));
}

TEST(Coords, DimensionMismatchThrows) {
  EXPECT_THROW(coords(Frame::identity(3), {1, 2}), InputError);
}

TEST(Frame, RejectsNonUnimodular) {
  EXPECT_THROW(Frame::from_columns({ExponentVector{2, 0}, ExponentVector{0, 1}}), InputError);
}

TEST(InCone, Examples) {
  EXPECT_TRUE(in_cone(Frame::identity(3), {0, 0, 0}));
  EXPECT_TRUE(in_cone(stage2_frame(), {0, 1, 0}));
  EXPECT_FALSE(in_cone(stage2_frame(), {1, 0, -1}));
}

TEST(StageGcdLcm, Examples) {
  Frame id = Frame::identity(3);
  ExponentVector a{2, 1, 0}, b{1, 3, 0};
  EXPECT_EQ(stage_gcd(id, a, a), a);
  EXPECT_EQ(stage_lcm(id, a, a), a);
  EXPECT_EQ(stage_gcd(id, a, b), (ExponentVector{1, 1, 0}));
  EXPECT_EQ(stage_lcm(id, a, b), (ExponentVector{2, 3, 0}));
  Frame f = stage2_frame();
  EXPECT_EQ(stage_gcd(f, {1, 0, 0}, {0, 0, 1}), (ExponentVector{0, 0, 0}));
  EXPECT_EQ(stage_lcm(f, {1, 0, 0}, {0, 0, 1}), (ExponentVector{1, 0, 1}));
}

TEST(StageGcdLcm, OutsideConeThrows) {
  EXPECT_THROW(stage_gcd(stage2_frame(), {1, 0, -1}, {1, 0, 0}), InputError);
}

TEST(Program, ValidateConstruction) {
  EXPECT_TRUE(validate(fixtures::construction_3_4()).empty());
}

TEST(Program, ValidateViolations) {
  TransformProgram p = fixtures::construction_3_4();
  p.cycle = {{{0}, 0}};
  auto v = validate(p);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().message, "locus must have size >= 2");
  EXPECT_EQ(v.front().where, "cycle step 1");

  p.cycle = {{{0, 1}, 2}};
  v = validate(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.front().message, "divisor must belong to locus");

  p.cycle.clear();
  v = validate(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.front().message, "cycle must be nonempty");
}

TEST(Program, ApplyStepConstruction) {
  StageView v0 = initial_view(3);
  StageView v1 = apply_step(v0, {{0, 1}, 0});
  EXPECT_EQ(v1.frame.column(1), (ExponentVector{-1, 1, 0}));
  StageView v2 = apply_step(v1, {{1, 2}, 2});
  EXPECT_EQ(v2.frame, stage2_frame());

  IntVec c = to_intvec({0, 1, 0});
  advance_coords(c, {{0, 1}, 0});
  EXPECT_EQ(c, to_intvec({1, 1, 0}));
  EXPECT_EQ(v1.frame.apply(c), (ExponentVector{0, 1, 0}));
}

TEST(Program, ExpandClosedForms) {
  auto p = fixtures::construction_3_4();
  for (long k = 0; k <= 6; ++k) {
    StageView v = expand(p, 2 * k);
    EXPECT_EQ(v.frame.column(0), (ExponentVector{1, 0, 0}));
    EXPECT_EQ(v.frame.column(1), (ExponentVector{-k, 1, -k}));
    EXPECT_EQ(v.frame.column(2), (ExponentVector{0, 0, 1}));
  }
  StageView e = expand(fixtures::example_5_6(), 4);
  EXPECT_EQ(e.frame.column(0), (ExponentVector{1, 0, 0}));
  EXPECT_EQ(e.frame.column(1), (ExponentVector{-2, 1, 0}));
  EXPECT_EQ(e.frame.column(2), (ExponentVector{3, -2, 1}));
  EXPECT_EQ(expand(p, 0).frame, Frame::identity(3));
  ASSERT_TRUE(expand(p, 0).divisor_monomial);
  EXPECT_EQ(*expand(p, 0).divisor_monomial, (ExponentVector{1, 0, 0}));
}

TEST(Program, ClassifyMi) {
  EXPECT_EQ(classify_M_i(fixtures::construction_3_4()), 2u);
  EXPECT_EQ(classify_M_i(fixtures::pure_quadratic()), 3u);
  EXPECT_EQ(classify_M_i(fixtures::example_5_6()), 2u);
}

TEST(Program, Ord) {
  auto p = fixtures::construction_3_4();
  EXPECT_EQ(ord_n(p, 0, {0, 1, 0}), 1);
  EXPECT_EQ(ord_n(p, 2, {0, 1, 0}), 3);
  for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(ord_n(p, n, {1, 0, -1}), 0);
}

TEST(Program, InvertedHull) {
  auto p = fixtures::construction_3_4();
  EXPECT_TRUE(in_inverted_hull(p, {-5, 1, -7}));
  EXPECT_FALSE(in_inverted_hull(p, {0, -1, 0}));
  EXPECT_TRUE(in_inverted_hull(p, {0, 0, 0}));
}

// Random programs for the frame invariants.
class FrameProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20241018};

  TransformStep random_step(std::size_t d) {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::size_t size = 2 + rng() % (d - 1);
    idx.resize(size);
    return {idx, idx[rng() % size]};
  }
};

TEST_F(FrameProperty, DeterminantAndRoundTrip) {
  constexpr std::size_t kSteps = 10000;
  std::size_t done = 0;
  while (done < kSteps) {
    std::size_t d = 2 + rng() % 4;
    StageView v = initial_view(d);
    ExponentVector w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = static_cast<long>(rng() % 13) - 6;
    IntVec c = w.entries();
    for (std::size_t s = 0; s < 25 && done < kSteps; ++s, ++done) {
      TransformStep st = random_step(d);
      StageView next = apply_step(v, st);
      Integer det = next.frame.determinant();
      ASSERT_TRUE(det == 1 || det == -1);
      advance_coords(c, st);
      ASSERT_EQ(next.frame.apply(c), w);
      ASSERT_EQ(coords(next.frame, w).entries, c);
      // m_n inside m_{n+1}: old parameters have nonnegative nonzero coordinates.
      for (const auto& col : v.frame.columns()) {
        auto cc = coords(next.frame, col);
        ASSERT_TRUE(cc.all_nonnegative());
        ASSERT_FALSE(cc.is_zero());
      }
      // Locus monomials become the divisor times a stage-(n+1) monomial.
      for (std::size_t j : st.locus) {
        auto cc = coords(next.frame, v.frame.column(j) - v.frame.column(st.divisor)).entries;
        ASSERT_TRUE(all_nonnegative(cc));
      }
      v = std::move(next);
    }
  }
}

TEST_F(FrameProperty, GcdTimesLcm) {
  for (int it = 0; it < 500; ++it) {
    std::size_t d = 2 + rng() % 4;
    StageView v = initial_view(d);
    for (int s = 0; s < 6; ++s) v = apply_step(v, random_step(d));
    IntVec ca(d), cb(d);
    for (std::size_t i = 0; i < d; ++i) {
      ca[i] = static_cast<long>(rng() % 5);
      cb[i] = static_cast<long>(rng() % 5);
    }
    ExponentVector a = v.frame.apply(ca), b = v.frame.apply(cb);
    EXPECT_EQ(stage_gcd(v.frame, a, b) + stage_lcm(v.frame, a, b), a + b);
  }
}

TEST_F(FrameProperty, OrdAdditive) {
  auto p = fixtures::example_5_6();
  for (int it = 0; it < 200; ++it) {
    ExponentVector a{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
    ExponentVector b{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
    std::size_t n = rng() % 12;
    EXPECT_EQ(ord_n(p, n, a + b), ord_n(p, n, a) + ord_n(p, n, b));
  }
}
