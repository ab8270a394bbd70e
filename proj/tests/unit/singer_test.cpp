#include <gtest/gtest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "twl/characters.hpp"
#include "twl/errors.hpp"
#include "twl/singer.hpp"

namespace twl {
namespace {

std::set<u64> as_set(const std::vector<u64>& v) { return {v.begin(), v.end()}; }

TEST(GroupRing, ConvolutionAndDilation) {
  const auto a = GroupRingElement::from_set(5, {0, 1});
  const auto b = GroupRingElement::from_set(5, {1, 4});
  EXPECT_EQ((a * b).coeffs(), (std::vector<i64>{1, 1, 1, 0, 1}));
  EXPECT_EQ(a.dilate(-1).coeffs(), (std::vector<i64>{1, 0, 0, 0, 1}));
  EXPECT_EQ(a.translate(2).coeffs(), (std::vector<i64>{0, 0, 1, 1, 0}));
  EXPECT_EQ(GroupRingElement::whole_group(5).coefficient_sum(), 5);
  EXPECT_EQ(a * GroupRingElement::identity(5), a);
}

struct SingerCase {
  unsigned p, m0, k;
  std::size_t size;
  std::vector<u64> multipliers;
};

class SingerTowers : public ::testing::TestWithParam<SingerCase> {};

TEST_P(SingerTowers, SizeIdentityAndMultipliers) {
  const auto& c = GetParam();
  const FieldTower t = FieldTower::build(c.p, c.m0, c.k);
  const SingerSet d = singer_set(t);
  EXPECT_EQ(d.delta, t.delta());
  EXPECT_EQ(d.elements.size(), c.size);
  EXPECT_EQ(d.elements.size(), ipow(t.q(), t.k() - 1));
  EXPECT_TRUE(verify_dd_identity(t));

  const auto found = multipliers(t);
  EXPECT_EQ(found, c.multipliers);
  EXPECT_EQ(as_set(found), oracle::set_multipliers(as_set(d.elements), d.delta));
  EXPECT_EQ(multipliers(t, 4), found);
}

INSTANTIATE_TEST_SUITE_P(Towers, SingerTowers,
                         ::testing::Values(SingerCase{3, 1, 2, 3, {1, 3}}, SingerCase{2, 2, 2, 4, {1, 2, 3, 4}},
                                           SingerCase{2, 1, 4, 8, {1, 2, 4, 8}}, SingerCase{3, 1, 3, 9, {1, 3, 9}},
                                           SingerCase{2, 1, 3, 4, {1, 2, 4}}));

TEST(Singer, DifferenceCountsFromOracle) {
  // Every nonzero difference occurs q^(k-2) (q-1) times, zero occurs |D| times.
  const FieldTower t = FieldTower::build(3, 1, 3);
  const SingerSet d = singer_set(t);
  std::vector<u64> counts(d.delta, 0);
  for (u64 x : d.elements)
    for (u64 y : d.elements) ++counts[(x + d.delta - y) % d.delta];
  EXPECT_EQ(counts[0], 9u);
  for (u64 g = 1; g < d.delta; ++g) EXPECT_EQ(counts[g], 6u);
}

TEST(Singer, ExplicitSmallIdentity) {
  const FieldTower t = FieldTower::build(3, 1, 2);
  const GroupRingElement D = singer_set(t).as_element();
  const GroupRingElement expected = GroupRingElement::identity(4) + GroupRingElement::whole_group(4) * 2;
  EXPECT_EQ(D * D.dilate(-1), expected);
}

TEST(Singer, CharacterValues) {
  for (auto [p, m0, k] : {std::tuple{3u, 1u, 2u}, {2u, 2u, 2u}, {2u, 1u, 4u}, {3u, 1u, 3u}, {5u, 1u, 2u}}) {
    const FieldTower t = FieldTower::build(p, m0, k);
    const GroupRingElement D = singer_set(t).as_element();
    const GaussSumTable gauss(t);
    const u64 delta = t.delta();
    EXPECT_NEAR(std::abs(character_value(GroupRingElement::whole_group(delta), 1)), 0.0, 1e-9);
    EXPECT_NEAR(character_value(D, 0).real(), static_cast<double>(ipow(t.q(), t.k() - 1)), 1e-9);
    for (i64 j = 1; j < static_cast<i64>(delta); ++j) {
      const Complex expected = -gauss(static_cast<i64>(t.q() - 1) * j) / static_cast<double>(t.q());
      ASSERT_NEAR(std::abs(character_value(D, j) - expected), 0.0, 1e-6) << "q=" << t.q() << " j=" << j;
    }
  }
}

TEST(Singer, EveryUnitIsAMultiplierWhenKIsTwo) {
  for (auto [p, m0] : {std::pair{7u, 1u}, {11u, 1u}, {2u, 4u}}) {
    const FieldTower t = FieldTower::build(p, m0, 2);
    const SingerSet d = singer_set(t);
    EXPECT_EQ(d.elements.size() + 1, d.delta);
    std::vector<u64> units;
    for (u64 x = 1; x < d.delta; ++x)
      if (std::gcd(x, d.delta) == 1) units.push_back(x);
    EXPECT_EQ(multipliers(t), units);
    EXPECT_NE(multipliers(t), powers_of_p(t, d.delta));
  }
}

TEST(Singer, PowersOfP) {
  EXPECT_EQ(powers_of_p(FieldTower::build(3, 1, 3), 13), (std::vector<u64>{1, 3, 9}));
  EXPECT_EQ(powers_of_p(FieldTower::build(2, 2, 2), 5), (std::vector<u64>{1, 2, 3, 4}));
  EXPECT_EQ(powers_of_p(FieldTower::build(7, 1, 2), 8), (std::vector<u64>{1, 7}));
}

TEST(Singer, FObject) {
  const FieldTower t4 = FieldTower::build(2, 2, 2);
  const FObject one = lemma4_F_object(t4, 1);
  EXPECT_EQ(one.F, GroupRingElement::identity(5));
  EXPECT_EQ(one.translate, std::optional<u64>{0});

  const FieldTower t = FieldTower::build(3, 1, 3);
  const FObject mult = lemma4_F_object(t, 3);
  ASSERT_TRUE(mult.translate.has_value());
  EXPECT_EQ(mult.F, GroupRingElement::identity(13).translate(static_cast<i64>(*mult.translate)) * 3);

  const FObject non = lemma4_F_object(t, 2);
  EXPECT_FALSE(non.translate.has_value());
  EXPECT_EQ(non.F.coefficient_sum(), 9 * 9 - 13 * 3 * 2);

  try {
    (void)lemma4_F_object(t, 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
}

TEST(Singer, DegenerateTower) {
  const FieldTower t = FieldTower::build(2, 3, 1);
  try {
    (void)singer_set(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateTower);
  }
}

}  // namespace
}  // namespace twl
