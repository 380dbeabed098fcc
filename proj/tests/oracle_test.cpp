#include <gtest/gtest.h>

#include <random>

#include "schrod/oracle.hpp"

using namespace schrod;

TEST(Oracle, ActionOfSingleCrossing) {
  FiniteGroup s3 = symmetric_group(3);
  for (uint32_t g = 0; g < s3.order; ++g)
    for (uint32_t h = 0; h < s3.order; ++h) {
      std::vector<uint32_t> t{g, h};
      EXPECT_EQ(fy_apply(s3, parse_braid("2:"), t), t);
      std::vector<uint32_t> expected{h, s3.mul(s3.mul(s3.inv(h), g), h)};
      EXPECT_EQ(fy_apply(s3, parse_braid("2: 1"), t), expected);
      EXPECT_EQ(fy_apply(s3, parse_braid("2: 1 -1"), t), t);
      EXPECT_EQ(fy_apply(s3, parse_braid("2: -1 1"), t), t);
    }
  EXPECT_THROW(fy_apply(s3, parse_braid("3: 1"), {0, 1}), Error);
}

TEST(Oracle, KnownCounts) {
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(fy_fixed_points(s3, parse_braid("2: 1 1")), 18u);
  EXPECT_EQ(fy_fixed_points(s3, parse_braid("2: 1 1 1")), 12u);
  EXPECT_EQ(fy_fixed_points(cyclic_group(2), parse_braid("2: 1")), 2u);
  for (const char* g : {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"}) {
    FiniteGroup G = parse_group(g);
    EXPECT_EQ(fy_fixed_points(G, parse_braid("2: 1")), G.order) << g;
    EXPECT_EQ(fy_fixed_points(G, torus_braid(2, 2)), commuting_pair_count(G)) << g;
    EXPECT_EQ(commuting_pair_count(G), G.order * conjugacy_class_count(G)) << g;
  }
}

TEST(Oracle, InvariantUnderBraidRelations) {
  std::mt19937 rng(3);
  FiniteGroup s3 = symmetric_group(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> prefix, suffix;
    for (int k = 0; k < 3; ++k) prefix.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 2));
    for (int k = 0; k < 2; ++k) suffix.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 2));
    BraidWord a{3, prefix}, b{3, prefix};
    for (int l : {1, 2, 1}) a.letters.push_back(l);
    for (int l : {2, 1, 2}) b.letters.push_back(l);
    a.letters.insert(a.letters.end(), suffix.begin(), suffix.end());
    b.letters.insert(b.letters.end(), suffix.begin(), suffix.end());
    EXPECT_EQ(fy_fixed_points(s3, a), fy_fixed_points(s3, b));
  }
  EXPECT_EQ(fy_fixed_points(s3, parse_braid("4: 1 3 -2")), fy_fixed_points(s3, parse_braid("4: 3 1 -2")));
}

TEST(Oracle, EnumerationGuard) {
  try {
    fy_fixed_points(symmetric_group(4), parse_braid("6: 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationTooLarge);
  }
}
