#include <gtest/gtest.h>

#include <random>

#include "oblocks/rootsys.hpp"
#include "oracles.hpp"

using namespace oblocks;

TEST(RootSys, PositiveRootCounts) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(positive_roots({Family::A, n}).size(), std::size_t(n * (n - 1) / 2));
    EXPECT_EQ(positive_roots({Family::B, n}).size(), std::size_t(n * n));
    EXPECT_EQ(positive_roots({Family::C, n}).size(), std::size_t(n * n));
    if (n >= 2) EXPECT_EQ(positive_roots({Family::D, n}).size(), std::size_t(n * (n - 1)));
  }
  const auto b2 = positive_roots({Family::B, 2});
  std::vector<std::string> names;
  for (const Root& r : b2) names.push_back(to_string(r));
  EXPECT_EQ(names, (std::vector<std::string>{"e1-e2", "e1+e2", "e1", "e2"}));
}

TEST(RootSys, Pairing) {
  const Weight l = Weight::from_ints({1, 0, 1});
  EXPECT_EQ(coroot_pairing(l, {RootKind::EiPlusEj, 1, 3}), 2);
  EXPECT_EQ(coroot_pairing(l, {RootKind::Ei, 2, 0}), 0);
  EXPECT_EQ(coroot_pairing(Weight::from_ints({1, 1}), {RootKind::TwoEi, 1, 0}), 1);
  EXPECT_THROW(coroot_pairing(Weight::from_ints({1}), {RootKind::EiMinusEj, 1, 2}), DimensionMismatch);
}

TEST(RootSys, Reflect) {
  EXPECT_EQ(reflect(Weight::from_ints({1, 0, 1}), {RootKind::EiPlusEj, 1, 3}), Weight::from_ints({-1, 0, -1}));
  EXPECT_EQ(reflect(Weight::from_ints({4, 7, 2}), {RootKind::EiMinusEj, 1, 2}), Weight::from_ints({7, 4, 2}));
  EXPECT_EQ(reflect(Weight::from_ints({1, 1}), {RootKind::Ei, 1, 0}), Weight::from_ints({-1, 1}));
}

TEST(RootSys, ReflectionMatchesFormula) {
  // s_beta(l) = l - <l,beta^vee> beta, checked on doubled coordinates
  std::mt19937 rng(7);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs{f, 4};
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> v(4);
      for (int& x : v) x = int(rng() % 9) - 4;
      const Weight l = Weight::from_ints(v);
      for (const Root& r : positive_roots(rs)) {
        std::vector<int> expect = l.x2;
        const auto rv = root_vector(4, r);
        const int p = coroot_pairing(l, r);
        for (int i = 0; i < 4; ++i) expect[i] -= 2 * p * rv[i];
        EXPECT_EQ(reflect(l, r).x2, expect);
      }
    }
  }
}

TEST(RootSys, MakeParabolic) {
  const ParabolicData b6 = make_parabolic_excluding({Family::B, 6}, {2, 6});
  EXPECT_EQ(b6.m, 3);
  EXPECT_EQ(b6.sizes, (std::vector<int>{2, 4, 0}));
  EXPECT_FALSE(b6.nonstandard);

  const ParabolicData full = make_parabolic({Family::C, 3}, {1, 2, 3});
  EXPECT_EQ(full.m, 1);

  const ParabolicData d4 = make_parabolic({Family::D, 4}, {1, 2, 4});
  EXPECT_TRUE(d4.nonstandard);
  EXPECT_EQ(d4.m, 2);
  EXPECT_EQ(d4.sizes, (std::vector<int>{4, 0}));
  // Phi_I is a copy of A_3 spanned by e1-e2, e2-e3, e3+e4
  auto sub = oracle::orbit(d4.simple_in_I, Weight::from_ints({4, 3, 2, 1}));
  EXPECT_EQ(sub.size(), 24u);
  EXPECT_EQ(d4.levi_roots.size(), 6u);
}

TEST(RootSys, LeviSupportAgreesWithSpan) {
  // a positive root lies in Phi_I iff it is in the W_I-orbit of a simple root of I
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs{f, 4};
    const int ns = rs.num_simple();
    for (int mask = 0; mask < (1 << ns); ++mask) {
      std::vector<int> I;
      for (int k = 1; k <= ns; ++k)
        if (mask >> (k - 1) & 1) I.push_back(k);
      const ParabolicData pd = make_parabolic(rs, I);
      std::set<std::vector<int>> span;
      for (const Root& a : pd.simple_in_I)
        for (const SignedPermutation& w : oracle::group(4, pd.simple_in_I)) {
          auto v = apply_to_vector(w, root_vector(4, a));
          span.insert(v);
        }
      for (const Root& r : positive_roots(rs))
        EXPECT_EQ(in_levi(pd, r), span.count(root_vector(4, r)) == 1) << to_string(r);
    }
  }
}

TEST(RootSys, SignedPermutationAction) {
  const Weight l = Weight::from_ints({1, 1});
  EXPECT_EQ(apply(SignedPermutation::identity(2), l), l);
  EXPECT_EQ(apply(SignedPermutation::make(Family::B, {0, 1}, {-1, 1}), l), Weight::from_ints({-1, 1}));
  EXPECT_THROW(SignedPermutation::make(Family::D, {0, 1, 2}, {-1, 1, 1}), InvalidSigns);
  EXPECT_THROW(SignedPermutation::make(Family::A, {0, 1}, {-1, -1}), InvalidSigns);
  EXPECT_NO_THROW(SignedPermutation::make(Family::D, {0, 1, 2}, {-1, -1, 1}));
}

TEST(RootSys, Lengths) {
  EXPECT_EQ(length_parity(RootSystem{Family::A, 3}, SignedPermutation::identity(3)).length, 0);
  const auto s = SignedPermutation::reflection(3, {RootKind::EiMinusEj, 1, 2});
  EXPECT_EQ(length_parity(RootSystem{Family::A, 3}, s).length, 1);
  int longest = 0;
  const RootSystem b2{Family::B, 2};
  const auto elems = oracle::group(2, oracle::simple_roots(b2));
  EXPECT_EQ(elems.size(), 8u);
  for (const auto& w : elems) longest = std::max(longest, length_parity(b2, w).length);
  EXPECT_EQ(longest, 4);
}
