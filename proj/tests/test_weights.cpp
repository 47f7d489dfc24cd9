#include <gtest/gtest.h>

#include <random>

#include "oblocks/weights.hpp"
#include "oracles.hpp"

using namespace oblocks;

namespace {

std::vector<std::vector<int>> subsets(int ns) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << ns); ++mask) {
    std::vector<int> I;
    for (int k = 1; k <= ns; ++k)
      if (mask >> (k - 1) & 1) I.push_back(k);
    out.push_back(I);
  }
  return out;
}

}  // namespace

TEST(Weights, Regularity) {
  EXPECT_TRUE(is_phiI_regular(make_parabolic({Family::B, 3}, {1, 3}), Weight::from_ints({1, 0, 2})));
  EXPECT_FALSE(is_phiI_regular(make_parabolic({Family::B, 2}, {1}), Weight::from_ints({1, 1})));
  EXPECT_FALSE(is_phiI_regular(make_parabolic({Family::B, 2}, {2}), Weight::from_ints({1, 0})));
}

TEST(Weights, LambdaIPlus) {
  const ParabolicData b6 = make_parabolic_excluding({Family::B, 6}, {2, 6});
  EXPECT_TRUE(in_Lambda_I_plus(b6, Weight::from_ints({1, 0, 2, 1, 0, -1})));
  EXPECT_FALSE(in_Lambda_I_plus(b6, Weight::from_ints({0, 1, 2, 1, 0, -1})));
  // I = {a1, a2, a4} is nonstandard; every pairing with I is positive
  EXPECT_TRUE(in_Lambda_I_plus(make_parabolic_excluding({Family::D, 4}, {3}), Weight::from_ints({2, 1, 0, 1})));
  EXPECT_FALSE(in_Lambda_I_plus(make_parabolic_excluding({Family::D, 4}, {3}), Weight::from_ints({2, 1, 0, -1})));
}

TEST(Weights, DominantRep) {
  EXPECT_EQ(dominant_rep({Family::A, 3}, Weight::from_ints({2, 3, 1})).bar, Weight::from_ints({3, 2, 1}));
  EXPECT_EQ(dominant_rep({Family::B, 2}, Weight::from_ints({-1, 2})).bar, Weight::from_ints({2, 1}));
  const RootSystem d4{Family::D, 4};
  const Weight l = Weight::from_ints({1, -1, 1, -1});
  EXPECT_EQ(dominant_rep(d4, l).bar, Weight::from_ints({1, 1, 1, 1}));
  EXPECT_EQ(dominant_rep(d4, Weight::from_ints({1, -1, 1, 1})).bar, Weight::from_ints({1, 1, 1, -1}));
  std::vector<Weight> dom;
  for (const Weight& w : oracle::orbit(oracle::simple_roots(d4), l))
    if (is_dominant(d4, w)) dom.push_back(w);
  EXPECT_EQ(dom, std::vector<Weight>{Weight::from_ints({1, 1, 1, 1})});
}

TEST(Weights, DominantRepRandom) {
  std::mt19937 rng(11);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem rs{f, 4};
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> v(4);
      for (int& x : v) x = int(rng() % 7) - 3;
      const Weight l = Weight::from_ints(v);
      const DominantRep d = dominant_rep(rs, l);
      EXPECT_TRUE(is_dominant(rs, d.bar));
      EXPECT_EQ(apply(d.w, l), d.bar);
      EXPECT_NO_THROW(SignedPermutation::make(f, d.w.perm, d.w.signs));
    }
  }
}

TEST(Weights, SingularSet) {
  const SingularData b6 = singular_set({Family::B, 6}, Weight::from_ints({2, 1, 1, 1, 0, 0}));
  EXPECT_EQ(b6.J, (std::vector<int>{2, 3, 5, 6}));
  EXPECT_EQ(b6.mbar, 3);
  EXPECT_EQ(b6.blocks.sizes, (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(b6.a, (std::vector<int>{4, 2, 0}));

  const SingularData gl7 = singular_set({Family::A, 7}, Weight::from_ints({3, 2, 2, 2, 1, 1, 1}));
  EXPECT_EQ(gl7.J, (std::vector<int>{2, 3, 5, 6}));

  const SingularData reg = singular_set({Family::B, 3}, Weight::from_ints({3, 2, 1}));
  EXPECT_TRUE(reg.J.empty());
  EXPECT_EQ(reg.mbar, 4);

  EXPECT_THROW(singular_set({Family::D, 4}, Weight::from_ints({2, 1, 1, 0})), DegenerateSingularity);
}

TEST(Weights, CanonicalDominant) {
  EXPECT_EQ(canonical_dominant({Family::B, 2}, {2}), Weight::from_ints({1, 0}));
  EXPECT_EQ(canonical_dominant({Family::B, 6}, {2, 3, 5, 6}), Weight::from_ints({2, 1, 1, 1, 0, 0}));
  EXPECT_EQ(canonical_dominant({Family::C, 3}, {}), Weight::from_ints({3, 2, 1}));
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 2 : 1); n <= 6; ++n) {
      const RootSystem rs{f, n};
      for (const auto& J : subsets(rs.num_simple())) {
        const Weight w = canonical_dominant(rs, J);
        EXPECT_EQ(singular_set(rs, w).J, J);
      }
    }
}

TEST(Weights, CosetExamples) {
  const auto b2 = enumerate_coset(make_parabolic({Family::B, 2}, {1}), Weight::from_ints({1, 0}));
  EXPECT_EQ(b2, (std::vector<Weight>{Weight::from_ints({0, -1}), Weight::from_ints({1, 0})}));
  const auto b6 = enumerate_coset(make_parabolic_excluding({Family::B, 6}, {2, 6}),
                                  Weight::from_ints({2, 1, 1, 1, 0, 0}));
  EXPECT_EQ(b6, (std::vector<Weight>{Weight::from_ints({0, -1, 1, 0, -1, -2}), Weight::from_ints({0, -1, 2, 1, 0, -1}),
                                     Weight::from_ints({1, 0, 1, 0, -1, -2}), Weight::from_ints({1, 0, 2, 1, 0, -1})}));
  const auto b12 = enumerate_coset(make_parabolic_excluding({Family::B, 12}, {2, 6, 12}),
                                   Weight::from_ints({3, 2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(b12.size(), 8u);
  const ParabolicData d4 = make_parabolic({Family::D, 4}, {1, 3});
  const auto with_j = enumerate_coset(d4, Weight::from_ints({1, 1, 1, 1}));
  EXPECT_NE(std::find(with_j.begin(), with_j.end(), Weight::from_ints({1, -1, 1, -1})), with_j.end());
  EXPECT_TRUE(enumerate_coset(d4, Weight::from_ints({1, 1, 1, -1})).empty());
}

TEST(Weights, CosetMatchesOrbitOracle) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 2 : 1); n <= 4; ++n) {
      const RootSystem rs{f, n};
      std::vector<Weight> samples;
      for (const auto& J : subsets(rs.num_simple())) samples.push_back(canonical_dominant(rs, J));
      if (f == Family::B || f == Family::D) {
        std::vector<int> half(n);
        for (int i = 0; i < n; ++i) half[i] = 2 * (n - i) - 1;
        samples.emplace_back(half);
        half.back() = 1;
        if (n >= 2) half[n - 2] = 1;
        samples.emplace_back(half);
      }
      for (const auto& I : subsets(rs.num_simple())) {
        const ParabolicData pd = make_parabolic(rs, I);
        for (const Weight& lb : samples) {
          const Weight bar = dominant_rep(rs, lb).bar;
          EXPECT_EQ(enumerate_coset(pd, bar), oracle::coset(pd, bar))
              << family_letter(f) << n << " I-size " << I.size() << " " << to_string(bar);
        }
      }
    }
}

TEST(Weights, CountTables) {
  const ParabolicData b6 = make_parabolic_excluding({Family::B, 6}, {2, 6});
  const SingularData sd = singular_set({Family::B, 6}, Weight::from_ints({2, 1, 1, 1, 0, 0}));
  const CountTable t = count_table(b6, sd, Weight::from_ints({1, 0, 2, 1, 0, -1}));
  EXPECT_EQ(t, (CountTable{{0, 1, 1}, {1, 2, 1}, {0, 0, 0}}));
}

TEST(Weights, MaxCount) {
  const ParabolicData b = make_parabolic_excluding({Family::B, 4}, {2});
  EXPECT_EQ(max_count(b, 2, 0), 0);
  EXPECT_EQ(max_count(b, 1, 4), 2);
  const ParabolicData d = make_parabolic_excluding({Family::D, 4}, {1});
  EXPECT_EQ(max_count(d, 2, 10), 1);
}

TEST(Weights, Parity) {
  EXPECT_EQ(parity(Weight::from_ints({1, 0, 2})), 0);
  EXPECT_EQ(parity(Weight::from_ints({0, -1})), 1);
  EXPECT_EQ(parity(Weight::from_ints({0, -1, 1, 0, -1, -2})), 1);
}

TEST(Weights, Phi) {
  const RootSystem d4{Family::D, 4};
  EXPECT_EQ(phi(Weight::from_ints({1, 1, 1, -1})), Weight::from_ints({1, 1, 1, 1}));
  EXPECT_EQ(phi(d4, std::vector<int>{1, 2, 3}), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(phi(d4, phi(d4, std::vector<int>{3})), (std::vector<int>{3}));
  EXPECT_THROW(phi(RootSystem{Family::B, 3}, std::vector<int>{1}), std::invalid_argument);
}

TEST(Weights, Normalize) {
  const ParabolicData b6 = make_parabolic_excluding({Family::B, 6}, {2, 6});
  const auto a = normalize_to_Lambda_I(b6, Weight::from_ints({1, 0, 2, 1, 0, -1}));
  EXPECT_EQ(a.length, 0);
  const auto b = normalize_to_Lambda_I(b6, Weight::from_ints({0, 1, 2, 1, 0, -1}));
  EXPECT_EQ(b.mu, Weight::from_ints({1, 0, 2, 1, 0, -1}));
  EXPECT_TRUE(b.odd());
  EXPECT_THROW(normalize_to_Lambda_I(b6, Weight::from_ints({1, 1, 2, 1, 0, -1})), NotRegular);
}

TEST(Weights, NormalizeMatchesGroupSearch) {
  std::mt19937 rng(3);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem rs{f, 4};
    const auto all = subsets(rs.num_simple());
    for (int trial = 0; trial < 300; ++trial) {
      const ParabolicData pd = make_parabolic(rs, all[rng() % all.size()]);
      std::vector<int> v(4);
      for (int& x : v) x = int(rng() % 9) - 4;
      const Weight l = Weight::from_ints(v);
      if (!is_phiI_regular(pd, l)) continue;
      const auto got = normalize_to_Lambda_I(pd, l);
      const auto want = oracle::normalize(pd, l);
      EXPECT_EQ(got.mu, want.first);
      EXPECT_EQ(got.length, want.second);
    }
  }
}
