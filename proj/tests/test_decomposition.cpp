#include <gtest/gtest.h>

#include <climits>

#include "oblocks/decomposition.hpp"
#include "oracles.hpp"

using namespace oblocks;

namespace {

SeparablePair pair(std::vector<int> S, std::vector<int> Sbar) {
  SeparablePair p;
  p.S = std::move(S);
  p.Sbar = std::move(Sbar);
  return p;
}

Weight W(std::vector<int> v) { return Weight::from_ints(v); }

int index_in(const FactorSystem& fs, const Weight& w) {
  for (std::size_t k = 0; k < fs.coset.size(); ++k)
    if (fs.coset[k] == w) return static_cast<int>(k);
  return -1;
}

const ChildSystem& child_of(const FactorSystem& fs, int k, int i) {
  return fs.components[fs.component_of[k]].children[i];
}

bool is_identity(const SignedPermutation& w) {
  const SignedPermutation id = SignedPermutation::identity(w.size());
  return w.perm == id.perm && w.signs == id.signs;
}

}  // namespace

TEST(Decomposition, Restrict) {
  const Weight l = W({1, 0, 2, 1, 0, -1});
  EXPECT_EQ(restrict(l, {3, 4, 5, 6}), W({2, 1, 0, -1}));
  EXPECT_EQ(restrict(l, {}).size(), 0);
  EXPECT_EQ(restrict(l, {1, 2, 3, 4, 5, 6}), l);
  EXPECT_THROW(restrict(l, {7}), std::out_of_range);
}

TEST(Decomposition, NormalizeForSplit) {
  const ParabolicData pd = make_parabolic_excluding({Family::B, 6}, {2, 6});
  const Weight bar = W({2, 1, 1, 1, 0, 0});
  const SingularData sd = singular_set(pd.rs, bar);
  const SeparablePair pr = pair({2}, {2, 3});
  const Weight l1 = W({1, 0, 2, 1, 0, -1});
  const SplitNormal sn = normalize_for_split(pd, sd, pr, l1);
  EXPECT_EQ(sn.nu, W({1, 0, 1, -1, 2, 0}));
  EXPECT_EQ(apply(sn.w, l1), sn.nu);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(sn.w.signs[i], 1);
    if (i < 2) EXPECT_EQ(sn.w.perm[i], i);
  }
  const SplitNormal again = normalize_for_split(pd, sd, pr, sn.nu);
  EXPECT_EQ(again.nu, sn.nu);
  EXPECT_TRUE(is_identity(again.w));
  for (const Weight& mu : enumerate_coset(pd, bar)) {
    const SplitNormal a = normalize_for_split(pd, sd, pr, mu);
    EXPECT_EQ(apply(a.w, mu), a.nu);
    EXPECT_TRUE(is_identity(normalize_for_split(pd, sd, pr, a.nu).w));
  }
}

TEST(Decomposition, GlSevenSplit) {
  const ParabolicData pd = make_parabolic_excluding({Family::A, 7}, {3, 5, 6});
  const FactorSystem fs = split(pd, W({3, 2, 2, 2, 1, 1, 1}), pair({1, 2}, {2, 3}));
  ASSERT_EQ(fs.coset.size(), 2u);
  ASSERT_EQ(fs.components.size(), 1u);
  const Component& c = fs.components[0];
  EXPECT_EQ(c.children[0].rs.rank, 1);
  EXPECT_EQ(c.children[1].rs.rank, 2);
  EXPECT_TRUE(c.children[0].I.empty());
  EXPECT_TRUE(c.children[1].I.empty());
  EXPECT_TRUE(c.children[0].J.empty());
  EXPECT_TRUE(c.children[1].J.empty());
  const int mu = index_in(fs, W({3, 2, 1, 2, 1, 2, 1})), nu = index_in(fs, W({3, 2, 1, 2, 1, 1, 2}));
  ASSERT_GE(mu, 0);
  ASSERT_GE(nu, 0);
  EXPECT_EQ(fs.images[mu][0], W({3}));
  EXPECT_EQ(fs.images[nu][0], W({3}));
  EXPECT_EQ(fs.images[mu][1], W({2, 1}));
  EXPECT_EQ(fs.images[nu][1], W({1, 2}));
  EXPECT_TRUE(verify_split(fs).ok);
}

TEST(Decomposition, So13Split) {
  const ParabolicData pd = make_parabolic_excluding({Family::B, 6}, {4, 6});
  const Weight bar = W({2, 1, 1, 1, 0, 0});
  const FactorNode root = factorize(pd, bar);
  ASSERT_TRUE(root.pair.has_value());
  const FactorSystem& fs = *root.split;
  ASSERT_EQ(fs.components.size(), 1u);
  for (int i = 0; i < 2; ++i) {
    const ChildSystem& ch = fs.components[0].children[i];
    EXPECT_EQ(ch.rs.family, Family::B);
    EXPECT_EQ(ch.rs.rank, 2);
    EXPECT_EQ(ch.I, std::vector<int>{1});
    EXPECT_EQ(ch.J, std::vector<int>{2});
  }
  const int mu = index_in(fs, W({2, 1, 0, -1, 1, 0})), nu = index_in(fs, W({1, 0, -1, -2, 0, -1}));
  ASSERT_GE(mu, 0);
  ASSERT_GE(nu, 0);
  EXPECT_EQ(fs.images[mu][0], W({2, 0}));
  EXPECT_EQ(fs.images[mu][1], W({1, 0}));
  EXPECT_EQ(fs.images[nu][0], W({0, -2}));
  EXPECT_EQ(fs.images[nu][1], W({0, -1}));
  EXPECT_EQ(root.leaf_count, 4);
  EXPECT_TRUE(verify_factorization(root, 4).ok);
}

TEST(Decomposition, So18OddSplit) {
  const ParabolicData pd = make_parabolic_excluding({Family::D, 9}, {4, 6});
  const Weight bar = W({2, 2, 1, 1, 1, 1, 0, 0, 0});
  const FactorNode root = factorize(pd, bar);
  ASSERT_TRUE(root.pair.has_value());
  const FactorSystem& fs = *root.split;
  EXPECT_TRUE(fs.odd);
  const int mu = index_in(fs, W({2, 1, 0, -1, 1, 0, 2, 1, 0})), nu = index_in(fs, W({1, 0, -1, -2, 0, -1, 2, 1, 0}));
  ASSERT_GE(mu, 0);
  ASSERT_GE(nu, 0);
  for (int k : {mu, nu})
    for (int i = 0; i < 2; ++i) {
      const ChildSystem& ch = child_of(fs, k, i);
      EXPECT_EQ(ch.rs.family, Family::D);
      EXPECT_EQ(ch.rs.rank, 4);
      EXPECT_EQ(ch.I, (std::vector<int>{1, 3, 4}));
      EXPECT_EQ(ch.J, (std::vector<int>{1, 3, 4}));
    }
  EXPECT_EQ(restrict(fs.nu[mu], fs.H[0]), W({2, 0, 2, 0}));
  EXPECT_EQ(restrict(fs.nu[nu], fs.H[0]), W({0, -2, 2, 0}));
  EXPECT_EQ(restrict(fs.nu[mu], fs.H[1]), W({1, 0, 1, 0}));
  EXPECT_EQ(restrict(fs.nu[nu], fs.H[1]), W({0, -1, 1, 0}));
  EXPECT_EQ(root.leaf_count, 4);
  EXPECT_TRUE(verify_factorization(root, block_decomposition_oracle(pd, bar).oracle_count).ok);
}

TEST(Decomposition, So18ThreeFactors) {
  const ParabolicData pd = make_parabolic_excluding({Family::D, 9}, {5, 8, 9});
  const Weight bar = W({3, 2, 2, 2, 1, 1, 1, 1, -1});
  const FactorNode root = factorize(pd, bar);
  EXPECT_EQ(factor_count(root), 3);
  for (const FactorNode* leaf : leaves(root)) {
    if (leaf->coset_size == 0) continue;
    EXPECT_LE(leaf->rs.rank, 1);
    EXPECT_EQ(leaf->coset_size, 1);
  }
  EXPECT_EQ(root.leaf_count, 4);
  EXPECT_TRUE(verify_factorization(root, 4).ok);
}

TEST(Decomposition, TowerFactorizes) {
  const ParabolicData pd = make_parabolic_excluding({Family::B, 12}, {2, 6, 12});
  const Weight bar = W({3, 2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0});
  const FactorNode root = factorize(pd, bar);
  EXPECT_EQ(root.leaf_count, 8);
  EXPECT_TRUE(verify_factorization(root, 8).ok);
}

TEST(Decomposition, PseudoIndecomposableIsOneLeaf) {
  const ParabolicData pd = make_parabolic({Family::B, 2}, {1});
  const FactorNode root = factorize(pd, W({1, 0}));
  EXPECT_TRUE(root.leaf());
  EXPECT_EQ(factor_count(root), 1);
  EXPECT_EQ(root.leaf_count, 2);
}

TEST(Decomposition, SplitErrors) {
  const ParabolicData b6 = make_parabolic_excluding({Family::B, 6}, {2, 6});
  const Weight bar = W({2, 1, 1, 1, 0, 0});
  EXPECT_THROW(split(b6, bar, pair({2}, {1, 2, 3})), PairNotSeparable);
  const ParabolicData b2 = make_parabolic({Family::B, 2}, {1});
  EXPECT_THROW(split(b2, W({1, 0}), pair({1}, {2})), PairNotStronglySeparable);
  const ParabolicData d4 = make_parabolic({Family::D, 4}, {1, 3});
  EXPECT_THROW(split(d4, W({1, 1, 1, -1}), pair({1}, {1})), EmptyCoset);
}

TEST(Decomposition, TTable) {
  const ParabolicData pd = make_parabolic_excluding({Family::B, 6}, {4, 6});
  const Weight bar = W({2, 1, 1, 1, 0, 0});
  const SingularData sd = singular_set(pd.rs, bar);
  const std::string t = render_T_table(pd, sd, W({2, 1, 0, -1, 1, 0}));
  EXPECT_EQ(t,
            "┌────┬───┐\n"
            "│ 2  │   │\n"
            "├────┼───┤\n"
            "│ ±1 │ 1 │\n"
            "├────┼───┤\n"
            "│ 0  │ 0 │\n"
            "└────┴───┘\n");
  const RootSystem a3{Family::A, 3};
  const Weight reg = W({3, 2, 1});
  const std::string one = render_T_table(make_parabolic(a3, {1, 2}), singular_set(a3, reg), reg);
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 7);
}

TEST(Decomposition, Segmented) {
  const ParabolicData pd = make_parabolic_excluding({Family::A, 7}, {3, 5, 6});
  EXPECT_EQ(segmented(pd, W({3, 2, 1, 2, 1, 2, 1})), "(3,2,1|2,1|2|1)");
}

TEST(Decomposition, CosetRepresentativeIsShortest) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 2; n <= 3; ++n) {
      const RootSystem rs{f, n};
      const auto group = oracle::group(rs.rank, oracle::simple_roots(rs));
      for (unsigned jm = 0; jm < (1u << rs.num_simple()); ++jm) {
        std::vector<int> J;
        for (int k = 0; k < rs.num_simple(); ++k)
          if (jm >> k & 1u) J.push_back(k + 1);
        const Weight bar = canonical_dominant(rs, J);
        for (const Weight& l : oracle::orbit(oracle::simple_roots(rs), bar)) {
          int best = INT_MAX;
          for (const SignedPermutation& w : group)
            if (apply(w, bar) == l) best = std::min(best, length_parity(rs, w).length);
          const SignedPermutation x = coset_representative(rs, bar, l);
          EXPECT_EQ(apply(x, bar), l);
          EXPECT_EQ(length_parity(rs, x).length, best) << to_string(l);
        }
      }
    }
}
