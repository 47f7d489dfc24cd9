#include "oblocks/separability.hpp"

#include <algorithm>
#include <numeric>

namespace oblocks {

namespace {

std::vector<int> bits_to_set(unsigned mask, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i)
    if (mask >> i & 1u) out.push_back(i + 1);
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> range1(int k) {
  std::vector<int> v(std::max(k, 0));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool separable_on_table(const ParabolicData& pd, const SingularData& sd, const CountTable& t, unsigned smask,
                        unsigned tmask) {
  const int m = pd.m, mbar = sd.mbar;
  if (m <= 1 || mbar <= 1 || smask == 0 || tmask == 0) return false;
  for (int s = 1; s <= m; ++s) {
    const bool inS = smask >> (s - 1) & 1u;
    for (int u = 1; u <= mbar; ++u) {
      const bool inT = tmask >> (u - 1) & 1u;
      const int c = t[s - 1][u - 1];
      if (inS && inT && c != max_count(pd, s, sd.a_t(u))) return false;
      if (!inS && !inT && c != 0) return false;
    }
  }
  const bool mS = smask >> (m - 1) & 1u;
  const bool mT = tmask >> (mbar - 1) & 1u;
  switch (pd.rs.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return mS != mT;
    case Family::D: return mS == mT;
  }
  return false;
}

}  // namespace

int PairClasses::trivial_classes() const {
  return static_cast<int>(std::count(class_trivial.begin(), class_trivial.end(), true));
}

bool PairClasses::has_strong() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const SeparablePair& p) { return p.strong; });
}

bool PairClasses::has_odd() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const SeparablePair& p) { return p.odd; });
}

int PairClasses::index_of(const std::vector<int>& S, const std::vector<int>& Sbar) const {
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    if (pairs[i].S == S && pairs[i].Sbar == Sbar) return i;
  return -1;
}

bool is_separable_pair(const ParabolicData& pd, const SingularData& sd, const Weight& lambda,
                       const std::vector<int>& S, const std::vector<int>& Sbar) {
  unsigned smask = 0, tmask = 0;
  for (int s : S) {
    if (s < 1 || s > pd.m) return false;
    smask |= 1u << (s - 1);
  }
  for (int u : Sbar) {
    if (u < 1 || u > sd.mbar) return false;
    tmask |= 1u << (u - 1);
  }
  return separable_on_table(pd, sd, count_table(pd, sd, lambda), smask, tmask);
}

PairClasses separable_pairs_at(const ParabolicData& pd, const SingularData& sd, const Weight& lambda) {
  PairClasses pc;
  const int m = pd.m, mbar = sd.mbar;
  if (m <= 1 || mbar <= 1) return pc;
  const CountTable t = count_table(pd, sd, lambda);
  const bool typeA = pd.rs.family == Family::A;
  const bool typeD = pd.rs.family == Family::D;
  for (unsigned sm = 1; sm < (1u << m); ++sm)
    for (unsigned tm = 1; tm < (1u << mbar); ++tm) {
      if (!separable_on_table(pd, sd, t, sm, tm)) continue;
      SeparablePair p;
      p.S = bits_to_set(sm, m);
      p.Sbar = bits_to_set(tm, mbar);
      p.odd = typeD && contains(p.S, m);
      if (!typeA) {
        const auto lo = range1(m - 1), lob = range1(mbar - 1), all = range1(m), allb = range1(mbar);
        const std::vector<int> mm{m}, mb{mbar};
        p.strong = !((p.S == lo && p.Sbar == mb) || (p.S == all && p.Sbar == mb) ||
                     (p.S == mm && p.Sbar == lob) || (p.S == mm && p.Sbar == allb));
      }
      pc.pairs.push_back(std::move(p));
    }
  std::sort(pc.pairs.begin(), pc.pairs.end(), [](const SeparablePair& x, const SeparablePair& y) {
    return std::tie(x.S, x.Sbar) < std::tie(y.S, y.Sbar);
  });
  const int n = static_cast<int>(pc.pairs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SeparablePair &x = pc.pairs[i], &y = pc.pairs[j];
      const bool rel = (x.Sbar == y.Sbar && (is_subset(x.S, y.S) || is_subset(y.S, x.S))) ||
                       (x.S == y.S && (is_subset(x.Sbar, y.Sbar) || is_subset(y.Sbar, x.Sbar)));
      if (!rel) continue;
      int a = find(parent, i), b = find(parent, j);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;
    }
  pc.class_of.assign(n, -1);
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(parent, i);
    if (slot[r] < 0) {
      slot[r] = pc.num_classes();
      pc.class_trivial.push_back(false);
    }
    pc.class_of[i] = slot[r];
  }
  if (!typeA) {
    const int cut = typeD ? mbar - 1 : mbar;
    const int cutS = typeD ? m - 1 : m;
    for (int s0 = 1; s0 < m; ++s0) {
      const int i = pc.index_of({s0}, range1(cut));
      if (i >= 0) pc.class_trivial[pc.class_of[i]] = true;
    }
    for (int t0 = 1; t0 < mbar; ++t0) {
      const int i = pc.index_of(range1(cutS), {t0});
      if (i >= 0) pc.class_trivial[pc.class_of[i]] = true;
    }
  }
  for (int i = 0; i < n; ++i) pc.pairs[i].trivial = pc.class_trivial[pc.class_of[i]];
  return pc;
}

PairClasses all_separable_pairs(const ParabolicData& pd, const SingularData& sd, const Weight& lambda_bar,
                                bool verify_all) {
  const std::vector<Weight> coset = enumerate_coset(pd, lambda_bar);
  if (coset.empty()) throw EmptyCoset("coset of " + to_string(lambda_bar) + " is empty");
  PairClasses pc = separable_pairs_at(pd, sd, coset.front());
  if (verify_all)
    for (const Weight& w : coset) {
      const PairClasses other = separable_pairs_at(pd, sd, w);
      if (other.pairs.size() != pc.pairs.size() ||
          !std::equal(other.pairs.begin(), other.pairs.end(), pc.pairs.begin()))
        throw TheoremViolation("separable pairs differ between " + to_string(coset.front()) + " and " +
                               to_string(w));
    }
  return pc;
}

PairOrder pair_partial_order(const SeparablePair& p1, const SeparablePair& p2) {
  if (p1 == p2) return PairOrder::Equal;
  if (is_subset(p1.S, p2.S) && is_subset(p2.Sbar, p1.Sbar)) return PairOrder::Less;
  if (is_subset(p2.S, p1.S) && is_subset(p1.Sbar, p2.Sbar)) return PairOrder::Greater;
  if (p1.S == p2.S || p1.Sbar == p2.Sbar) return PairOrder::Incomparable;
  throw TheoremViolation("separable pairs are incomparable");
}

bool two_block_shape(const ParabolicData& pd, const SingularData& sd) {
  const int m = pd.m, mbar = sd.mbar;
  if (m <= 1 || mbar <= 1) return false;
  const int nm = pd.n_s(m), nb = sd.nbar(mbar);
  switch (pd.rs.family) {
    case Family::A: return false;
    case Family::B:
    case Family::C: return (nm == 0 && nb == m - 1) || (nm == mbar - 1 && nb == 0);
    case Family::D: return nm == mbar && nb == m;
  }
  return false;
}

Prediction predict_from_pairs(const ParabolicData& pd, const SingularData& sd, const PairClasses& pc) {
  if (pd.rs.family == Family::A) return {1, "type A: at most one block"};
  if (pd.m <= 1 || sd.mbar <= 1) return {1, "not separable: one block"};
  if (pc.pairs.empty()) return {1, "not separable: one block"};
  if (!pc.has_strong()) {
    if (two_block_shape(pd, sd)) return {2, "pseudo-indecomposable: two blocks by parity"};
    return {1, "pseudo-indecomposable: one block"};
  }
  if (pd.rs.family == Family::D && pc.has_odd())
    return {1 << (pc.num_classes() - 1), "D odd: 2^(k-1), k = classes of separable pairs"};
  if (pd.rs.family == Family::D) return {1 << pc.nontrivial_classes(), "D even: 2^k, k = nontrivial classes"};
  return {1 << pc.nontrivial_classes(), "B/C: 2^k, k = nontrivial classes"};
}

Prediction predicted_block_count(const ParabolicData& pd, const SingularData& sd, const Weight& lambda_bar) {
  return predict_from_pairs(pd, sd, all_separable_pairs(pd, sd, lambda_bar));
}

bool is_pseudo_indecomposable(const ParabolicData& pd, const SingularData& sd) {
  const std::vector<Weight> coset = enumerate_coset(pd, sd.lambda_bar);
  if (coset.size() < 2) throw TooFewSimples("pseudo-indecomposability needs at least two simple modules");
  return !separable_pairs_at(pd, sd, coset.front()).has_strong();
}

bool two_block_membership(const ParabolicData& pd, const SingularData& sd, const Weight& lambda, const Weight& mu) {
  const std::vector<Weight> coset = enumerate_coset(pd, sd.lambda_bar);
  if (coset.size() < 2) throw NotTwoBlockCase("system has fewer than two simple modules");
  const PairClasses pc = separable_pairs_at(pd, sd, coset.front());
  if (pc.has_strong() || predict_from_pairs(pd, sd, pc).count != 2)
    throw NotTwoBlockCase("system is not a pseudo-indecomposable two-block case");
  return parity(lambda) == parity(mu);
}

}  // namespace oblocks
