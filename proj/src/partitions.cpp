#include "oblocks/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "oblocks/separability.hpp"

namespace oblocks {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::erase(parts, 0);
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::N() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::prefix(int k) const {
  int s = 0;
  for (int i = 1; i <= k; ++i) s += at(i);
  return s;
}

int Partition::multiplicity(int v) const { return static_cast<int>(std::count(parts.begin(), parts.end(), v)); }

Partition dual(const Partition& pi) {
  std::vector<int> t(pi.at(1), 0);
  for (int p : pi.parts)
    for (int i = 0; i < p; ++i) ++t[i];
  return Partition(std::move(t));
}

bool dominance_leq(const Partition& pi, const Partition& eta) {
  if (pi.N() != eta.N())
    throw UnequalN("dominance needs equal sizes, got " + std::to_string(pi.N()) + " and " + std::to_string(eta.N()));
  const int len = std::max(pi.size(), eta.size());
  for (int k = 1; k <= len; ++k)
    if (pi.prefix(k) > eta.prefix(k)) return false;
  return true;
}

namespace {

// the largest part of the restricted parity occurring an odd number of times, 0 if none
int worst_part(const Partition& pi, Family f) {
  const int bad_parity = f == Family::C ? 1 : 0;
  for (int v : pi.parts)
    if (v % 2 == bad_parity && pi.multiplicity(v) % 2 != 0) return v;
  return 0;
}

}  // namespace

bool admissible(const Partition& pi, Family f) {
  if (f == Family::A) return true;
  return worst_part(pi, f) == 0;
}

bool very_even(const Partition& pi) {
  for (int v : pi.parts)
    if (v % 2 != 0 || pi.multiplicity(v) % 2 != 0) return false;
  return true;
}

Partition collapse(const Partition& pi, Family f) {
  if (f == Family::A) return pi;
  std::vector<int> p = pi.parts;
  for (int q = worst_part(pi, f); q != 0; q = worst_part(Partition(p), f)) {
    p.push_back(0);
    int last = -1;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[i] == q) last = i;
    --p[last];
    for (int i = last + 1; i < static_cast<int>(p.size()); ++i)
      if (p[i] < q - 1) {
        ++p[i];
        break;
      }
    p = Partition(p).parts;
  }
  return Partition(p);
}

std::vector<Partition> all_partitions(int N) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(N, N);
  return out;
}

std::string exponent_string(const Partition& pi) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (pi.parts.empty()) return "∅";
  const bool wide = pi.at(1) >= 10;
  std::string s;
  for (std::size_t i = 0; i < pi.parts.size();) {
    std::size_t j = i;
    while (j < pi.parts.size() && pi.parts[j] == pi.parts[i]) ++j;
    if (wide && !s.empty()) s += ' ';
    s += std::to_string(pi.parts[i]);
    if (j - i > 1)
      for (char c : std::to_string(j - i)) s += sup[c - '0'];
    i = j;
  }
  return s;
}

std::string to_string(const OrbitLabel& o) {
  std::string s = exponent_string(o.pi);
  if (o.label == VeryEvenLabel::I) s += " (I)";
  if (o.label == VeryEvenLabel::II) s += " (II)";
  return s;
}

OrbitLabel pi_I(const ParabolicData& pd) {
  std::vector<int> v;
  const int m = pd.m;
  const Family f = pd.rs.family;
  if (f == Family::A) {
    v = pd.sizes;
  } else {
    for (int s = 1; s < m; ++s) v.insert(v.end(), {pd.n_s(s), pd.n_s(s)});
    const int nm = pd.n_s(m);
    if (f == Family::B) v.push_back(2 * nm + 1);
    if (f == Family::C) v.push_back(2 * nm);
    if (f == Family::D && nm >= 1) v.insert(v.end(), {2 * nm - 1, 1});
  }
  OrbitLabel o{Partition(v), VeryEvenLabel::None};
  if (f == Family::D && very_even(o.pi)) o.label = pd.nonstandard ? VeryEvenLabel::II : VeryEvenLabel::I;
  return o;
}

OrbitLabel richardson(const ParabolicData& pd) {
  const OrbitLabel o = pi_I(pd);
  OrbitLabel r{collapse(dual(o.pi), pd.rs.family), VeryEvenLabel::None};
  if (pd.rs.family == Family::D && very_even(o.pi)) {
    const bool four = pd.rs.rank % 4 == 0;
    r.label = (!pd.nonstandard) == four ? VeryEvenLabel::I : VeryEvenLabel::II;
  }
  return r;
}

namespace {

bool dominance_both(const ParabolicData& pd_I, const ParabolicData& pd_J) {
  const Partition pi = pi_I(pd_I).pi, pj = pi_I(pd_J).pi;
  return dominance_leq(pi, dual(pj)) && dominance_leq(pj, dual(pi));
}

bool exception_clause(const ParabolicData& pd_I, const ParabolicData& pd_J) {
  if (pd_I.rs.family != Family::D) return false;
  const ParabolicData I = pd_I.nonstandard ? phi(pd_I) : pd_I;
  const ParabolicData J = pd_I.nonstandard ? phi(pd_J) : pd_J;
  const Partition pi = pi_I(I).pi, pj = pi_I(J).pi;
  if (!very_even(pi) || !very_even(pj)) return false;
  if (pi != dual(pj) || pj != dual(pi)) return false;
  const bool four = I.rs.rank % 4 == 0;
  return (J.nonstandard && four) || (!J.nonstandard && !four);
}

}  // namespace

bool nonempty_criterion(const ParabolicData& pd_I, const ParabolicData& pd_J) {
  if (pd_I.rs != pd_J.rs) throw DimensionMismatch("I and J must live in the same root system");
  return dominance_both(pd_I, pd_J) && !exception_clause(pd_I, pd_J);
}

bool nonempty_exception_fires(const ParabolicData& pd_I, const ParabolicData& pd_J) {
  return dominance_both(pd_I, pd_J) && exception_clause(pd_I, pd_J);
}

namespace {

bool compat(Family f, int k, int mA, const Partition& piA, int nA, const Partition& piB, int nB) {
  if (k < 1 || k > 2 * mA - 1) return false;
  const bool odd = k % 2 != 0;
  switch (f) {
    case Family::A: return false;
    case Family::B:
      if (odd) return piB.at(2) >= k && k >= 2 * nB + 1 && piA.at(k) <= 2 * nA + 1;
      return k <= 2 * nB && piA.at(k) >= 2 * nA + 1;
    case Family::C:
      if (odd) return piB.at(2) >= k && k >= 2 * nB + 1 && piA.at(k) <= 2 * nA;
      return k <= 2 * nB && piA.at(k) >= 2 * nA + 1;
    case Family::D:
      if (!odd) return piB.at(2) >= k && k >= 2 * nB && piA.at(k) >= 2 * nA;
      return k <= 2 * nB - 1 && piA.at(k) <= 2 * nA - 1;
  }
  return false;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool compatible_k(int k, const ParabolicData& pd_I, const ParabolicData& pd_J) {
  return compat(pd_I.rs.family, k, pd_I.m, pi_I(pd_I).pi, pd_I.n_s(pd_I.m), pi_I(pd_J).pi, pd_J.n_s(pd_J.m));
}

int CompatibleClasses::nontrivial_classes() const {
  return num_classes() - static_cast<int>(std::count(class_trivial.begin(), class_trivial.end(), true));
}

bool CompatibleClasses::has_odd() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const CompatiblePair& p) { return p.odd(); });
}

CompatibleClasses compatible_pairs(const ParabolicData& pd_I, const ParabolicData& pd_J, Transcription rule) {
  CompatibleClasses cc;
  const Family f = pd_I.rs.family;
  const int m = pd_I.m, mbar = pd_J.m;
  if (f == Family::A || m <= 1 || mbar <= 1) return cc;
  const bool corrected = f == Family::D && rule == Transcription::Corrected;
  const Partition pi = pi_I(pd_I).pi, pj = pi_I(pd_J).pi;
  const Partition pit = dual(pi), pjt = dual(pj);
  const int nm = pd_I.n_s(m), nb = pd_J.n_s(mbar);
  // the trailing part 1 of a type D partition sits outside the first k parts
  auto shift = [&](int k) { return corrected && k % 2 != 0 ? 1 : 0; };
  for (int k = 1; k <= 2 * m - 1; ++k) {
    if (!compat(f, k, m, pi, nm, pj, nb) || pi.prefix(k) + shift(k) != pjt.prefix(k)) continue;
    int gt = 0, ge = 0;
    for (int t = 1; t < mbar; ++t) {
      gt += pd_J.n_s(t) > k;
      ge += pd_J.n_s(t) >= k;
    }
    const bool l_even = (f == Family::D) == (k % 2 == 0);
    const int lo = 2 * gt + (l_even ? 0 : 1), hi = 2 * ge + (l_even ? 0 : 1);
    for (int l = lo; l <= hi; l += 2) {
      if (l < 1) continue;
      if (!compat(f, l, mbar, pj, nb, pi, nm) || pj.prefix(l) + shift(l) != pit.prefix(l)) continue;
      cc.pairs.push_back({k, l, false});
    }
  }
  const int n = static_cast<int>(cc.pairs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const CompatiblePair &x = cc.pairs[i], &y = cc.pairs[j];
      const bool rel = (x.l == y.l && (x.k - y.k) % 2 == 0) || (x.k == y.k && (x.l - y.l) % 2 == 0);
      if (!rel) continue;
      int a = find(parent, i), b = find(parent, j);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;
    }
  cc.class_of.assign(n, -1);
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(parent, i);
    if (slot[r] < 0) {
      slot[r] = cc.num_classes();
      cc.class_trivial.push_back(false);
    }
    cc.class_of[i] = slot[r];
  }
  const CompatiblePair anchors[] = {{2, corrected ? 2 * mbar - 2 : 2 * mbar - 1, false},
                                    {corrected ? 2 * m - 2 : 2 * m - 1, 2, false}};
  for (const CompatiblePair& a : anchors)
    for (int i = 0; i < n; ++i)
      if (cc.pairs[i] == a) cc.class_trivial[cc.class_of[i]] = true;
  for (int i = 0; i < n; ++i) cc.pairs[i].trivial = cc.class_trivial[cc.class_of[i]];
  return cc;
}

PartitionCount count_from_partitions(const ParabolicData& pd_I, const ParabolicData& pd_J, Transcription rule) {
  if (!nonempty_criterion(pd_I, pd_J)) throw EmptyCoset("the partition criterion reports an empty coset");
  const Family f = pd_I.rs.family;
  if (f == Family::A) return {1, "type A: at most one block"};
  const CompatibleClasses cc = compatible_pairs(pd_I, pd_J, rule);
  if (f == Family::D && cc.has_odd()) return {1 << (cc.num_classes() - 1), "D odd: 2^(p-1), p = classes"};
  if (f == Family::D) return {1 << cc.nontrivial_classes(), "D even: 2^p, p = nontrivial classes"};
  return {1 << cc.nontrivial_classes(), "B/C: 2^p, p = nontrivial classes"};
}

}  // namespace oblocks
