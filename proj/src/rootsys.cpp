#include "oblocks/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oblocks {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

int RootSystem::num_simple() const {
  if (family == Family::A) return std::max(rank - 1, 0);
  if (family == Family::D && rank < 2) return 0;
  return rank;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  switch (r.kind) {
    case RootKind::EiMinusEj: os << 'e' << r.i << "-e" << r.j; break;
    case RootKind::EiPlusEj: os << 'e' << r.i << "+e" << r.j; break;
    case RootKind::Ei: os << 'e' << r.i; break;
    case RootKind::TwoEi: os << "2e" << r.i; break;
  }
  return os.str();
}

Weight Weight::from_ints(const std::vector<int>& v) {
  std::vector<int> d(v.size());
  std::transform(v.begin(), v.end(), d.begin(), [](int x) { return 2 * x; });
  return Weight(std::move(d));
}

bool Weight::all_integral() const {
  return std::all_of(x2.begin(), x2.end(), [](int x) { return x % 2 == 0; });
}

std::string coord_string(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += coord_string(w.x2[i]);
  }
  return s + ')';
}

std::vector<Root> positive_roots(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({RootKind::EiMinusEj, i, j});
  if (rs.family == Family::A) return out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({RootKind::EiPlusEj, i, j});
  if (rs.family == Family::B)
    for (int i = 1; i <= n; ++i) out.push_back({RootKind::Ei, i, 0});
  if (rs.family == Family::C)
    for (int i = 1; i <= n; ++i) out.push_back({RootKind::TwoEi, i, 0});
  return out;
}

Root simple_root(const RootSystem& rs, int k) {
  const int n = rs.rank;
  if (k < 1 || k > rs.num_simple()) throw std::out_of_range("simple root index");
  if (k < n) return {RootKind::EiMinusEj, k, k + 1};
  switch (rs.family) {
    case Family::B: return {RootKind::Ei, n, 0};
    case Family::C: return {RootKind::TwoEi, n, 0};
    case Family::D: return {RootKind::EiPlusEj, n - 1, n};
    case Family::A: break;
  }
  throw std::out_of_range("simple root index");
}

static int halve(int v) {
  if (v % 2 != 0) throw std::domain_error("non-integral coroot pairing");
  return v / 2;
}

int coroot_pairing(const Weight& lambda, const Root& beta) {
  const int n = lambda.size();
  if (beta.i < 1 || beta.i > n || beta.j > n) throw DimensionMismatch("root index out of range");
  switch (beta.kind) {
    case RootKind::EiMinusEj: return halve(lambda.at(beta.i) - lambda.at(beta.j));
    case RootKind::EiPlusEj: return halve(lambda.at(beta.i) + lambda.at(beta.j));
    case RootKind::Ei: return lambda.at(beta.i);
    case RootKind::TwoEi: return halve(lambda.at(beta.i));
  }
  return 0;
}

Weight reflect(const Weight& lambda, const Root& beta) {
  const int n = lambda.size();
  if (beta.i < 1 || beta.i > n || beta.j > n) throw DimensionMismatch("root index out of range");
  Weight mu = lambda;
  switch (beta.kind) {
    case RootKind::EiMinusEj: std::swap(mu.at(beta.i), mu.at(beta.j)); break;
    case RootKind::EiPlusEj:
      mu.at(beta.i) = -lambda.at(beta.j);
      mu.at(beta.j) = -lambda.at(beta.i);
      break;
    case RootKind::Ei:
    case RootKind::TwoEi: mu.at(beta.i) = -lambda.at(beta.i); break;
  }
  return mu;
}

std::vector<int> support(const RootSystem& rs, const Root& beta) {
  const int n = rs.rank;
  std::vector<int> out;
  auto range = [&](int a, int b) {
    for (int k = a; k <= b; ++k) out.push_back(k);
  };
  switch (beta.kind) {
    case RootKind::EiMinusEj: range(beta.i, beta.j - 1); break;
    case RootKind::Ei:
    case RootKind::TwoEi: range(beta.i, n); break;
    case RootKind::EiPlusEj:
      if (rs.family == Family::D && beta.j == n) {
        range(beta.i, n - 2);
        out.push_back(n);
      } else {
        range(beta.i, n);
      }
      break;
  }
  return out;
}

std::vector<int> root_vector(int n, const Root& beta) {
  std::vector<int> v(n, 0);
  switch (beta.kind) {
    case RootKind::EiMinusEj: v[beta.i - 1] = 1; v[beta.j - 1] = -1; break;
    case RootKind::EiPlusEj: v[beta.i - 1] = 1; v[beta.j - 1] = 1; break;
    case RootKind::Ei: v[beta.i - 1] = 1; break;
    case RootKind::TwoEi: v[beta.i - 1] = 2; break;
  }
  return v;
}

int ParabolicData::segment_of(int i) const {
  for (int s = 1; s <= m; ++s)
    if (i > q[s - 1] && i <= q[s]) return s;
  throw std::out_of_range("coordinate outside every segment");
}

std::vector<int> ParabolicData::I() const {
  std::vector<int> out;
  for (int k = 1; k < static_cast<int>(in_I.size()); ++k)
    if (in_I[k]) out.push_back(k);
  return out;
}

ParabolicData make_parabolic(const RootSystem& rs, const std::vector<int>& I) {
  const int ns = rs.num_simple();
  ParabolicData pd;
  pd.rs = rs;
  pd.in_I.assign(ns + 1, false);
  for (int k : I) {
    if (k < 1 || k > ns) throw std::out_of_range("simple root index " + std::to_string(k));
    pd.in_I[k] = true;
  }
  for (int k = 1; k <= ns; ++k)
    if (!pd.in_I[k]) pd.excluded.push_back(k);
  const int n = rs.rank;
  pd.nonstandard = rs.family == Family::D && n >= 2 && !pd.in_I[n - 1] && pd.in_I[n];
  std::vector<int> bounds = pd.excluded;
  if (pd.nonstandard) std::replace(bounds.begin(), bounds.end(), n - 1, n);
  pd.q.push_back(0);
  pd.q.insert(pd.q.end(), bounds.begin(), bounds.end());
  pd.q.push_back(n);
  pd.m = static_cast<int>(pd.q.size()) - 1;
  for (int s = 1; s <= pd.m; ++s) pd.sizes.push_back(pd.q[s] - pd.q[s - 1]);
  for (const Root& r : positive_roots(rs))
    if (in_levi(pd, r)) pd.levi_roots.push_back(r);
  for (int k = 1; k <= ns; ++k)
    if (pd.in_I[k]) pd.simple_in_I.push_back(simple_root(rs, k));
  return pd;
}

ParabolicData make_parabolic_excluding(const RootSystem& rs, const std::vector<int>& excluded) {
  std::vector<int> I;
  for (int k = 1; k <= rs.num_simple(); ++k)
    if (std::find(excluded.begin(), excluded.end(), k) == excluded.end()) I.push_back(k);
  for (int k : excluded)
    if (k < 1 || k > rs.num_simple()) throw std::out_of_range("simple root index " + std::to_string(k));
  return make_parabolic(rs, I);
}

bool in_levi(const ParabolicData& pd, const Root& beta) {
  for (int k : support(pd.rs, beta))
    if (!pd.in_I[k]) return false;
  return true;
}

std::vector<Root> levi_positive_roots(const ParabolicData& pd) { return pd.levi_roots; }

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  return w;
}

SignedPermutation SignedPermutation::make(Family f, std::vector<int> perm, std::vector<int> signs) {
  const int n = static_cast<int>(perm.size());
  if (static_cast<int>(signs.size()) != n) throw DimensionMismatch("perm/sign length mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  int neg = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw InvalidSigns("sign entries must be +1 or -1");
    neg += s < 0;
  }
  if (f == Family::A && neg) throw InvalidSigns("type A elements carry no sign changes");
  if (f == Family::D && neg % 2) throw InvalidSigns("type D elements change an even number of signs");
  return {std::move(perm), std::move(signs)};
}

SignedPermutation SignedPermutation::reflection(int n, const Root& beta) {
  SignedPermutation w = identity(n);
  const int i = beta.i - 1, j = beta.j - 1;
  switch (beta.kind) {
    case RootKind::EiMinusEj: std::swap(w.perm[i], w.perm[j]); break;
    case RootKind::EiPlusEj:
      std::swap(w.perm[i], w.perm[j]);
      w.signs[i] = w.signs[j] = -1;
      break;
    case RootKind::Ei:
    case RootKind::TwoEi: w.signs[i] = -1; break;
  }
  return w;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw DimensionMismatch("compose size mismatch");
  SignedPermutation w = v;
  for (int i = 0; i < v.size(); ++i) {
    w.perm[i] = u.perm[v.perm[i]];
    w.signs[i] = u.signs[v.perm[i]] * v.signs[i];
  }
  return w;
}

SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation r = w;
  for (int i = 0; i < w.size(); ++i) {
    r.perm[w.perm[i]] = i;
    r.signs[w.perm[i]] = w.signs[i];
  }
  return r;
}

std::vector<int> apply_to_vector(const SignedPermutation& w, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != w.size()) throw DimensionMismatch("apply size mismatch");
  std::vector<int> out(v.size());
  for (int i = 0; i < w.size(); ++i) out[w.perm[i]] = w.signs[i] * v[i];
  return out;
}

Weight apply(const SignedPermutation& w, const Weight& lambda) { return Weight(apply_to_vector(w, lambda.x2)); }

static bool is_negative(const std::vector<int>& v) {
  for (int x : v)
    if (x) return x < 0;
  return false;
}

static Length count_inversions(const std::vector<Root>& roots, int n, const SignedPermutation& w) {
  Length len;
  for (const Root& r : roots) len.length += is_negative(apply_to_vector(w, root_vector(n, r)));
  return len;
}

Length length_parity(const RootSystem& rs, const SignedPermutation& w) {
  return count_inversions(positive_roots(rs), rs.rank, w);
}

Length length_parity(const ParabolicData& pd, const SignedPermutation& w) {
  return count_inversions(levi_positive_roots(pd), pd.rs.rank, w);
}

}  // namespace oblocks
