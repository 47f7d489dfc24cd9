#include "oblocks/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oblocks {

void check_weight(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank)
    throw InvalidWeight("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                        std::to_string(rs.rank));
  int odd = 0;
  for (int x : lambda.x2) odd += (x % 2 != 0);
  if (odd == 0) return;
  if ((rs.family == Family::B || rs.family == Family::D) && odd == lambda.size()) return;
  throw InvalidWeight("weight " + to_string(lambda) + " is not integral for type " +
                      std::string(1, family_letter(rs.family)));
}

bool is_phiI_regular(const ParabolicData& pd, const Weight& lambda) {
  for (const Root& r : pd.levi_roots)
    if (coroot_pairing(lambda, r) == 0) return false;
  return true;
}

bool in_Lambda_I_plus(const ParabolicData& pd, const Weight& lambda) {
  for (const Root& r : pd.simple_in_I)
    if (coroot_pairing(lambda, r) <= 0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda) {
  for (int k = 1; k <= rs.num_simple(); ++k)
    if (coroot_pairing(lambda, simple_root(rs, k)) < 0) return false;
  return true;
}

DominantRep dominant_rep(const RootSystem& rs, const Weight& lambda) {
  const int n = lambda.size();
  const bool typeA = rs.family == Family::A;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) { return typeA ? lambda.x2[i] : std::abs(lambda.x2[i]); };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key(x) > key(y); });
  std::vector<int> perm(n), signs(n, 1);
  for (int pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
  if (!typeA) {
    int neg = 0;
    for (int i = 0; i < n; ++i)
      if (lambda.x2[i] < 0) signs[i] = -1, ++neg;
    if (rs.family == Family::D && neg % 2) {
      auto zero = std::find(lambda.x2.begin(), lambda.x2.end(), 0);
      if (zero != lambda.x2.end()) {
        signs[zero - lambda.x2.begin()] = -1;
      } else if (n > 0) {
        const int last = order[n - 1];
        signs[last] = -signs[last];
      }
    }
  }
  DominantRep out{Weight(), SignedPermutation{perm, signs}};
  out.bar = apply(out.w, lambda);
  return out;
}

SignedPermutation coset_representative(const RootSystem& rs, const Weight& lambda_bar, const Weight& lambda) {
  check_weight(rs, lambda_bar);
  check_weight(rs, lambda);
  const int n = lambda_bar.size();
  if (rs.family == Family::D && n >= 2 && lambda_bar.at(n) < 0) {
    SignedPermutation f = SignedPermutation::identity(n);
    f.signs[n - 1] = -1;
    return compose(f, compose(coset_representative(rs, phi(lambda_bar), phi(lambda)), f));
  }
  const bool typeA = rs.family == Family::A;
  SignedPermutation x = SignedPermutation::identity(n);
  std::vector<bool> used(n, false);
  int negatives = 0, last_zero = -1;
  for (int i = 0; i < n;) {
    int k = i;
    while (k < n && lambda_bar.x2[k] == lambda_bar.x2[i]) ++k;
    const int v = lambda_bar.x2[i];
    std::vector<int> plus, minus;
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      if (lambda.x2[p] == v) plus.push_back(p);
      else if (!typeA && v != 0 && lambda.x2[p] == -v) minus.push_back(p);
    }
    std::reverse(minus.begin(), minus.end());
    if (plus.size() + minus.size() < static_cast<std::size_t>(k - i))
      throw InvalidWeight(to_string(lambda) + " is not in the orbit of " + to_string(lambda_bar));
    for (int j = i; j < k; ++j) {
      const bool pos = j - i < static_cast<int>(plus.size());
      const int p = pos ? plus[j - i] : minus[j - i - plus.size()];
      used[p] = true;
      x.perm[j] = p;
      x.signs[j] = pos ? 1 : -1;
      negatives += !pos;
      if (v == 0) last_zero = j;
    }
    i = k;
  }
  if (rs.family == Family::D && negatives % 2) {
    if (last_zero < 0) throw InvalidWeight(to_string(lambda) + " is not in the W(D) orbit of " + to_string(lambda_bar));
    x.signs[last_zero] = -1;
  }
  if (apply(x, lambda_bar) != lambda)
    throw InvalidWeight(to_string(lambda) + " is not in the orbit of " + to_string(lambda_bar));
  return x;
}

SingularData singular_set(const RootSystem& rs, const Weight& lambda_bar) {
  check_weight(rs, lambda_bar);
  if (!is_dominant(rs, lambda_bar)) throw InvalidWeight(to_string(lambda_bar) + " is not dominant");
  SingularData sd;
  sd.rs = rs;
  sd.lambda_bar = lambda_bar;
  for (int k = 1; k <= rs.num_simple(); ++k)
    if (coroot_pairing(lambda_bar, simple_root(rs, k)) == 0) sd.J.push_back(k);
  sd.blocks = make_parabolic(rs, sd.J);
  sd.nonstandard = sd.blocks.nonstandard;
  sd.mbar = sd.blocks.m;
  const Weight lam = sd.nonstandard ? phi(lambda_bar) : lambda_bar;
  for (int t = 1; t <= sd.mbar; ++t) {
    if (sd.blocks.n_s(t) == 0) {
      sd.a.push_back(0);
    } else if (rs.family == Family::A) {
      sd.a.push_back(lam.at(sd.blocks.last(t)));
    } else if (t < sd.mbar) {
      sd.a.push_back(std::abs(lam.at(sd.blocks.last(t))));
    } else {
      sd.a.push_back(0);
    }
  }
  if (rs.family == Family::D && sd.mbar >= 2 && sd.a[sd.mbar - 2] == 0)
    throw DegenerateSingularity("degenerate D singularity for " + to_string(lambda_bar) +
                                ": both trailing J-blocks carry the value 0, violating a_{mbar-1} > 0");
  return sd;
}

Weight canonical_dominant(const RootSystem& rs, const std::vector<int>& J) {
  const ParabolicData blocks = make_parabolic(rs, J);
  if (blocks.nonstandard) return phi(canonical_dominant(rs, phi(rs, J)));
  Weight w(std::vector<int>(rs.rank, 0));
  for (int t = 1; t <= blocks.m; ++t)
    for (int i = blocks.first(t); i <= blocks.last(t); ++i) w.at(i) = 2 * (blocks.m - t);
  const SingularData sd = singular_set(rs, w);
  if (sd.J != blocks.I()) throw UnrealizableJ("no dominant weight realizes the requested J");
  return w;
}

namespace {

struct CosetFiller {
  const ParabolicData& pd;
  bool typeA;
  std::vector<int> values;  // distinct keys, descending
  std::vector<int> left;    // remaining multiplicities
  Weight cur;
  std::vector<Weight>& out;
  bool fixed_parity;
  int target_parity;

  void fill(int s) {
    if (s > pd.m) {
      if (std::any_of(left.begin(), left.end(), [](int c) { return c != 0; })) return;
      if (fixed_parity && parity(cur) != target_parity) return;
      out.push_back(cur);
      return;
    }
    const bool last_special = !typeA && s == pd.m;
    std::vector<int> chosen;
    choose(s, last_special, 0, pd.n_s(s), chosen);
  }

  // chosen holds signed doubled values
  void choose(int s, bool last_special, std::size_t vi, int need, std::vector<int>& chosen) {
    if (need == 0) {
      place(s, last_special, chosen);
      return;
    }
    if (vi >= values.size()) return;
    const int v = values[vi];
    choose(s, last_special, vi + 1, need, chosen);
    if (left[vi] == 0) return;
    if (typeA || v == 0) {
      if (last_special && v == 0 && pd.rs.family != Family::D) return;
      take(s, last_special, vi, need, chosen, {v});
      return;
    }
    take(s, last_special, vi, need, chosen, {v});
    if (!last_special) {
      take(s, last_special, vi, need, chosen, {-v});
      if (left[vi] >= 2 && need >= 2) take(s, last_special, vi, need, chosen, {v, -v});
    }
  }

  void take(int s, bool last_special, std::size_t vi, int need, std::vector<int>& chosen,
            std::initializer_list<int> vals) {
    const int k = static_cast<int>(vals.size());
    if (k > need) return;
    left[vi] -= k;
    chosen.insert(chosen.end(), vals);
    choose(s, last_special, vi + 1, need - k, chosen);
    chosen.resize(chosen.size() - k);
    left[vi] += k;
  }

  void place(int s, bool last_special, std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end(), std::greater<>());
    const int first = pd.first(s);
    for (std::size_t k = 0; k < chosen.size(); ++k) cur.at(first + static_cast<int>(k)) = chosen[k];
    if (last_special && pd.rs.family == Family::D && !chosen.empty() && chosen.back() != 0) {
      fill(s + 1);
      cur.at(pd.last(s)) = -chosen.back();
      fill(s + 1);
      cur.at(pd.last(s)) = chosen.back();
      return;
    }
    fill(s + 1);
  }
};

}  // namespace

std::vector<Weight> enumerate_coset(const ParabolicData& pd, const Weight& lambda) {
  check_weight(pd.rs, lambda);
  if (pd.nonstandard) {
    std::vector<Weight> out = enumerate_coset(phi(pd), phi(lambda));
    for (Weight& w : out) w = phi(w);
    std::sort(out.begin(), out.end());
    return out;
  }
  const bool typeA = pd.rs.family == Family::A;
  std::map<int, int, std::greater<>> mult;
  bool has_zero = false;
  for (int x : lambda.x2) {
    ++mult[typeA ? x : std::abs(x)];
    has_zero |= x == 0;
  }
  std::vector<Weight> out;
  CosetFiller f{pd, typeA, {}, {}, Weight(std::vector<int>(lambda.size(), 0)), out,
                pd.rs.family == Family::D && !has_zero, parity(lambda)};
  for (auto [v, c] : mult) {
    f.values.push_back(v);
    f.left.push_back(c);
  }
  f.fill(1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_in_segment(const ParabolicData& pd, const Weight& lambda, int s, int a) {
  int c = 0;
  const bool typeA = pd.rs.family == Family::A;
  for (int i = pd.first(s); i <= pd.last(s); ++i)
    c += typeA ? lambda.at(i) == a : std::abs(lambda.at(i)) == a;
  return c;
}

CountTable count_table(const ParabolicData& pd, const SingularData& sd, const Weight& lambda) {
  CountTable t(pd.m, std::vector<int>(sd.mbar, 0));
  for (int s = 1; s <= pd.m; ++s)
    for (int u = 1; u <= sd.mbar; ++u) t[s - 1][u - 1] = count_in_segment(pd, lambda, s, sd.a_t(u));
  return t;
}

int max_count(const ParabolicData& pd, int s, int a) {
  switch (pd.rs.family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C:
      if (s == pd.m && a == 0) return 0;
      return (a == 0 || s == pd.m) ? 1 : 2;
    case Family::D: return (a == 0 || s == pd.m) ? 1 : 2;
  }
  return 0;
}

int parity(const Weight& lambda) {
  int neg = 0;
  for (int x : lambda.x2) neg += x < 0;
  return neg % 2;
}

Weight phi(const Weight& lambda) {
  Weight w = lambda;
  if (w.size() > 0) w.x2.back() = -w.x2.back();
  return w;
}

std::vector<int> phi(const RootSystem& rs, const std::vector<int>& I) {
  if (rs.family != Family::D) throw std::invalid_argument("phi is defined for type D only");
  const int n = rs.rank;
  std::vector<int> out;
  for (int k : I) out.push_back(k == n ? n - 1 : k == n - 1 ? n : k);
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicData phi(const ParabolicData& pd) { return make_parabolic(pd.rs, phi(pd.rs, pd.I())); }

Root phi(const RootSystem& rs, const Root& beta) {
  if (rs.family != Family::D) throw std::invalid_argument("phi is defined for type D only");
  if (beta.j != rs.rank) return beta;
  Root r = beta;
  if (beta.kind == RootKind::EiMinusEj) r.kind = RootKind::EiPlusEj;
  else if (beta.kind == RootKind::EiPlusEj) r.kind = RootKind::EiMinusEj;
  return r;
}

Normalized normalize_to_Lambda_I(const ParabolicData& pd, const Weight& lambda) {
  if (!is_phiI_regular(pd, lambda)) throw NotRegular(to_string(lambda) + " is Phi_I-singular");
  Normalized out{lambda, 0};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Root& r : pd.simple_in_I) {
      if (coroot_pairing(out.mu, r) < 0) {
        out.mu = reflect(out.mu, r);
        ++out.length;
        moved = true;
      }
    }
  }
  return out;
}

}  // namespace oblocks
