#include "oblocks/jantzen.hpp"

#include <cstdlib>

namespace oblocks {

std::vector<Root> psi_plus(const ParabolicData& pd, const Weight& lambda) {
  std::vector<Root> out;
  for (const Root& r : positive_roots(pd.rs))
    if (!in_levi(pd, r) && coroot_pairing(lambda, r) > 0) out.push_back(r);
  return out;
}

JantzenRow jantzen_witnesses(const ParabolicData& pd, const Weight& lambda) {
  JantzenRow row;
  for (const Root& beta : psi_plus(pd, lambda)) {
    const Weight nu = reflect(lambda, beta);
    if (!is_phiI_regular(pd, nu)) continue;
    const Normalized norm = normalize_to_Lambda_I(pd, nu);
    JantzenEntry& e = row[norm.mu];
    e.source = lambda;
    e.target = norm.mu;
    e.c += norm.odd() ? -1 : 1;
    e.witnesses.push_back({beta, norm.odd()});
  }
  return row;
}

JantzenRow jantzen_row(const ParabolicData& pd, const Weight& lambda) {
  JantzenRow row = jantzen_witnesses(pd, lambda);
  std::erase_if(row, [](const auto& kv) { return kv.second.c == 0; });
  return row;
}

JantzenEntry jantzen_coefficient(const ParabolicData& pd, const Weight& lambda, const Weight& mu) {
  if (!in_Lambda_I_plus(pd, lambda) || !in_Lambda_I_plus(pd, mu))
    throw WeightNotInCoset("both weights must lie in Lambda_I^+");
  if (dominant_rep(pd.rs, lambda).bar != dominant_rep(pd.rs, mu).bar)
    throw WeightNotInCoset(to_string(lambda) + " and " + to_string(mu) + " lie in different W-orbits");
  const JantzenRow row = jantzen_witnesses(pd, lambda);
  auto it = row.find(mu);
  if (it != row.end()) return it->second;
  return JantzenEntry{lambda, mu, 0, {}};
}

bool is_linked(const ParabolicData& pd, const Weight& lambda, const Root& beta) {
  if (in_levi(pd, beta)) return false;
  const Weight nu = reflect(lambda, beta);
  if (nu == lambda || !is_phiI_regular(pd, lambda) || !is_phiI_regular(pd, nu)) return false;
  const bool forward = coroot_pairing(lambda, beta) > 0;
  const Weight src = normalize_to_Lambda_I(pd, forward ? lambda : nu).mu;
  const Weight tgt = normalize_to_Lambda_I(pd, forward ? nu : lambda).mu;
  const JantzenRow row = jantzen_row(pd, src);
  auto it = row.find(tgt);
  return it != row.end() && it->second.c != 0;
}

namespace {

bool exception_row(const ParabolicData& pd, const Weight& lambda, const Root& beta) {
  const int m = pd.m;
  auto n = [&](int s, int a) { return count_in_segment(pd, lambda, s, a); };
  const bool typeD = pd.rs.family == Family::D;
  auto cond = [&](int s, int a) {
    if (s >= m || a <= 0) return false;
    if (typeD) return n(s, a) == 1 && n(m, a) == 1 && n(s, 0) == 1 && n(m, 0) == 1;
    return n(s, a) == 1 && n(s, 0) + n(m, a) == 1;
  };
  const int s = pd.segment_of(beta.i);
  const int li = lambda.at(beta.i);
  switch (beta.kind) {
    case RootKind::Ei:
    case RootKind::TwoEi:
      return !typeD && cond(s, std::abs(li));
    case RootKind::EiPlusEj: {
      const int t = pd.segment_of(beta.j);
      const int lj = lambda.at(beta.j);
      if (s == t && (li == 0) != (lj == 0)) return cond(s, std::abs(li + lj));
      if (t == m && li == lj && li != 0) return cond(s, std::abs(li));
      return false;
    }
    case RootKind::EiMinusEj: {
      const int t = pd.segment_of(beta.j);
      const int lj = lambda.at(beta.j);
      if (t == m && s < m && li == -lj && li != 0) return cond(s, std::abs(li));
      return false;
    }
  }
  return false;
}

}  // namespace

bool linked_criterion(const ParabolicData& pd, const SingularData& sd, const Weight& lambda, const Root& beta) {
  (void)sd;
  if (in_levi(pd, beta)) return false;
  const Weight nu = reflect(lambda, beta);
  if (nu == lambda || !is_phiI_regular(pd, lambda) || !is_phiI_regular(pd, nu)) return false;
  if (pd.rs.family == Family::A) return true;
  if (pd.nonstandard) return !exception_row(phi(pd), phi(lambda), phi(pd.rs, beta));
  return !exception_row(pd, lambda, beta);
}

}  // namespace oblocks
