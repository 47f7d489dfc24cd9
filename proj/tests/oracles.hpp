#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "oblocks/weights.hpp"

namespace oracle {

using namespace oblocks;

inline std::vector<Root> simple_roots(const RootSystem& rs) {
  std::vector<Root> out;
  for (int k = 1; k <= rs.num_simple(); ++k) out.push_back(simple_root(rs, k));
  return out;
}

// closure of lambda under the given reflections
inline std::set<Weight> orbit(const std::vector<Root>& gens, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight w = todo.front();
    todo.pop_front();
    for (const Root& r : gens) {
      Weight v = reflect(w, r);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen;
}

inline std::vector<Weight> coset(const ParabolicData& pd, const Weight& lambda) {
  std::vector<Weight> out;
  for (const Weight& w : orbit(simple_roots(pd.rs), lambda))
    if (in_Lambda_I_plus(pd, w)) out.push_back(w);
  return out;
}

inline std::vector<SignedPermutation> group(int n, const std::vector<Root>& gens) {
  auto key = [](const SignedPermutation& w) { return std::make_pair(w.perm, w.signs); };
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<SignedPermutation> out{SignedPermutation::identity(n)};
  seen.insert(key(out[0]));
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const Root& r : gens) {
      SignedPermutation w = compose(SignedPermutation::reflection(n, r), out[k]);
      if (seen.insert(key(w)).second) out.push_back(w);
    }
  return out;
}

// the unique w in W_I with w lambda in Lambda_I^+, and its length over Phi_I^+
inline std::pair<Weight, int> normalize(const ParabolicData& pd, const Weight& lambda) {
  for (const SignedPermutation& w : group(pd.rs.rank, pd.simple_in_I)) {
    Weight mu = apply(w, lambda);
    if (in_Lambda_I_plus(pd, mu)) return {mu, length_parity(pd, w).length};
  }
  return {lambda, -1};
}

}  // namespace oracle
