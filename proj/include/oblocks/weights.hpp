#pragma once

#include <map>
#include <vector>

#include "oblocks/rootsys.hpp"

namespace oblocks {

struct InvalidWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateSingularity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnrealizableJ : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotRegular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_weight(const RootSystem& rs, const Weight& lambda);

bool is_phiI_regular(const ParabolicData& pd, const Weight& lambda);
bool in_Lambda_I_plus(const ParabolicData& pd, const Weight& lambda);
bool is_dominant(const RootSystem& rs, const Weight& lambda);

struct DominantRep {
  Weight bar;
  SignedPermutation w;  // apply(w, lambda) == bar
};
DominantRep dominant_rep(const RootSystem& rs, const Weight& lambda);

struct SingularData {
  RootSystem rs;
  Weight lambda_bar;
  std::vector<int> J;
  ParabolicData blocks;  // segment structure of J, phi-mapped when nonstandard
  bool nonstandard = false;
  int mbar = 1;
  std::vector<int> a;  // doubled a_1 > ... > a_mbar

  int nbar(int t) const { return blocks.n_s(t); }
  int a_t(int t) const { return a[t - 1]; }
};

// the shortest x with apply(x, lambda_bar) == lambda (x lies in W^J)
SignedPermutation coset_representative(const RootSystem& rs, const Weight& lambda_bar, const Weight& lambda);

SingularData singular_set(const RootSystem& rs, const Weight& lambda_bar);
Weight canonical_dominant(const RootSystem& rs, const std::vector<int>& J);

std::vector<Weight> enumerate_coset(const ParabolicData& pd, const Weight& lambda);

using CountTable = std::vector<std::vector<int>>;  // [s-1][t-1]
CountTable count_table(const ParabolicData& pd, const SingularData& sd, const Weight& lambda);
// n_s^lambda(a) for a doubled value a >= 0 (type A: signed value)
int count_in_segment(const ParabolicData& pd, const Weight& lambda, int s, int a);
int max_count(const ParabolicData& pd, int s, int a);

int parity(const Weight& lambda);

Weight phi(const Weight& lambda);
std::vector<int> phi(const RootSystem& rs, const std::vector<int>& I);
ParabolicData phi(const ParabolicData& pd);
Root phi(const RootSystem& rs, const Root& beta);

struct Normalized {
  Weight mu;
  int length = 0;
  bool odd() const { return length % 2 != 0; }
};
Normalized normalize_to_Lambda_I(const ParabolicData& pd, const Weight& lambda);

}  // namespace oblocks
