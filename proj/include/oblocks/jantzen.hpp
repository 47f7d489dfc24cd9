#pragma once

#include <map>
#include <vector>

#include "oblocks/weights.hpp"

namespace oblocks {

struct WeightNotInCoset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Witness {
  Root beta;
  bool odd = false;
};

struct JantzenEntry {
  Weight source;
  Weight target;
  int c = 0;
  std::vector<Witness> witnesses;
};

using JantzenRow = std::map<Weight, JantzenEntry>;

std::vector<Root> psi_plus(const ParabolicData& pd, const Weight& lambda);
// every normalized target of Psi_lambda^+, including cancelled ones
JantzenRow jantzen_witnesses(const ParabolicData& pd, const Weight& lambda);
// targets with c != 0 only
JantzenRow jantzen_row(const ParabolicData& pd, const Weight& lambda);
JantzenEntry jantzen_coefficient(const ParabolicData& pd, const Weight& lambda, const Weight& mu);

// beta links lambda and s_beta lambda, decided from Jantzen coefficients
bool is_linked(const ParabolicData& pd, const Weight& lambda, const Root& beta);
// same question, decided by the exception table on segment counts
bool linked_criterion(const ParabolicData& pd, const SingularData& sd, const Weight& lambda, const Root& beta);

}  // namespace oblocks
