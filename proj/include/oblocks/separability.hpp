#pragma once

#include <string>
#include <vector>

#include "oblocks/weights.hpp"

namespace oblocks {

struct EmptyCoset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct TooFewSimples : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotTwoBlockCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SeparablePair {
  std::vector<int> S;     // ascending, subset of 1..m
  std::vector<int> Sbar;  // ascending, subset of 1..mbar
  bool strong = true;
  bool trivial = false;
  bool odd = false;  // type D: m in S
  bool weak() const { return !strong; }
  bool operator==(const SeparablePair& o) const { return S == o.S && Sbar == o.Sbar; }
};

struct PairClasses {
  std::vector<SeparablePair> pairs;  // sorted by (S, Sbar)
  std::vector<int> class_of;
  std::vector<bool> class_trivial;
  int num_classes() const { return static_cast<int>(class_trivial.size()); }
  int trivial_classes() const;
  int nontrivial_classes() const { return num_classes() - trivial_classes(); }
  bool has_strong() const;
  bool has_odd() const;
  int index_of(const std::vector<int>& S, const std::vector<int>& Sbar) const;
};

bool is_separable_pair(const ParabolicData& pd, const SingularData& sd, const Weight& lambda,
                       const std::vector<int>& S, const std::vector<int>& Sbar);

// verify_all re-evaluates every coset weight and throws TheoremViolation on a mismatch
PairClasses all_separable_pairs(const ParabolicData& pd, const SingularData& sd, const Weight& lambda_bar,
                                bool verify_all = false);
// same, from an already chosen coset weight
PairClasses separable_pairs_at(const ParabolicData& pd, const SingularData& sd, const Weight& lambda);

enum class PairOrder { Less, Greater, Equal, Incomparable };
// Incomparable only when S or Sbar agree; otherwise throws TheoremViolation
PairOrder pair_partial_order(const SeparablePair& p1, const SeparablePair& p2);

struct Prediction {
  int count = 1;
  std::string theorem;
};
Prediction predicted_block_count(const ParabolicData& pd, const SingularData& sd, const Weight& lambda_bar);
Prediction predict_from_pairs(const ParabolicData& pd, const SingularData& sd, const PairClasses& pc);

// the two-block shape of the pseudo-indecomposable corollary
bool two_block_shape(const ParabolicData& pd, const SingularData& sd);

bool is_pseudo_indecomposable(const ParabolicData& pd, const SingularData& sd);
bool two_block_membership(const ParabolicData& pd, const SingularData& sd, const Weight& lambda, const Weight& mu);

}  // namespace oblocks
