#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oblocks/blocks.hpp"
#include "oblocks/separability.hpp"

namespace oblocks {

struct PairNotSeparable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PairNotStronglySeparable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Weight restrict(const Weight& lambda, const std::vector<int>& index_set);

struct SplitNormal {
  Weight nu;
  SignedPermutation w;  // apply(w, lambda) == nu, w a product of W_{I_s}, s in S
};
SplitNormal normalize_for_split(const ParabolicData& pd, const SingularData& sd, const SeparablePair& pair,
                                const Weight& lambda);

// A child system on an ordered set of parent coordinates.
struct ChildSystem {
  RootSystem rs;
  std::vector<int> coords;  // parent coordinates, increasing
  std::vector<int> I;
  Weight lambda_bar;      // dominant weight of the child orbit
  Weight working_bar;     // lambda_bar, or its translate when lambda_bar is a degenerate D weight
  std::vector<int> J;
  bool translated = false;

  ParabolicData pd() const { return make_parabolic(rs, I); }
  // child weight in the coordinates used for all further computation
  Weight working(const Weight& child_weight) const;
};

struct Component {
  std::array<ChildSystem, 2> children;
  std::vector<int> members;  // indices into FactorSystem::coset
};

struct FactorSystem {
  ParabolicData parent;  // phi-mapped when the input was nonstandard D
  Weight lambda_bar;     // phi-mapped likewise
  bool phi_applied = false;
  SeparablePair pair;
  bool odd = false;  // D: shared coordinate n
  int p = 0;
  int h = 0;
  int g = 0;
  std::array<std::vector<int>, 2> H;
  std::vector<Weight> coset;  // input coordinates
  std::vector<Weight> nu;
  std::vector<std::array<Weight, 2>> images;  // working child weights
  std::vector<int> component_of;
  std::vector<Component> components;
};

FactorSystem split(const ParabolicData& pd, const Weight& lambda_bar, const SeparablePair& pair);

// minimal strongly separable pair, lexicographic tie-break
std::optional<SeparablePair> choose_split_pair(const PairClasses& pc);

struct FactorNode {
  RootSystem rs;
  std::vector<int> I;
  Weight lambda_bar;
  std::vector<int> J;
  bool translated = false;
  int coset_size = 0;
  int leaf_count = 0;  // blocks predicted for this node (leaf rule, or sum of products)
  std::optional<SeparablePair> pair;
  std::shared_ptr<const FactorSystem> split;
  std::vector<std::array<FactorNode, 2>> components;

  bool leaf() const { return !pair.has_value(); }
  int num_leaves() const;
};

FactorNode factorize(const ParabolicData& pd, const Weight& lambda_bar);
std::vector<const FactorNode*> leaves(const FactorNode& root);
// nonempty leaves along the first component of every split
int factor_count(const FactorNode& root);
// the leaves reached by lambda with its image in each, in tree order
std::vector<std::pair<const FactorNode*, Weight>> leaf_images(const FactorNode& root, const Weight& lambda);

struct SplitCheck {
  bool ok = true;
  std::string detail;
};
// bijection onto the product of child cosets and block pullback against the oracle
SplitCheck verify_split(const FactorSystem& fs);
SplitCheck verify_factorization(const FactorNode& root, int oracle_count);

std::string render_T_table(const ParabolicData& pd, const SingularData& sd, const Weight& lambda);
// segment bars: (3,2,1|2,1|2|1)
std::string segmented(const ParabolicData& pd, const Weight& lambda);

}  // namespace oblocks
