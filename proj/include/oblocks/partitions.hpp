#pragma once

#include <string>
#include <vector>

#include "oblocks/weights.hpp"

namespace oblocks {

struct UnequalN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);  // sorts and drops zeros
  int N() const;
  int size() const { return static_cast<int>(parts.size()); }
  // 1-based part, 0 past the end
  int at(int i) const { return i >= 1 && i <= size() ? parts[i - 1] : 0; }
  int prefix(int k) const;
  int multiplicity(int v) const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

Partition dual(const Partition& pi);
bool dominance_leq(const Partition& pi, const Partition& eta);
// B and D: even parts with even multiplicity; C: odd parts with even multiplicity
bool admissible(const Partition& pi, Family f);
bool very_even(const Partition& pi);
Partition collapse(const Partition& pi, Family f);
std::vector<Partition> all_partitions(int N);
// 4²2²1
std::string exponent_string(const Partition& pi);

enum class VeryEvenLabel { None, I, II };

struct OrbitLabel {
  Partition pi;
  VeryEvenLabel label = VeryEvenLabel::None;
};
std::string to_string(const OrbitLabel& o);

OrbitLabel pi_I(const ParabolicData& pd);
OrbitLabel richardson(const ParabolicData& pd);

// dominance test with the very even exception clause
bool nonempty_criterion(const ParabolicData& pd_I, const ParabolicData& pd_J);
// true when the very even exception clause is what makes the answer false
bool nonempty_exception_fires(const ParabolicData& pd_I, const ParabolicData& pd_J);

bool compatible_k(int k, const ParabolicData& pd_I, const ParabolicData& pd_J);

struct CompatiblePair {
  int k = 0;
  int l = 0;
  bool trivial = false;
  bool odd() const { return k % 2 != 0; }
  bool operator==(const CompatiblePair& o) const { return k == o.k && l == o.l; }
};

// Printed follows the type D clauses verbatim. Corrected (type D only) compares
// prefix sums at odd k with the trailing part 1 added on the I side, and uses the
// images (2,2mbar-2), (2m-2,2) of the trivial separable pairs as anchors.
enum class Transcription { Printed, Corrected };

struct CompatibleClasses {
  std::vector<CompatiblePair> pairs;  // sorted by (k, l)
  std::vector<int> class_of;
  std::vector<bool> class_trivial;
  int num_classes() const { return static_cast<int>(class_trivial.size()); }
  int nontrivial_classes() const;
  bool has_odd() const;
};

CompatibleClasses compatible_pairs(const ParabolicData& pd_I, const ParabolicData& pd_J,
                                   Transcription rule = Transcription::Corrected);

struct PartitionCount {
  int count = 1;
  std::string theorem;
};
PartitionCount count_from_partitions(const ParabolicData& pd_I, const ParabolicData& pd_J,
                                     Transcription rule = Transcription::Corrected);

}  // namespace oblocks
