#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblocks {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family family_from_letter(char c);

struct RootSystem {
  Family family = Family::A;
  int rank = 0;

  // number of simple roots: n-1 for A, n otherwise (0 for D_1)
  int num_simple() const;
  bool operator==(const RootSystem&) const = default;
};

enum class RootKind : std::uint8_t { EiMinusEj, EiPlusEj, Ei, TwoEi };

// Coordinates are 1-based. j is 0 for Ei and TwoEi.
struct Root {
  RootKind kind = RootKind::EiMinusEj;
  int i = 0;
  int j = 0;

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};

std::string to_string(const Root& r);

// Coordinates are stored doubled so half-integers are exact.
struct Weight {
  std::vector<int> x2;

  Weight() = default;
  explicit Weight(std::vector<int> doubled) : x2(std::move(doubled)) {}
  static Weight from_ints(const std::vector<int>& v);

  int size() const { return static_cast<int>(x2.size()); }
  // 1-based doubled coordinate
  int at(int i) const { return x2[i - 1]; }
  int& at(int i) { return x2[i - 1]; }
  bool all_integral() const;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

std::string coord_string(int doubled);
std::string to_string(const Weight& w);

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<Root> positive_roots(const RootSystem& rs);
Root simple_root(const RootSystem& rs, int k);

// <lambda, beta^vee>, exact; throws if not integral
int coroot_pairing(const Weight& lambda, const Root& beta);
Weight reflect(const Weight& lambda, const Root& beta);

// Indices of the simple roots in the support of beta.
std::vector<int> support(const RootSystem& rs, const Root& beta);

// The coefficient vector of beta (undoubled).
std::vector<int> root_vector(int n, const Root& beta);

struct ParabolicData {
  RootSystem rs;
  std::vector<bool> in_I;   // index 1..num_simple, slot 0 unused
  std::vector<int> excluded;  // Delta \ I, ascending
  bool nonstandard = false;

  // segments after mapping a nonstandard D parabolic through phi
  int m = 1;
  std::vector<int> q;      // q[0]=0, ..., q[m]=n
  std::vector<int> sizes;  // sizes[s-1] = n_s
  std::vector<Root> levi_roots;  // positive roots of Phi_I
  std::vector<Root> simple_in_I;

  int n_s(int s) const { return sizes[s - 1]; }
  int first(int s) const { return q[s - 1] + 1; }
  int last(int s) const { return q[s]; }
  int segment_of(int i) const;
  bool contains_simple(int k) const { return in_I[k]; }
  std::vector<int> I() const;
};

ParabolicData make_parabolic(const RootSystem& rs, const std::vector<int>& I);
ParabolicData make_parabolic_excluding(const RootSystem& rs, const std::vector<int>& excluded);

bool in_levi(const ParabolicData& pd, const Root& beta);
std::vector<Root> levi_positive_roots(const ParabolicData& pd);

// (w lambda)_{perm[i]} = signs[i] * lambda_i, 0-based storage
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int n);
  static SignedPermutation make(Family f, std::vector<int> perm, std::vector<int> signs);
  static SignedPermutation reflection(int n, const Root& beta);
  int size() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPermutation&) const = default;
};

struct InvalidSigns : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);
Weight apply(const SignedPermutation& w, const Weight& lambda);
std::vector<int> apply_to_vector(const SignedPermutation& w, const std::vector<int>& v);

struct Length {
  int length = 0;
  bool odd() const { return length % 2 != 0; }
};

Length length_parity(const RootSystem& rs, const SignedPermutation& w);
Length length_parity(const ParabolicData& pd, const SignedPermutation& w);

}  // namespace oblocks
