#pragma once

#include <optional>
#include <vector>

#include "oblocks/jantzen.hpp"

namespace oblocks {

struct LinkageEdge {
  int u = 0;
  int v = 0;
  int c_uv = 0;  // c(lambda_u, lambda_v)
  int c_vu = 0;
  std::vector<Witness> w_uv;
  std::vector<Witness> w_vu;
};

struct LinkageGraph {
  ParabolicData pd;
  Weight lambda_bar;
  std::vector<Weight> vertices;
  std::vector<JantzenRow> rows;
  std::vector<LinkageEdge> edges;
  bool asymmetric = false;  // some edge has exactly one nonzero direction
  bool empty() const { return vertices.empty(); }
  int index_of(const Weight& w) const;  // -1 if absent
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // ordered by least vertex index
  std::vector<int> block_of;
  int oracle_count = 0;
  std::optional<int> predicted_count;
  bool agreement = true;
};

LinkageGraph linkage_graph(const ParabolicData& pd, const Weight& lambda_bar);
BlockDecomposition components(const LinkageGraph& g);
BlockDecomposition block_decomposition_oracle(const ParabolicData& pd, const Weight& lambda_bar);
bool same_block(const ParabolicData& pd, const Weight& lambda_bar, const Weight& lambda, const Weight& mu);

}  // namespace oblocks
