#include "oblocks/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace oblocks {

int LinkageGraph::index_of(const Weight& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return -1;
  return static_cast<int>(it - vertices.begin());
}

LinkageGraph linkage_graph(const ParabolicData& pd, const Weight& lambda_bar) {
  LinkageGraph g;
  g.pd = pd;
  g.lambda_bar = lambda_bar;
  g.vertices = enumerate_coset(pd, lambda_bar);
  g.rows.reserve(g.vertices.size());
  for (const Weight& v : g.vertices) g.rows.push_back(jantzen_row(pd, v));
  std::map<std::pair<int, int>, LinkageEdge> edges;
  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
    for (const auto& [target, entry] : g.rows[u]) {
      const int v = g.index_of(target);
      if (v < 0 || v == u) continue;
      const auto key = std::minmax(u, v);
      LinkageEdge& e = edges[key];
      e.u = key.first;
      e.v = key.second;
      if (u == e.u) {
        e.c_uv = entry.c;
        e.w_uv = entry.witnesses;
      } else {
        e.c_vu = entry.c;
        e.w_vu = entry.witnesses;
      }
    }
  }
  for (auto& [key, e] : edges) {
    if (e.c_uv == 0 && e.c_vu == 0) continue;
    if ((e.c_uv == 0) != (e.c_vu == 0)) g.asymmetric = true;
    g.edges.push_back(std::move(e));
  }
  return g;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

BlockDecomposition components(const LinkageGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const LinkageEdge& e : g.edges) {
    int a = find(parent, e.u), b = find(parent, e.v);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  BlockDecomposition bd;
  bd.block_of.assign(n, -1);
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(parent, v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(bd.blocks.size());
      bd.blocks.emplace_back();
    }
    bd.blocks[slot[r]].push_back(v);
    bd.block_of[v] = slot[r];
  }
  bd.oracle_count = static_cast<int>(bd.blocks.size());
  return bd;
}

BlockDecomposition block_decomposition_oracle(const ParabolicData& pd, const Weight& lambda_bar) {
  return components(linkage_graph(pd, lambda_bar));
}

bool same_block(const ParabolicData& pd, const Weight& lambda_bar, const Weight& lambda, const Weight& mu) {
  const LinkageGraph g = linkage_graph(pd, lambda_bar);
  const int a = g.index_of(lambda), b = g.index_of(mu);
  if (a < 0 || b < 0) throw WeightNotInCoset("weight is not in the coset of " + to_string(lambda_bar));
  const BlockDecomposition bd = components(g);
  return bd.block_of[a] == bd.block_of[b];
}

}  // namespace oblocks
