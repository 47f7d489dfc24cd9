#include "oblocks/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace oblocks {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// values carried by the first block of each segment in S
std::vector<int> abar_values(const ParabolicData& pd, const SingularData& sd, const SeparablePair& pair) {
  std::vector<int> out;
  for (int t : pair.Sbar) {
    const int a = sd.a_t(t);
    if (pd.rs.family == Family::A || a != 0) out.push_back(a);
  }
  return out;
}

struct Layout {
  int p = 0;
  int h = 0;
  int g = 0;
  bool odd = false;
  std::array<std::vector<int>, 2> H;
};

Layout layout(const ParabolicData& pd, const SingularData& sd, const SeparablePair& pair) {
  Layout L;
  const Family f = pd.rs.family;
  const int m = pd.m, n = pd.rs.rank;
  L.p = static_cast<int>(abar_values(pd, sd, pair).size());
  const bool mS = contains(pair.S, m);
  L.g = static_cast<int>(pair.S.size()) - (mS ? 1 : 0);
  auto add = [](std::vector<int>& v, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) v.push_back(i);
  };
  if (f == Family::A) {
    for (int s = 1; s <= m; ++s) {
      if (contains(pair.S, s))
        add(L.H[0], pd.q[s - 1] + L.p + 1, pd.q[s]);
      else
        add(L.H[1], pd.q[s - 1] + 1, pd.q[s]);
    }
    return L;
  }
  L.h = pd.q[m - 1] + L.p;
  L.odd = f == Family::D && mS;
  const bool even_d = f == Family::D && !mS;
  for (int s = 1; s < m; ++s) {
    if (contains(pair.S, s))
      add(L.H[0], pd.q[s - 1] + 2 * L.p + 1, pd.q[s]);
    else
      add(L.H[1], pd.q[s - 1] + 1, pd.q[s]);
  }
  if (even_d) {
    add(L.H[1], pd.q[m - 1] + 1, n);
  } else {
    add(L.H[0], L.h + 1, n);
    add(L.H[1], pd.q[m - 1] + 1, std::min(L.h, n));
    if (L.odd && L.h < n) L.H[1].push_back(n);
  }
  for (auto& v : L.H) std::sort(v.begin(), v.end());
  return L;
}

Root child_simple_root(const RootSystem& crs, const std::vector<int>& coords, int k) {
  const Root r = simple_root(crs, k);
  Root out = r;
  out.i = coords[r.i - 1];
  if (r.j > 0) out.j = coords[r.j - 1];
  return out;
}

std::vector<int> levi_zero_set(const RootSystem& rs, const Weight& w) {
  std::vector<int> J;
  for (int k = 1; k <= rs.num_simple(); ++k)
    if (coroot_pairing(w, simple_root(rs, k)) == 0) J.push_back(k);
  return J;
}

ChildSystem make_child(const ParabolicData& parent, const std::vector<int>& coords, const Weight& lambda_bar) {
  ChildSystem c;
  c.rs = RootSystem{parent.rs.family, static_cast<int>(coords.size())};
  c.coords = coords;
  for (int k = 1; k <= c.rs.num_simple(); ++k)
    if (in_levi(parent, child_simple_root(c.rs, coords, k))) c.I.push_back(k);
  c.lambda_bar = lambda_bar;
  c.working_bar = lambda_bar;
  try {
    c.J = singular_set(c.rs, lambda_bar).J;
  } catch (const DegenerateSingularity&) {
    c.J = levi_zero_set(c.rs, lambda_bar);
    c.working_bar = canonical_dominant(c.rs, c.J);
    c.translated = true;
  }
  return c;
}

}  // namespace

Weight restrict(const Weight& lambda, const std::vector<int>& index_set) {
  Weight out;
  for (int i : index_set) {
    if (i < 1 || i > lambda.size()) throw std::out_of_range("restrict: coordinate " + std::to_string(i));
    out.x2.push_back(lambda.at(i));
  }
  return out;
}

Weight ChildSystem::working(const Weight& w) const {
  if (!translated) return w;
  // the zero entry of a degenerate D weight goes to the smallest nonzero value
  // of the translate, with the sign that keeps the number of negatives even
  Weight out(std::vector<int>(w.size(), 0));
  int negatives = 0, zero_at = -1;
  for (int i = 1; i <= w.size(); ++i) {
    const int v = std::abs(w.at(i));
    if (v == 0) {
      zero_at = i;
      continue;
    }
    int j = 1;
    while (std::abs(lambda_bar.at(j)) != v) ++j;
    out.at(i) = (w.at(i) < 0 ? -1 : 1) * std::abs(working_bar.at(j));
    negatives += w.at(i) < 0;
  }
  if (zero_at > 0) {
    int j = 1;
    while (lambda_bar.at(j) != 0) ++j;
    out.at(zero_at) = (negatives % 2 ? -1 : 1) * std::abs(working_bar.at(j));
  }
  return out;
}

SplitNormal normalize_for_split(const ParabolicData& pd, const SingularData& sd, const SeparablePair& pair,
                                const Weight& lambda) {
  const Family f = pd.rs.family;
  const int m = pd.m;
  const std::vector<int> abar = abar_values(pd, sd, pair);
  auto in_abar = [&](int v) { return contains(abar, f == Family::A ? v : std::abs(v)); };
  SplitNormal out;
  out.w = SignedPermutation::identity(lambda.size());
  out.nu = lambda;
  for (int s : pair.S) {
    std::vector<int> front, rest;
    for (int i = pd.first(s); i <= pd.last(s); ++i) (in_abar(lambda.at(i)) ? front : rest).push_back(i);
    auto by_value = [&](int x, int y) { return lambda.at(x) > lambda.at(y); };
    std::sort(front.begin(), front.end(), by_value);
    std::sort(rest.begin(), rest.end(), by_value);
    if (f != Family::A && s < m && static_cast<int>(front.size()) != 2 * static_cast<int>(abar.size()))
      throw PairNotSeparable("segment " + std::to_string(s) + " does not carry both signs of every value");
    front.insert(front.end(), rest.begin(), rest.end());
    for (int k = 0; k < static_cast<int>(front.size()); ++k) {
      out.w.perm[front[k] - 1] = pd.first(s) + k - 1;
      out.nu.at(pd.first(s) + k) = lambda.at(front[k]);
    }
  }
  return out;
}

FactorSystem split(const ParabolicData& pd_in, const Weight& lambda_bar_in, const SeparablePair& pair) {
  FactorSystem fs;
  fs.phi_applied = pd_in.nonstandard;
  fs.parent = fs.phi_applied ? phi(pd_in) : pd_in;
  fs.lambda_bar = fs.phi_applied ? phi(lambda_bar_in) : lambda_bar_in;
  const ParabolicData& pd = fs.parent;
  const SingularData sd = singular_set(pd.rs, fs.lambda_bar);
  const std::vector<Weight> coset = enumerate_coset(pd, fs.lambda_bar);
  if (coset.empty()) throw EmptyCoset("coset of " + to_string(lambda_bar_in) + " is empty");
  if (!is_separable_pair(pd, sd, coset.front(), pair.S, pair.Sbar))
    throw PairNotSeparable("(" + set_string(pair.S) + ", " + set_string(pair.Sbar) + ") is not separable");
  const PairClasses pc = separable_pairs_at(pd, sd, coset.front());
  const int idx = pc.index_of(pair.S, pair.Sbar);
  if (idx < 0 || !pc.pairs[idx].strong)
    throw PairNotStronglySeparable("(" + set_string(pair.S) + ", " + set_string(pair.Sbar) +
                                   ") is not strongly separable");
  fs.pair = pc.pairs[idx];

  const Layout L = layout(pd, sd, fs.pair);
  fs.p = L.p;
  fs.h = L.h;
  fs.g = L.g;
  fs.odd = L.odd;
  fs.H = L.H;

  std::map<std::pair<Weight, Weight>, int> comp_index;
  std::array<RootSystem, 2> crs;
  for (int i = 0; i < 2; ++i) crs[i] = RootSystem{pd.rs.family, static_cast<int>(fs.H[i].size())};
  std::vector<std::array<Weight, 2>> raw;
  for (const Weight& mu : coset) {
    fs.coset.push_back(fs.phi_applied ? phi(mu) : mu);
    SplitNormal sn = normalize_for_split(pd, sd, fs.pair, mu);
    fs.nu.push_back(sn.nu);
    std::array<Weight, 2> im{restrict(sn.nu, fs.H[0]), restrict(sn.nu, fs.H[1])};
    const std::pair<Weight, Weight> key{dominant_rep(crs[0], im[0]).bar, dominant_rep(crs[1], im[1]).bar};
    auto it = comp_index.find(key);
    if (it == comp_index.end()) {
      it = comp_index.emplace(key, static_cast<int>(fs.components.size())).first;
      Component c;
      c.children = {make_child(pd, fs.H[0], key.first), make_child(pd, fs.H[1], key.second)};
      fs.components.push_back(std::move(c));
    }
    fs.component_of.push_back(it->second);
    fs.components[it->second].members.push_back(static_cast<int>(fs.coset.size()) - 1);
    raw.push_back(im);
  }
  if (pd.rs.family == Family::D && !fs.odd && fs.components.size() == 2) {
    const int target = ((parity(fs.lambda_bar) - fs.p * fs.g) % 2 + 2) % 2;
    auto miss = [&](const Component& c) {
      const int p1 = parity(c.children[0].lambda_bar), p2 = parity(c.children[1].lambda_bar);
      return 2 * (p2 != target) + ((p1 + p2 + fs.p * fs.g) % 2 != parity(fs.lambda_bar));
    };
    if (miss(fs.components[1]) < miss(fs.components[0])) {
      std::swap(fs.components[0], fs.components[1]);
      for (int& c : fs.component_of) c = 1 - c;
    }
  }
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const Component& c = fs.components[fs.component_of[k]];
    fs.images.push_back({c.children[0].working(raw[k][0]), c.children[1].working(raw[k][1])});
  }
  return fs;
}

std::optional<SeparablePair> choose_split_pair(const PairClasses& pc) {
  std::optional<SeparablePair> best;
  for (const SeparablePair& p : pc.pairs) {
    if (!p.strong) continue;
    bool minimal = true;
    for (const SeparablePair& q : pc.pairs) {
      if (!q.strong || q == p) continue;
      const bool sub = std::includes(p.S.begin(), p.S.end(), q.S.begin(), q.S.end()) &&
                       std::includes(q.Sbar.begin(), q.Sbar.end(), p.Sbar.begin(), p.Sbar.end());
      if (sub) {
        minimal = false;
        break;
      }
    }
    if (minimal) return p;  // pairs are sorted, so the first minimal one wins the tie-break
  }
  return best;
}

int FactorNode::num_leaves() const {
  if (leaf()) return 1;
  int k = 0;
  for (const auto& c : components) k += c[0].num_leaves() + c[1].num_leaves();
  return k;
}

namespace {

int leaf_rule(const ParabolicData& pd, const Weight& lambda_bar, int coset_size) {
  if (coset_size < 2) return coset_size;
  const SingularData sd = singular_set(pd.rs, lambda_bar);
  return predicted_block_count(pd, sd, lambda_bar).count;
}

FactorNode build(const ParabolicData& pd, const Weight& lambda_bar, const std::vector<int>& J, bool translated) {
  FactorNode node;
  node.rs = pd.rs;
  node.I = pd.I();
  node.lambda_bar = lambda_bar;
  node.J = J;
  node.translated = translated;
  const std::vector<Weight> coset = enumerate_coset(pd, lambda_bar);
  node.coset_size = static_cast<int>(coset.size());
  if (node.coset_size >= 2 && pd.rs.rank >= 2) {
    const ParabolicData spd = pd.nonstandard ? phi(pd) : pd;
    const Weight sbar = pd.nonstandard ? phi(lambda_bar) : lambda_bar;
    const SingularData sd = singular_set(spd.rs, sbar);
    node.pair = choose_split_pair(separable_pairs_at(spd, sd, enumerate_coset(spd, sbar).front()));
  }
  if (!node.pair) {
    node.leaf_count = leaf_rule(pd, lambda_bar, node.coset_size);
    return node;
  }
  auto fs = std::make_shared<FactorSystem>(split(pd, lambda_bar, *node.pair));
  node.split = fs;
  for (const Component& c : fs->components) {
    std::array<FactorNode, 2> kids;
    for (int i = 0; i < 2; ++i) {
      const ChildSystem& ch = c.children[i];
      kids[i] = build(ch.pd(), ch.working_bar, ch.J, ch.translated);
      kids[i].lambda_bar = ch.lambda_bar;
    }
    node.leaf_count += kids[0].leaf_count * kids[1].leaf_count;
    node.components.push_back(std::move(kids));
  }
  return node;
}

}  // namespace

FactorNode factorize(const ParabolicData& pd, const Weight& lambda_bar) {
  const SingularData sd = singular_set(pd.rs, lambda_bar);
  return build(pd, lambda_bar, sd.J, false);
}

std::vector<const FactorNode*> leaves(const FactorNode& root) {
  std::vector<const FactorNode*> out;
  std::function<void(const FactorNode&)> walk = [&](const FactorNode& n) {
    if (n.leaf()) {
      out.push_back(&n);
      return;
    }
    for (const auto& c : n.components) {
      walk(c[0]);
      walk(c[1]);
    }
  };
  walk(root);
  return out;
}

int factor_count(const FactorNode& root) {
  if (root.leaf()) return root.rs.rank > 0 ? 1 : 0;
  return factor_count(root.components.front()[0]) + factor_count(root.components.front()[1]);
}

std::vector<std::pair<const FactorNode*, Weight>> leaf_images(const FactorNode& root, const Weight& lambda) {
  std::vector<std::pair<const FactorNode*, Weight>> out;
  std::function<void(const FactorNode&, const Weight&)> walk = [&](const FactorNode& n, const Weight& w) {
    if (n.leaf()) {
      out.emplace_back(&n, w);
      return;
    }
    const FactorSystem& fs = *n.split;
    const auto it = std::find(fs.coset.begin(), fs.coset.end(), w);
    if (it == fs.coset.end()) throw WeightNotInCoset(to_string(w) + " is not in the coset");
    const int k = static_cast<int>(it - fs.coset.begin());
    const auto& kids = n.components[fs.component_of[k]];
    walk(kids[0], fs.images[k][0]);
    walk(kids[1], fs.images[k][1]);
  };
  walk(root, lambda);
  return out;
}

SplitCheck verify_split(const FactorSystem& fs) {
  SplitCheck r;
  auto fail = [&](const std::string& why) {
    r.ok = false;
    r.detail = why;
    return r;
  };
  const int N = static_cast<int>(fs.coset.size());
  std::array<std::vector<BlockDecomposition>, 2> child_blocks;
  std::array<std::vector<std::vector<Weight>>, 2> child_cosets;
  std::size_t total = 0;
  for (const Component& c : fs.components) {
    std::size_t prod = 1;
    for (int i = 0; i < 2; ++i) {
      const ChildSystem& ch = c.children[i];
      const ParabolicData cpd = ch.pd();
      child_cosets[i].push_back(enumerate_coset(cpd, ch.working_bar));
      child_blocks[i].push_back(block_decomposition_oracle(cpd, ch.working_bar));
      if (ch.translated && enumerate_coset(cpd, ch.lambda_bar).size() != child_cosets[i].back().size())
        return fail("translated child coset has a different size");
      prod *= child_cosets[i].back().size();
    }
    if (prod != c.members.size()) return fail("component size differs from the product of child cosets");
    total += prod;
  }
  if (total != static_cast<std::size_t>(N)) return fail("components do not cover the coset");
  std::set<std::pair<int, std::pair<Weight, Weight>>> seen;
  std::vector<std::array<int, 2>> pos(N);
  for (int k = 0; k < N; ++k) {
    const int c = fs.component_of[k];
    for (int i = 0; i < 2; ++i) {
      const auto& cs = child_cosets[i][c];
      auto it = std::lower_bound(cs.begin(), cs.end(), fs.images[k][i]);
      if (it == cs.end() || *it != fs.images[k][i])
        return fail("image " + to_string(fs.images[k][i]) + " is not in the child coset");
      pos[k][i] = static_cast<int>(it - cs.begin());
    }
    if (!seen.insert({c, {fs.images[k][0], fs.images[k][1]}}).second) return fail("map is not injective");
  }
  const ParabolicData& pd = fs.parent;
  if (pd.rs.family == Family::D && !fs.odd) {
    const std::size_t want = fs.pair.trivial ? 1 : 2;
    if (fs.components.size() != want)
      return fail(std::to_string(fs.components.size()) + " components for a " +
                  (fs.pair.trivial ? "trivial" : "nontrivial") + " even pair");
    if (fs.pair.trivial && child_cosets[0][0].size() != 1 && child_cosets[1][0].size() != 1)
      return fail("trivial even pair with no singleton child coset");
    if (want == 2)
      for (int i = 0; i < 2; ++i) {
        const ChildSystem& a = fs.components[0].children[i];
        const ChildSystem& b = fs.components[1].children[i];
        if (a.rs.rank > 0 && dominant_rep(a.rs, phi(a.lambda_bar)).bar != b.lambda_bar)
          return fail("second component is not the phi twist of the first");
      }
    for (int k = 0; k < N; ++k) {
      const int lhs = parity(fs.nu[k]);
      const int rhs = parity(restrict(fs.nu[k], fs.H[0])) + parity(restrict(fs.nu[k], fs.H[1])) + fs.p * fs.g;
      if ((lhs - rhs) % 2 != 0) return fail("parity bookkeeping fails for " + to_string(fs.coset[k]));
    }
  } else if (fs.components.size() != 1) {
    return fail(std::to_string(fs.components.size()) + " components outside the even D case");
  }
  const BlockDecomposition parent = block_decomposition_oracle(pd, fs.lambda_bar);
  const LinkageGraph g = linkage_graph(pd, fs.lambda_bar);
  std::vector<int> vertex(N);
  for (int k = 0; k < N; ++k) vertex[k] = g.index_of(fs.phi_applied ? phi(fs.coset[k]) : fs.coset[k]);
  for (int x = 0; x < N; ++x)
    for (int y = x + 1; y < N; ++y) {
      const bool same = parent.block_of[vertex[x]] == parent.block_of[vertex[y]];
      const int c = fs.component_of[x];
      bool pulled = c == fs.component_of[y];
      for (int i = 0; i < 2 && pulled; ++i)
        pulled = child_blocks[i][c].block_of[pos[x][i]] == child_blocks[i][c].block_of[pos[y][i]];
      if (same != pulled)
        return fail("block pullback fails for " + to_string(fs.coset[x]) + " and " + to_string(fs.coset[y]));
    }
  return r;
}

SplitCheck verify_factorization(const FactorNode& root, int oracle_count) {
  SplitCheck r;
  std::function<bool(const FactorNode&)> walk = [&](const FactorNode& n) {
    if (n.leaf()) {
      const ParabolicData pd = make_parabolic(n.rs, n.I);
      const Weight w = n.translated ? canonical_dominant(n.rs, n.J) : n.lambda_bar;
      const int oc = n.coset_size == 0 ? 0 : block_decomposition_oracle(pd, w).oracle_count;
      if (oc != n.leaf_count) {
        r.ok = false;
        r.detail = "leaf " + std::string(1, family_letter(n.rs.family)) + std::to_string(n.rs.rank) + " " +
                   to_string(n.lambda_bar) + ": rule " + std::to_string(n.leaf_count) + ", oracle " +
                   std::to_string(oc);
        return false;
      }
      return true;
    }
    const SplitCheck s = verify_split(*n.split);
    if (!s.ok) {
      r = s;
      return false;
    }
    for (const auto& c : n.components)
      if (!walk(c[0]) || !walk(c[1])) return false;
    return true;
  };
  if (!walk(root)) return r;
  if (root.leaf_count != oracle_count) {
    r.ok = false;
    r.detail = "product of leaves " + std::to_string(root.leaf_count) + " != oracle " + std::to_string(oracle_count);
  }
  return r;
}

std::string segmented(const ParabolicData& pd, const Weight& lambda) {
  std::string s = "(";
  for (int seg = 1; seg <= pd.m; ++seg) {
    if (seg > 1) s += "|";
    for (int i = pd.first(seg); i <= pd.last(seg); ++i)
      s += (i > pd.first(seg) ? "," : "") + coord_string(lambda.at(i));
  }
  return s + ")";
}

std::string render_T_table(const ParabolicData& pd_in, const SingularData& sd, const Weight& lambda_in) {
  const ParabolicData pd = pd_in.nonstandard ? phi(pd_in) : pd_in;
  const Weight lambda = pd_in.nonstandard ? phi(lambda_in) : lambda_in;
  const bool typeA = pd.rs.family == Family::A;
  const int cols = pd.m > 1 && pd.n_s(pd.m) == 0 ? pd.m - 1 : pd.m;
  const int rows = sd.mbar > 1 && sd.nbar(sd.mbar) == 0 ? sd.mbar - 1 : sd.mbar;
  std::vector<std::vector<std::string>> cell(rows, std::vector<std::string>(cols));
  for (int t = 1; t <= rows; ++t)
    for (int s = 1; s <= cols; ++s) {
      const int a = sd.a_t(t);
      bool pos = false, neg = false;
      for (int i = pd.first(s); i <= pd.last(s); ++i) {
        if (typeA ? lambda.at(i) == a : std::abs(lambda.at(i)) == a) {
          (lambda.at(i) < 0 ? neg : pos) = true;
        }
      }
      const std::string v = coord_string(a);
      if (pos && neg)
        cell[t - 1][s - 1] = "±" + v;
      else if (neg)
        cell[t - 1][s - 1] = "-" + v;
      else if (pos)
        cell[t - 1][s - 1] = v;
    }
  auto width = [](const std::string& s) {
    int w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  std::vector<int> wd(cols, 1);
  for (const auto& r : cell)
    for (int s = 0; s < cols; ++s) wd[s] = std::max(wd[s], width(r[s]));
  auto rule = [&](const char* l, const char* mid, const char* r) {
    std::string out = l;
    for (int s = 0; s < cols; ++s) {
      for (int k = 0; k < wd[s] + 2; ++k) out += "─";
      out += s + 1 < cols ? mid : r;
    }
    return out + "\n";
  };
  std::ostringstream os;
  os << rule("┌", "┬", "┐");
  for (int t = 0; t < rows; ++t) {
    os << "│";
    for (int s = 0; s < cols; ++s)
      os << " " << cell[t][s] << std::string(wd[s] - width(cell[t][s]), ' ') << " │";
    os << "\n";
    os << (t + 1 < rows ? rule("├", "┼", "┤") : rule("└", "┴", "┘"));
  }
  return os.str();
}

}  // namespace oblocks
