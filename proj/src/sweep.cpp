#include "oblocks/sweep.hpp"

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <set>
#include <thread>

#include "oblocks/blocks.hpp"
#include "oblocks/decomposition.hpp"
#include "oblocks/partitions.hpp"
#include "oblocks/separability.hpp"

namespace oblocks {

namespace {

std::vector<int> from_mask(unsigned mask, int size) {
  std::vector<int> out;
  for (int k = 0; k < size; ++k)
    if (mask >> k & 1u) out.push_back(k + 1);
  return out;
}

bool power_of_two(int c, int& p) {
  if (c <= 0 || (c & (c - 1))) return false;
  p = 0;
  while ((1 << p) < c) ++p;
  return true;
}

}  // namespace

SystemReport check_system(const RootSystem& rs, const std::vector<int>& I, const std::vector<int>& J,
                          const SweepOptions& opt) {
  SystemReport rep;
  auto find = [&](const std::string& check, const std::string& detail) {
    rep.findings.push_back({check, rs.family, rs.rank, I, J, detail});
  };
  try {
    const ParabolicData pd = make_parabolic(rs, I);
    const ParabolicData pdJ = make_parabolic(rs, J);
    const Weight lb = canonical_dominant(rs, J);
    const SingularData sd = singular_set(rs, lb);
    const std::vector<Weight> coset = enumerate_coset(pd, lb);
    rep.nonempty = !coset.empty();
    rep.weights = static_cast<long long>(coset.size());

    const bool crit = nonempty_criterion(pd, pdJ);
    rep.exception_fires = nonempty_exception_fires(pd, pdJ);
    if (crit != rep.nonempty)
      find("a", "nonempty_criterion=" + std::string(crit ? "true" : "false") + " coset size " +
                    std::to_string(coset.size()));

    const Weight mb = canonical_dominant(rs, I);
    const std::vector<Weight> dual_coset = enumerate_coset(pdJ, mb);
    if (opt.duality && dual_coset.size() != coset.size())
      find("h", "coset sizes " + std::to_string(coset.size()) + " and " + std::to_string(dual_coset.size()));
    if (!rep.nonempty) return rep;

    const LinkageGraph g = linkage_graph(pd, lb);
    const BlockDecomposition bd = components(g);
    rep.oracle = bd.oracle_count;

    if (opt.linked) {
      const std::vector<Root> roots = positive_roots(rs);
      for (const Weight& w : coset)
        for (const Root& beta : roots) {
          ++rep.linked_tests;
          const bool a = is_linked(pd, w, beta), b = linked_criterion(pd, sd, w, beta);
          if (a != b)
            find("b", to_string(w) + " " + to_string(beta) + ": is_linked=" + (a ? "true" : "false") +
                          " linked_criterion=" + (b ? "true" : "false"));
        }
    }

    const Prediction pred = predicted_block_count(pd, sd, lb);
    const PartitionCount part = count_from_partitions(pd, pdJ);
    if (pred.count != rep.oracle || part.count != rep.oracle)
      find("c", "oracle=" + std::to_string(rep.oracle) + " separability=" + std::to_string(pred.count) +
                    " partitions=" + std::to_string(part.count));

    int p = 0;
    if (!power_of_two(rep.oracle, p) || p >= std::min(pd.m, sd.mbar))
      find("d", "count " + std::to_string(rep.oracle) + " with m=" + std::to_string(pd.m) +
                    " mbar=" + std::to_string(sd.mbar));

    if (opt.factorize) {
      const FactorNode node = factorize(pd, lb);
      const SplitCheck sc = verify_factorization(node, rep.oracle);
      if (!sc.ok) find("e", sc.detail);
    }

    if (rs.family == Family::A && rep.oracle != 1) find("f", "type A with " + std::to_string(rep.oracle) + " blocks");

    try {
      const int N = static_cast<int>(g.vertices.size());
      bool first = true;
      for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) {
          const bool a = two_block_membership(pd, sd, g.vertices[x], g.vertices[y]);
          if (first) rep.two_block = true, first = false;
          const bool b = bd.block_of[x] == bd.block_of[y];
          if (a != b) find("g", to_string(g.vertices[x]) + " " + to_string(g.vertices[y]));
        }
    } catch (const NotTwoBlockCase&) {
    }

    if (opt.duality && dual_coset.size() == coset.size()) {
      const LinkageGraph gd = linkage_graph(pdJ, mb);
      const BlockDecomposition bdd = components(gd);
      const int N = static_cast<int>(g.vertices.size());
      std::vector<int> image(N);
      std::set<int> hit;
      bool ok = true;
      for (int k = 0; k < N && ok; ++k) {
        const SignedPermutation x = coset_representative(rs, lb, g.vertices[k]);
        const Weight dual = apply(inverse(x), mb);
        image[k] = gd.index_of(dual);
        if (image[k] < 0 || !hit.insert(image[k]).second) {
          find("h", "inverse image " + to_string(dual) + " of " + to_string(g.vertices[k]) + " is not a new coset weight");
          ok = false;
        }
      }
      for (int x = 0; x < N && ok; ++x)
        for (int y = x + 1; y < N && ok; ++y)
          if ((bd.block_of[x] == bd.block_of[y]) != (bdd.block_of[image[x]] == bdd.block_of[image[y]])) {
            find("h", "blocks disagree for " + to_string(g.vertices[x]) + " and " + to_string(g.vertices[y]));
            ok = false;
          }
    }
  } catch (const std::exception& e) {
    find("exception", e.what());
  }
  return rep;
}

SweepSummary run_sweep(const SweepOptions& opt, const std::function<void(const Finding&)>& on_finding) {
  const auto start = std::chrono::steady_clock::now();
  struct Task {
    int rank;
    unsigned im, jm;
  };
  std::vector<Task> tasks;
  for (int n = std::max(opt.min_rank, 1); n <= opt.max_rank; ++n) {
    const int ns = RootSystem{opt.family, n}.num_simple();
    for (unsigned im = 0; im < (1u << ns); ++im)
      for (unsigned jm = 0; jm < (1u << ns); ++jm) tasks.push_back({n, im, jm});
  }
  std::vector<SystemReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      const RootSystem rs{opt.family, t.rank};
      const int ns = rs.num_simple();
      reports[k] = check_system(rs, from_mask(t.im, ns), from_mask(t.jm, ns), opt);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SweepSummary sum;
  sum.threads = threads;
  for (const SystemReport& r : reports) {
    ++sum.systems;
    sum.weights += r.weights;
    sum.linked_tests += r.linked_tests;
    if (r.nonempty) {
      ++sum.nonempty;
      ++sum.count_histogram[r.oracle];
    }
    sum.two_block_systems += r.two_block;
    sum.very_even_exceptions += r.exception_fires;
    for (const Finding& f : r.findings) {
      if (on_finding) on_finding(f);
      sum.findings.push_back(f);
    }
  }
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

std::string to_json_line(const Finding& f) {
  nlohmann::ordered_json j;
  j["check"] = f.check;
  j["family"] = std::string(1, family_letter(f.family));
  j["rank"] = f.rank;
  j["I"] = f.I;
  j["J"] = f.J;
  j["detail"] = f.detail;
  return j.dump();
}

}  // namespace oblocks
