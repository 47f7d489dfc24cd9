#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oblocks/rootsys.hpp"

namespace oblocks {

struct SweepOptions {
  Family family = Family::A;
  int min_rank = 1;
  int max_rank = 4;
  int threads = 0;  // 0: hardware concurrency
  bool linked = true;
  bool factorize = true;
  bool duality = true;
};

struct Finding {
  std::string check;  // "a".."h" or "exception"
  Family family = Family::A;
  int rank = 0;
  std::vector<int> I;
  std::vector<int> J;
  std::string detail;
};

struct SweepSummary {
  int systems = 0;
  int nonempty = 0;
  long long weights = 0;
  long long linked_tests = 0;
  int two_block_systems = 0;
  int very_even_exceptions = 0;
  std::map<int, int> count_histogram;
  std::vector<Finding> findings;  // in task order
  double seconds = 0;
  int threads = 1;
};

struct SystemReport {
  bool nonempty = false;
  int oracle = 0;
  long long weights = 0;
  long long linked_tests = 0;
  bool two_block = false;
  bool exception_fires = false;
  std::vector<Finding> findings;
};

SystemReport check_system(const RootSystem& rs, const std::vector<int>& I, const std::vector<int>& J,
                          const SweepOptions& opt);

// findings are reported through on_finding in deterministic task order as well
SweepSummary run_sweep(const SweepOptions& opt, const std::function<void(const Finding&)>& on_finding = {});

std::string to_json_line(const Finding& f);

}  // namespace oblocks
