#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <json.hpp>
#include <sstream>

#include "oblocks/blocks.hpp"
#include "oblocks/decomposition.hpp"
#include "oblocks/partitions.hpp"
#include "oblocks/separability.hpp"
#include "oblocks/sweep.hpp"

using namespace oblocks;
using json = nlohmann::ordered_json;

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpecArgs {
  std::string family;
  int rank = 0;
  std::optional<std::string> exclude, include, weight, singular;
  bool nonstandard = false;
  bool json = false;
};

struct System {
  RootSystem rs;
  ParabolicData pd;
  ParabolicData pdJ;
  Weight lambda_bar;
  SingularData sd;
};

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad index '" + tok + "'");
    }
  }
  return out;
}

int parse_coordinate(const std::string& tok) {
  try {
    std::size_t used = 0;
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
      const int num = std::stoi(tok.substr(0, slash), &used);
      if (tok.substr(slash + 1) != "2" || used != slash) throw InputError("");
      return num;
    }
    const auto dot = tok.find('.');
    if (dot != std::string::npos) {
      const std::string frac = tok.substr(dot + 1);
      if (frac != "5" && frac != "0") throw InputError("");
      const std::string whole = tok.substr(0, dot);
      const int w = std::stoi(whole, &used);
      const bool neg = !whole.empty() && whole[0] == '-';
      return 2 * w + (frac == "5" ? (neg ? -1 : 1) : 0);
    }
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw InputError("");
    return 2 * v;
  } catch (const std::exception&) {
    throw InputError("bad coordinate '" + tok + "'");
  }
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.x2.push_back(parse_coordinate(tok));
  return w;
}

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string system_name(const RootSystem& rs) { return std::string(1, family_letter(rs.family)) + std::to_string(rs.rank); }

System build_system(const SpecArgs& a) {
  if (a.family.size() != 1) throw InputError("family must be one of A, B, C, D");
  System s;
  try {
    s.rs = RootSystem{family_from_letter(a.family[0]), a.rank};
  } catch (const std::exception&) {
    throw InputError("family must be one of A, B, C, D");
  }
  if (a.rank < 1) throw InputError("rank must be positive");
  if (a.exclude && a.include) throw InputError("give --exclude or --include, not both");
  if (a.weight.has_value() == a.singular.has_value()) throw InputError("give exactly one of --weight and --singular");
  std::vector<int> I;
  if (a.include) {
    I = parse_list(*a.include);
    for (int k : I)
      if (k < 1 || k > s.rs.num_simple()) throw InputError("simple root index " + std::to_string(k) + " out of range");
  } else {
    const std::vector<int> ex = parse_list(a.exclude.value_or(""));
    for (int k : ex)
      if (k < 1 || k > s.rs.num_simple()) throw InputError("simple root index " + std::to_string(k) + " out of range");
    for (int k = 1; k <= s.rs.num_simple(); ++k)
      if (std::find(ex.begin(), ex.end(), k) == ex.end()) I.push_back(k);
  }
  if (a.nonstandard) {
    if (s.rs.family != Family::D) throw InputError("--nonstandard applies to type D only");
    I = phi(s.rs, I);
  }
  s.pd = make_parabolic(s.rs, I);
  if (a.weight) {
    s.lambda_bar = parse_weight(*a.weight);
    if (s.lambda_bar.size() != a.rank)
      throw InputError("weight has " + std::to_string(s.lambda_bar.size()) + " coordinates, rank is " +
                       std::to_string(a.rank));
    check_weight(s.rs, s.lambda_bar);
    if (!is_dominant(s.rs, s.lambda_bar)) throw InputError(to_string(s.lambda_bar) + " is not dominant");
  } else {
    std::vector<int> J = parse_list(*a.singular);
    for (int k : J)
      if (k < 1 || k > s.rs.num_simple()) throw InputError("simple root index " + std::to_string(k) + " out of range");
    std::sort(J.begin(), J.end());
    s.lambda_bar = canonical_dominant(s.rs, J);
  }
  s.sd = singular_set(s.rs, s.lambda_bar);
  s.pdJ = make_parabolic(s.rs, s.sd.J);
  return s;
}

json coord(int x2) {
  if (x2 % 2 == 0) return x2 / 2;
  return x2 / 2.0;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (int x : w.x2) a.push_back(coord(x));
  return a;
}

json system_json(const System& s) {
  json j;
  j["family"] = std::string(1, family_letter(s.rs.family));
  j["rank"] = s.rs.rank;
  j["I"] = s.pd.I();
  j["excluded"] = s.pd.excluded;
  j["nonstandard_I"] = s.pd.nonstandard;
  j["lambda_bar"] = weight_json(s.lambda_bar);
  j["J"] = s.sd.J;
  j["nonstandard_J"] = s.sd.nonstandard;
  return j;
}

void print_header(const System& s) {
  std::cout << system_name(s.rs) << "  I=" << set_string(s.pd.I()) << "  J=" << set_string(s.sd.J)
            << "  lambda_bar=" << to_string(s.lambda_bar) << "\n";
}

std::string root_json_string(const Root& r) { return to_string(r); }

int cmd_enumerate(const System& s, bool as_json) {
  const std::vector<Weight> coset = enumerate_coset(s.pd, s.lambda_bar);
  if (as_json) {
    json j;
    j["system"] = system_json(s);
    j["coset"] = json::array();
    for (const Weight& w : coset) {
      json e;
      e["weight"] = weight_json(w);
      e["parity"] = parity(w);
      e["segments"] = segmented(s.pd, w);
      j["coset"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_header(s);
  std::cout << coset.size() << " weights\n";
  for (const Weight& w : coset) {
    std::cout << "\n" << segmented(s.pd, w) << "  P=" << parity(w) << "\n";
    std::cout << render_T_table(s.pd, s.sd, w);
  }
  return 0;
}

json witness_json(const std::vector<Witness>& ws) {
  json a = json::array();
  for (const Witness& w : ws) a.push_back({{"root", root_json_string(w.beta)}, {"sign", w.odd ? -1 : 1}});
  return a;
}

int cmd_jantzen(const System& s, bool as_json) {
  const LinkageGraph g = linkage_graph(s.pd, s.lambda_bar);
  if (as_json) {
    json j;
    j["system"] = system_json(s);
    j["vertices"] = json::array();
    for (const Weight& w : g.vertices) j["vertices"].push_back(weight_json(w));
    j["edges"] = json::array();
    for (const LinkageEdge& e : g.edges)
      j["edges"].push_back({{"u", e.u},
                            {"v", e.v},
                            {"c_uv", e.c_uv},
                            {"c_vu", e.c_vu},
                            {"witnesses_uv", witness_json(e.w_uv)},
                            {"witnesses_vu", witness_json(e.w_vu)}});
    j["asymmetric"] = g.asymmetric;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_header(s);
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    std::cout << "[" << u << "] " << to_string(g.vertices[u]) << "\n";
    for (const auto& [target, e] : jantzen_witnesses(s.pd, g.vertices[u])) {
      std::cout << "    -> [" << g.index_of(target) << "] " << to_string(target) << "  c=" << e.c << "  via";
      for (const Witness& w : e.witnesses) std::cout << " " << (w.odd ? "-" : "+") << to_string(w.beta);
      std::cout << "\n";
    }
  }
  return 0;
}

json pair_json(const SeparablePair& p) {
  return {{"S", p.S}, {"Sbar", p.Sbar}};
}

void tree_text(const FactorNode& n, const std::string& prefix, bool last, bool root) {
  std::cout << (root ? "" : prefix + (last ? "└─ " : "├─ ")) << system_name(n.rs) << " I=" << set_string(n.I)
            << " J=" << set_string(n.J) << " lambda_bar=" << to_string(n.lambda_bar) << " blocks=" << n.leaf_count;
  if (n.translated) std::cout << " (translated)";
  if (n.pair) std::cout << " split (" << set_string(n.pair->S) << "," << set_string(n.pair->Sbar) << ")";
  std::cout << "\n";
  const std::string child = root ? "" : prefix + (last ? "   " : "│  ");
  for (std::size_t c = 0; c < n.components.size(); ++c) {
    const bool lastc = c + 1 == n.components.size();
    std::cout << child << (lastc ? "└─ " : "├─ ") << "component " << c + 1 << "\n";
    const std::string inner = child + (lastc ? "   " : "│  ");
    tree_text(n.components[c][0], inner, false, false);
    tree_text(n.components[c][1], inner, true, false);
  }
}

json tree_json(const FactorNode& n) {
  json j;
  j["family"] = std::string(1, family_letter(n.rs.family));
  j["rank"] = n.rs.rank;
  j["I"] = n.I;
  j["J"] = n.J;
  j["lambda_bar"] = weight_json(n.lambda_bar);
  j["translated"] = n.translated;
  j["coset_size"] = n.coset_size;
  j["blocks"] = n.leaf_count;
  j["pair"] = n.pair ? pair_json(*n.pair) : json(nullptr);
  j["components"] = json::array();
  if (n.split) {
    const FactorSystem& fs = *n.split;
    j["phi_applied"] = fs.phi_applied;
    j["H"] = {fs.H[0], fs.H[1]};
    for (std::size_t c = 0; c < n.components.size(); ++c) {
      json comp;
      comp["children"] = {tree_json(n.components[c][0]), tree_json(n.components[c][1])};
      comp["weight_map"] = json::array();
      for (int k : fs.components[c].members)
        comp["weight_map"].push_back({{"weight", weight_json(fs.coset[k])},
                                      {"images", {weight_json(fs.images[k][0]), weight_json(fs.images[k][1])}}});
      j["components"].push_back(comp);
    }
  }
  return j;
}

int cmd_blocks(const System& s, bool as_json) {
  const std::vector<Weight> coset = enumerate_coset(s.pd, s.lambda_bar);
  const bool crit = nonempty_criterion(s.pd, s.pdJ);
  if (coset.empty()) {
    const bool agree = !crit;
    if (as_json) {
      json j;
      j["system"] = system_json(s);
      j["oracle"] = 0;
      j["separability"] = {{"count", 0}, {"theorem", nullptr}};
      j["partitions"] = {{"count", crit ? json(nullptr) : json(0)}, {"theorem", nullptr}};
      j["factorize"] = {{"count", 0}, {"factors", 0}};
      j["agree"] = agree;
      j["blocks"] = json::array();
      std::cout << j.dump(2) << "\n";
    } else {
      print_header(s);
      std::cout << "empty coset; nonempty_criterion=" << (crit ? "true" : "false") << "\n";
      std::cout << "oracle=0 separability=0 partitions=" << (crit ? "?" : "0") << (agree ? " AGREE" : " DISAGREE")
                << "\n";
    }
    return agree ? 0 : 1;
  }
  const BlockDecomposition bd = block_decomposition_oracle(s.pd, s.lambda_bar);
  const LinkageGraph g = linkage_graph(s.pd, s.lambda_bar);
  const Prediction pred = predicted_block_count(s.pd, s.sd, s.lambda_bar);
  const PartitionCount part = count_from_partitions(s.pd, s.pdJ);
  const FactorNode tree = factorize(s.pd, s.lambda_bar);
  const bool agree = bd.oracle_count == pred.count && bd.oracle_count == part.count && tree.leaf_count == bd.oracle_count;
  if (as_json) {
    json j;
    j["system"] = system_json(s);
    j["oracle"] = bd.oracle_count;
    j["separability"] = {{"count", pred.count}, {"theorem", pred.theorem}};
    j["partitions"] = {{"count", part.count}, {"theorem", part.theorem}};
    j["factorize"] = {{"count", tree.leaf_count}, {"factors", factor_count(tree)}};
    j["agree"] = agree;
    j["blocks"] = json::array();
    for (const auto& b : bd.blocks) {
      json a = json::array();
      for (int v : b) a.push_back(weight_json(g.vertices[v]));
      j["blocks"].push_back(a);
    }
    std::cout << j.dump(2) << "\n";
    return agree ? 0 : 1;
  }
  print_header(s);
  std::cout << "oracle=" << bd.oracle_count << " separability=" << pred.count << " partitions=" << part.count
            << (agree ? " AGREE" : " DISAGREE") << "\n";
  std::cout << "separability: " << pred.theorem << "\n";
  std::cout << "partitions: " << part.theorem << "\n";
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    std::cout << "block " << b + 1 << ":";
    for (int v : bd.blocks[b]) std::cout << " " << segmented(s.pd, g.vertices[v]);
    std::cout << "\n";
  }
  std::cout << "factor tree (k=" << factor_count(tree) << " factors, " << tree.leaf_count << " blocks):\n";
  tree_text(tree, "", true, true);
  return agree ? 0 : 1;
}

int cmd_separable(const System& s, bool as_json) {
  const PairClasses pc = all_separable_pairs(s.pd, s.sd, s.lambda_bar);
  const Prediction pred = predicted_block_count(s.pd, s.sd, s.lambda_bar);
  if (as_json) {
    json j;
    j["system"] = system_json(s);
    j["pairs"] = json::array();
    for (std::size_t i = 0; i < pc.pairs.size(); ++i) {
      const SeparablePair& p = pc.pairs[i];
      j["pairs"].push_back({{"S", p.S},
                            {"Sbar", p.Sbar},
                            {"strong", p.strong},
                            {"trivial", p.trivial},
                            {"odd", p.odd},
                            {"class", pc.class_of[i]}});
    }
    j["classes"] = pc.num_classes();
    j["nontrivial_classes"] = pc.nontrivial_classes();
    j["predicted"] = pred.count;
    j["theorem"] = pred.theorem;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_header(s);
  std::cout << pc.pairs.size() << " separable pairs, " << pc.num_classes() << " classes ("
            << pc.nontrivial_classes() << " nontrivial)\n";
  for (std::size_t i = 0; i < pc.pairs.size(); ++i) {
    const SeparablePair& p = pc.pairs[i];
    std::cout << "  (" << set_string(p.S) << ", " << set_string(p.Sbar) << ")  " << (p.strong ? "strong" : "weak")
              << (p.trivial ? " trivial" : "") << (p.odd ? " odd" : "") << "  class " << pc.class_of[i] << "\n";
  }
  std::cout << "predicted=" << pred.count << "  (" << pred.theorem << ")\n";
  return 0;
}

int cmd_partitions(const System& s, bool as_json) {
  const OrbitLabel oi = pi_I(s.pd), oj = pi_I(s.pdJ), ri = richardson(s.pd), rj = richardson(s.pdJ);
  const bool crit = nonempty_criterion(s.pd, s.pdJ);
  const bool exc = nonempty_exception_fires(s.pd, s.pdJ);
  CompatibleClasses cc;
  std::optional<PartitionCount> count;
  if (crit) {
    cc = compatible_pairs(s.pd, s.pdJ);
    count = count_from_partitions(s.pd, s.pdJ);
  }
  if (as_json) {
    auto lab = [](const OrbitLabel& o) {
      json j;
      j["partition"] = o.pi.parts;
      j["notation"] = exponent_string(o.pi);
      j["label"] = o.label == VeryEvenLabel::None ? json(nullptr) : json(o.label == VeryEvenLabel::I ? "I" : "II");
      return j;
    };
    json j;
    j["system"] = system_json(s);
    j["pi_I"] = lab(oi);
    j["pi_J"] = lab(oj);
    j["R_I"] = lab(ri);
    j["R_J"] = lab(rj);
    j["nonempty"] = crit;
    j["exception_fires"] = exc;
    j["C"] = json::array();
    for (std::size_t i = 0; i < cc.pairs.size(); ++i)
      j["C"].push_back({{"k", cc.pairs[i].k}, {"l", cc.pairs[i].l}, {"trivial", cc.pairs[i].trivial},
                        {"class", cc.class_of[i]}});
    j["count"] = count ? json(count->count) : json(nullptr);
    j["theorem"] = count ? json(count->theorem) : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_header(s);
  std::cout << "pi_I = " << to_string(oi) << "\n";
  std::cout << "pi_J = " << to_string(oj) << "\n";
  std::cout << "R_I  = " << to_string(ri) << "\n";
  std::cout << "R_J  = " << to_string(rj) << "\n";
  std::cout << "nonempty=" << (crit ? "true" : "false") << (exc ? " (very even exception)" : "") << "\n";
  if (count) {
    std::cout << "C = {";
    for (std::size_t i = 0; i < cc.pairs.size(); ++i)
      std::cout << (i ? ", " : "") << "(" << cc.pairs[i].k << "," << cc.pairs[i].l << ")";
    std::cout << "}  classes=" << cc.num_classes() << " nontrivial=" << cc.nontrivial_classes() << "\n";
    std::cout << "count=" << count->count << "  (" << count->theorem << ")\n";
  }
  return 0;
}

int cmd_factorize(const System& s, bool as_json) {
  const FactorNode tree = factorize(s.pd, s.lambda_bar);
  if (as_json) {
    json j;
    j["system"] = system_json(s);
    j["factors"] = factor_count(tree);
    j["tree"] = tree_json(tree);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_header(s);
  std::cout << "k=" << factor_count(tree) << " factors, " << tree.leaf_count << " blocks\n";
  tree_text(tree, "", true, true);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks of parabolic category O for classical root systems"};
  app.require_subcommand(1);
  SpecArgs spec;
  std::string command;
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("family", spec.family, "A, B, C or D")->required();
    sub->add_option("rank", spec.rank, "rank n (for A, the gl_n coordinate count)")->required();
    sub->add_option("--exclude", spec.exclude, "simple roots outside I, comma separated");
    sub->add_option("--include", spec.include, "simple roots in I, comma separated");
    sub->add_option("--weight", spec.weight, "dominant weight, comma separated (half-integers as 1/2 or 0.5)");
    sub->add_option("--singular", spec.singular, "J, comma separated; uses the canonical dominant weight");
    sub->add_flag("--nonstandard", spec.nonstandard, "apply phi to I (type D)");
    sub->add_flag("--json", spec.json, "JSON output");
    sub->callback([&command, sub] { command = sub->get_name(); });
  };
  for (const char* name : {"enumerate", "jantzen", "blocks", "separable", "partitions", "factorize"})
    add_spec(app.add_subcommand(name, std::string(name) + " for one system"));

  auto* sw = app.add_subcommand("sweep", "check every I and realizable J up to a rank");
  std::string sw_family, sw_out;
  int sw_rank = 0, sw_threads = 0;
  bool sw_force = false;
  sw->add_option("family", sw_family, "A, B, C or D")->required();
  sw->add_option("max_rank", sw_rank, "largest rank")->required();
  sw->add_option("--threads", sw_threads, "worker threads (default: all cores)");
  sw->add_option("--out", sw_out, "write findings as JSON lines to this file");
  sw->add_flag("--force", sw_force, "allow max_rank above 7");
  sw->callback([&command] { command = "sweep"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (command == "sweep") {
      if (sw_family.size() != 1 || std::string("ABCD").find(sw_family[0]) == std::string::npos)
        throw InputError("family must be one of A, B, C, D");
      if (sw_rank < 1) throw InputError("max_rank must be positive");
      if (sw_rank > 7 && !sw_force) throw InputError("max_rank above 7 needs --force");
      SweepOptions opt;
      opt.family = family_from_letter(sw_family[0]);
      opt.max_rank = sw_rank;
      opt.threads = sw_threads;
      std::ofstream out;
      if (!sw_out.empty()) {
        out.open(sw_out);
        if (!out) throw InputError("cannot write " + sw_out);
      }
      const SweepSummary sum = run_sweep(opt, [&](const Finding& f) {
        (sw_out.empty() ? std::cout : out) << to_json_line(f) << "\n";
      });
      std::cout << "sweep " << sw_family << " 1.." << sw_rank << ": systems=" << sum.systems
                << " nonempty=" << sum.nonempty << " weights=" << sum.weights << " linked_tests=" << sum.linked_tests
                << " two_block=" << sum.two_block_systems << " very_even_exceptions=" << sum.very_even_exceptions
                << "\n";
      std::cout << "block counts:";
      for (const auto& [c, k] : sum.count_histogram) std::cout << " " << c << ":" << k;
      std::cout << "\n" << sum.findings.size() << " disagreements\n";
      std::cerr << "threads=" << sum.threads << " seconds=" << sum.seconds << "\n";
      return sum.findings.empty() ? 0 : 1;
    }
    const System s = build_system(spec);
    if (command == "enumerate") return cmd_enumerate(s, spec.json);
    if (command == "jantzen") return cmd_jantzen(s, spec.json);
    if (command == "blocks") return cmd_blocks(s, spec.json);
    if (command == "separable") return cmd_separable(s, spec.json);
    if (command == "partitions") return cmd_partitions(s, spec.json);
    if (command == "factorize") return cmd_factorize(s, spec.json);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateSingularity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
