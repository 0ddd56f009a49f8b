// vtcrystal: crystal graphs, invariant suites and global bases from a Cartan
// datum file.  Exit codes: 0 ok, 1 a check failed, 2 invalid input,
// 3 internal invariant violated, 4 global solver did not converge.

#include "vtcrystal/vtcrystal.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

using namespace vtc;

namespace {

constexpr int kCrystalDepthCap = 10;
constexpr int kCheckDepthCap = 6;
constexpr int kGlobalDepthCap = 6;

const std::vector<std::string> kSuites = {"serre", "prop42", "tensor-rule", "ortho",  "star",
                                          "lemma75", "lemma56", "prop35",  "global", "t1"};

void log(const std::string& s) { std::cerr << s << '\n'; }

/// Writes through a temporary so that failed runs leave no file behind.
void write_artifact(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  const std::string tmp = path + ".part";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ValidationError({"cannot write " + path});
    out << text;
    if (!out) {
      std::remove(tmp.c_str());
      throw ValidationError({"cannot write " + path});
    }
  }
  std::filesystem::rename(tmp, path);
}

std::shared_ptr<HWModule> module_of(const CartanDatum& d, const std::vector<int>& hw, int depth) {
  return std::make_shared<HWModule>(d, hw, depth);
}

class BinfCache {
 public:
  explicit BinfCache(const CartanDatum& d) : d_(d) {}
  const Crystal& get(int depth) {
    auto it = cache_.find(depth);
    if (it == cache_.end()) {
      auto U = std::make_shared<HalfAlgebra>(d_, depth);
      it = cache_.emplace(depth, build_crystal(U, depth)).first;
    }
    return it->second;
  }

 private:
  const CartanDatum& d_;
  std::map<int, Crystal> cache_;
};

// ---- crystal

struct CrystalArgs {
  std::string datum, hw, format = "json", output;
  bool binf = false;
  int depth = -1;
};

int cmd_crystal(const CrystalArgs& a) {
  const CartanDatum d = load_datum(a.datum);
  std::optional<Crystal> C;
  if (a.binf) {
    const int depth = a.depth >= 0 ? a.depth : 4;
    C = build_crystal(std::make_shared<HalfAlgebra>(d, depth), depth);
  } else {
    if (a.hw.empty()) throw ValidationError({"crystal: give --hw or --binf"});
    C = build_crystal(module_of(d, parse_weight(a.hw, d.rank()), a.depth));
  }
  const CrystalGraph& g = C->graph();
  std::string text;
  if (a.format == "dot") text = export_dot(d, g);
  else if (a.format == "json") text = export_json(d, g);
  else text = export_tsv(d, g);
  write_artifact(a.output, text);
  log("nodes: " + std::to_string(g.size()) + ", edges: " + std::to_string(g.edge_count()));
  return 0;
}

// ---- check

struct CheckArgs {
  std::string datum, hw, hw2;
  std::vector<std::string> suites;
  int depth = -1;
  unsigned seed = 1;
  int pairs = 100;
};

int cmd_check(const CheckArgs& a) {
  const CartanDatum d = load_datum(a.datum);
  std::optional<std::vector<int>> hw, hw2;
  if (!a.hw.empty()) hw = parse_weight(a.hw, d.rank());
  if (!a.hw2.empty()) hw2 = parse_weight(a.hw2, d.rank());
  std::vector<std::string> suites = a.suites;
  if (suites.empty()) {
    suites = {"serre", "prop42", "star", "global"};
    if (d.rank() <= 2) suites.push_back("t1");
    if (hw) suites.insert(suites.end(), {"ortho", "lemma75", "prop35"});
    if (hw && hw2) suites.push_back("tensor-rule");
  }
  auto need_hw = [&](const std::string& s) -> const std::vector<int>& {
    if (!hw) throw ValidationError({"suite " + s + " needs --hw"});
    return *hw;
  };
  auto depth_or = [&](int def) { return a.depth >= 0 ? a.depth : def; };
  BinfCache binf(d);
  bool all_ok = true;
  for (const auto& s : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    if (s == "serre") {
      r = serre_suite(d, depth_or(4));
    } else if (s == "prop42") {
      r = prop42_suite(d, depth_or(3), a.seed, a.pairs);
    } else if (s == "tensor-rule") {
      if (!hw2) throw ValidationError({"suite tensor-rule needs --hw and --hw2"});
      auto M = module_of(d, need_hw(s), -1), N = module_of(d, *hw2, -1);
      r = tensor_rule_check(build_crystal(M), build_crystal(N), TensorModule(M, N));
    } else if (s == "ortho") {
      r = hw ? ortho_check(build_crystal(module_of(d, *hw, -1))) : ortho_check(binf.get(depth_or(4)));
    } else if (s == "star") {
      r = star_check(binf.get(depth_or(4)));
    } else if (s == "lemma75") {
      r = lemma75_check(*module_of(d, need_hw(s), -1));
    } else if (s == "lemma56") {
      r = lemma56_check(d, need_hw(s), depth_or(3));
    } else if (s == "prop35") {
      r = hw ? string_count_check(build_crystal(module_of(d, *hw, -1))) : string_count_check(binf.get(depth_or(4)));
    } else if (s == "global") {
      std::optional<Crystal> V;
      if (hw) V = build_crystal(module_of(d, *hw, -1));
      r = global_suite(binf.get(depth_or(3)), depth_or(3), V ? &*V : nullptr);
    } else if (s == "t1") {
      const Crystal& B = binf.get(depth_or(3));
      auto O = one_param_model(d);
      r.name = "t1";
      for (int h = 0; h <= depth_or(3); ++h)
        for (const auto& n : contents_of_height(d.rank(), h))
          if (B.has_grade(n)) r.merge(t1_compare(B, global_grade(B, n), O));
    }
    r.name = s;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << s << ": " << (r.ok ? "PASS" : "FAIL") << " (" << r.checked << " checked";
    if (!r.ok) std::cout << ", " << r.failed << " failed";
    std::cout << ")\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    log(s + ": " + std::to_string(secs) + " s");
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}

// ---- global

struct GlobalArgs {
  std::string datum, hw, format = "tsv", output;
  int depth = -1;  // 3 for U^-, the whole module for V(lambda)
  int degree_bound = -1;
  bool t1 = false;
  bool slice_only = false;
};

int cmd_global(const GlobalArgs& a) {
  const CartanDatum d = load_datum(a.datum);
  std::optional<Crystal> C;
  int depth = a.depth;
  if (!a.hw.empty()) {
    if (a.t1) throw ValidationError({"--t1-compare applies to U^- only"});
    C = build_crystal(module_of(d, parse_weight(a.hw, d.rank()), a.depth));
    depth = C->graph().depth;
  } else {
    if (depth < 0) depth = 3;
    C = build_crystal(std::make_shared<HalfAlgebra>(d, depth), depth);
  }
  std::optional<oracle::OneParamHalf> O;
  if (a.t1) O = one_param_model(d);

  std::vector<GlobalGrade> grades;
  std::map<size_t, bool> matched;
  int status = 0;
  try {
    for (int h = 0; h <= depth; ++h)
      for (const auto& n : contents_of_height(d.rank(), h)) {
        if (!C->has_grade(n)) continue;
        GlobalGrade g = global_grade(*C, n, {a.degree_bound, true, !a.slice_only});
        for (const auto& e : g.basis)
          if (!e.integral) throw InvariantViolation("G(b" + std::to_string(e.node) + ") is not integral");
        if (O) t1_compare(*C, g, *O, &matched);
        grades.push_back(std::move(g));
      }
  } catch (const NonConvergence& e) {
    log(std::string("error: ") + e.what());
    status = 4;
  }

  size_t elements = 0, bad = 0;
  std::string text;
  if (a.format == "json") {
    Json out = Json::array();
    for (const auto& g : grades) {
      Json j = global_to_json(d, g);
      if (O)
        for (size_t k = 0; k < g.basis.size(); ++k) j["basis"][k]["t1"] = matched.at(g.basis[k].node);
      out.push_back(j);
    }
    text = out.dump(2) + "\n";
  } else {
    text = std::string("grade\tnode\tG") + (O ? "\tt1" : "") + "\n";
    for (const auto& g : grades)
      for (const auto& e : g.basis) {
        std::string grade;
        for (int x : g.grade) grade += (grade.empty() ? "" : ",") + std::to_string(x);
        text += grade + "\t" + std::to_string(e.node) + "\t" + format_expansion(d, g, e);
        if (O) text += matched.at(e.node) ? "\tmatch" : "\tmismatch";
        text += "\n";
      }
  }
  for (const auto& g : grades) {
    elements += g.basis.size();
    for (const auto& e : g.basis)
      if (O && !matched.at(e.node)) ++bad;
  }
  write_artifact(a.output, text);
  log("grades: " + std::to_string(grades.size()) + ", elements: " + std::to_string(elements));
  if (O) log(bad == 0 ? "t1: every element matches the one-parameter canonical basis"
                      : "t1: " + std::to_string(bad) + " elements do not match");
  if (status) return status;
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal and global bases of two-parameter quantum algebras"};
  app.require_subcommand(1);

  CrystalArgs ca;
  auto* cr = app.add_subcommand("crystal", "Build B(lambda) or B(infinity) and export its graph");
  cr->add_option("--datum", ca.datum, "Cartan datum JSON")->required();
  auto* cr_hw = cr->add_option("--hw", ca.hw, "highest weight, e.g. 1,0");
  auto* cr_binf = cr->add_flag("--binf", ca.binf, "B(infinity) instead of B(lambda)");
  cr_hw->excludes(cr_binf);
  cr->add_option("--depth", ca.depth, "height window")->check(CLI::Range(0, kCrystalDepthCap));
  cr->add_option("--format", ca.format)->check(CLI::IsMember({"dot", "json", "tsv"}));
  cr->add_option("-o,--output", ca.output, "output file (default stdout)");

  CheckArgs ka;
  auto* ck = app.add_subcommand("check", "Run invariant suites");
  ck->add_option("--datum", ka.datum, "Cartan datum JSON")->required();
  ck->add_option("--suite", ka.suites, "suites (comma separated)")->delimiter(',')->check(CLI::IsMember(kSuites));
  ck->add_option("--hw", ka.hw, "highest weight");
  ck->add_option("--hw2", ka.hw2, "second highest weight (tensor-rule)");
  ck->add_option("--depth", ka.depth, "height bound")->check(CLI::Range(0, kCheckDepthCap));
  ck->add_option("--seed", ka.seed, "seed for randomized pairs");
  ck->add_option("--pairs", ka.pairs, "randomized pairs for prop42")->check(CLI::Range(1, 100000));

  GlobalArgs ga;
  auto* gl = app.add_subcommand("global", "Global crystal basis tables");
  gl->add_option("--datum", ga.datum, "Cartan datum JSON")->required();
  gl->add_option("--hw", ga.hw, "G_lambda in V(lambda) instead of U^-");
  gl->add_option("--depth", ga.depth, "largest height")->check(CLI::Range(0, kGlobalDepthCap));
  gl->add_option("--degree-bound", ga.degree_bound, "v-degree bound (default 4 h^2)")->check(CLI::Range(0, 1000));
  gl->add_option("--format", ga.format)->check(CLI::IsMember({"tsv", "json"}));
  gl->add_flag("--slice-only", ga.slice_only, "solve over the seeded monomial slice only");
  gl->add_flag("--t1-compare", ga.t1, "compare with the one-parameter canonical basis at t = 1");
  gl->add_option("-o,--output", ga.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cr) return cmd_crystal(ca);
    if (*ck) return cmd_check(ka);
    return cmd_global(ga);
  } catch (const ValidationError& e) {
    log(std::string("invalid input: ") + e.what());
    return 2;
  } catch (const DepthExceeded& e) {
    log(std::string("invalid input: ") + e.what());
    return 2;
  } catch (const oracle::OracleUnavailable& e) {
    log(std::string("invalid input: ") + e.what());
    return 2;
  } catch (const InvariantViolation& e) {
    log(std::string("invariant violation: ") + e.what());
    return 3;
  } catch (const NonConvergence& e) {
    log(std::string("no convergence: ") + e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    log(std::string("invalid input: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    log(std::string("internal error: ") + e.what());
    return 3;
  }
}
