// hlmult: multiplicities H_ω(q) of generic tensor products of GL_n(F_q)
// characters, with the comet-shaped quiver and a GL₂ brute-force check.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>

#include "hlmult/error.hpp"
#include "hlmult/gl2_oracle.hpp"
#include "hlmult/report.hpp"
#include "hlmult/selftest.hpp"
#include "hlmult/types.hpp"

namespace {

constexpr int kExitError = 2;

int cmd_compute(const std::string& text, bool json) {
  const hlm::MultiType mt = hlm::parse_multitype(text);
  const auto r = hlm::compute_report(mt);
  if (json) {
    std::cout << hlm::to_json(r).dump(2) << "\n";
  } else {
    std::cout << hlm::to_text(r);
  }
  if (!r.root_correspondence) std::cerr << "warning: H and the root class disagree for " << r.input << "\n";
  return 0;
}

int cmd_oracle(const std::string& text, int q, bool json) {
  const hlm::MultiType mt = hlm::parse_multitype(text);
  const auto r = hlm::oracle_vs_formula(mt, q);
  if (json) {
    nlohmann::json j = {{"schema", 1},
                        {"input", r.mt.to_string()},
                        {"q", r.q},
                        {"formula", r.formula.get_str()},
                        {"oracle", r.oracle.get_str()},
                        {"match", r.match},
                        {"tuple", r.tuple}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input:   " << r.mt.to_string() << "\n"
              << "q:       " << r.q << "\n"
              << "tuple:   " << r.tuple << "\n"
              << "formula: " << r.formula << "\n"
              << "oracle:  " << r.oracle << "\n"
              << (r.match ? "match" : "MISMATCH") << "\n";
  }
  return r.match ? 0 : 1;
}

int cmd_selftest(const std::string& depth, bool json) {
  const auto d = depth == "full" ? hlm::Depth::full : hlm::Depth::quick;
  auto print = [json](const hlm::CheckResult& r) {
    if (json) return;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)";
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << std::endl;
  };
  const auto results = hlm::run_selftest(d, print);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    std::cout << nlohmann::json{{"schema", 1}, {"depth", depth}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_sweep(int n, int k, int g, bool json) {
  std::vector<hlm::ComputeReport> rows;
  for (const auto& mt : hlm::enumerate_multitypes(n, k, g)) rows.push_back(hlm::compute_report(mt));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.input < b.input; });
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(hlm::to_json(r));
    std::cout << nlohmann::json{{"schema", 1}, {"n", n}, {"k", k}, {"g", g}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << r.input << "\t" << r.h_rendered << "\t" << r.root_class << "\td=" << r.d_omega
                << (r.root_correspondence ? "" : "\t(disagrees)") << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicities in generic tensor products of GL_n(F_q) characters"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");
  app.fallthrough();

  std::string text;
  auto* compute = app.add_subcommand("compute", "Compute H(q), the quiver and its root class");
  compute->add_option("multitype", text, "e.g. \"g=0; 1:[3] ; 1:[3] ; 1:[3]\"")->required();

  int q = 0;
  auto* oracle = app.add_subcommand("oracle", "Compare H(q0) with the GL2 brute-force multiplicity (n <= 2)");
  oracle->add_option("--q", q, "q0 in {3,5,7}")->required();
  oracle->add_option("multitype", text)->required();

  std::string depth = "quick";
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--depth", depth)->check(CLI::IsMember({"quick", "full"}));

  int n = 2, k = 3, g = 0;
  auto* sweep = app.add_subcommand("sweep", "Tabulate every multitype of the given shape");
  sweep->add_option("--n", n)->check(CLI::Range(1, 8));
  sweep->add_option("--k", k)->check(CLI::Range(1, 8));
  sweep->add_option("--g", g)->check(CLI::Range(0, 8));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return cmd_compute(text, json);
    if (*oracle) return cmd_oracle(text, q, json);
    if (*selftest) return cmd_selftest(depth, json);
    if (*sweep) return cmd_sweep(n, k, g, json);
  } catch (const hlm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
