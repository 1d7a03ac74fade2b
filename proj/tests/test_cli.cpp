#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + HLMULT_CLI + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute") {
  auto r = run("--json compute 'g=0; 1:[3] ; 1:[3] ; 1:[3]'");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["h_polynomial"] == nlohmann::json::array({0, 1}));
  CHECK(j["root_class"] == "imaginary");
  CHECK(j["d_omega"] == 2);
  CHECK(j["quiver"]["legs"] == nlohmann::json::parse("[[2,1],[2,1],[2,1]]"));

  r = run("compute --json 'g=0; 1:[2,1] ; 1:[3] ; 1:[3]'");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["h_polynomial"] == nlohmann::json::array({1}));
  CHECK(j["root_class"] == "real");
  CHECK(j["d_omega"] == 0);

  r = run("compute 'g=0; 1:[1,1,1] ; 1:[1,1,1] ; 1:[1,1,1]'");
  CHECK(r.code == 0);
  CHECK(r.out.find("not_root") != std::string::npos);
}

TEST_CASE("parse and size errors exit with 2") {
  CHECK(run("compute 'g=0; 1:[3'").code == 2);
  CHECK(run("compute 'g=0; 1:[2] ; 1:[3]'").code == 2);
  CHECK(run("compute").code != 0);
}

TEST_CASE("oracle") {
  auto r = run("--json oracle --q 5 'g=0; 1:[2] ; 1:[2] ; 1:[2]'");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["match"] == true);
  CHECK(j["oracle"] == "1");
  CHECK(run("oracle --q 3 'g=1; 2:[1] ; 2:[1]'").code == 0);
  CHECK(run("oracle --q 4 'g=0; 1:[2] ; 1:[2] ; 1:[2]'").code == 2);
  CHECK(run("oracle --q 3 'g=0; 1:[3] ; 1:[3] ; 1:[3]'").code == 2);
}

TEST_CASE("selftest quick") {
  auto r = run("--json selftest --depth quick");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  bool has_mutation = false;
  for (const auto& c : j["checks"]) has_mutation = has_mutation || c["name"] == "sign_mutation_detected";
  CHECK(has_mutation);
  CHECK(run("selftest --depth nope").code != 0);
}

TEST_CASE("sweep is sorted and complete") {
  auto r = run("--json sweep --n 2 --k 2 --g 0");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  const auto& reports = j["reports"];
  CHECK(reports.size() == 10);  // 4 types of size 2, multisets of two
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1]["input"].get<std::string>() < reports[i]["input"].get<std::string>());
  }
}
