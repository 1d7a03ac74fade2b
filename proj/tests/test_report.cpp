#include <doctest.h>

#include <sstream>

#include "hlmult/report.hpp"

using namespace hlm;

namespace {

// Pulls "label: value" out of the text report.
std::string field(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(label, 0) == 0) {
      auto v = line.substr(label.size());
      v.erase(0, v.find_first_not_of(' '));
      return v;
    }
  }
  return {};
}

}  // namespace

TEST_CASE("compute_report for the anchor cases") {
  auto r = compute_report(parse_multitype("g=0; 1:[3] ; 1:[3] ; 1:[3]"));
  CHECK(r.h_polynomial == std::vector<long>{0, 1});
  CHECK(r.h_rendered == "q");
  CHECK(r.root_class == "imaginary");
  CHECK(r.d_omega == 2);
  CHECK(r.center == 3);
  CHECK(r.legs == std::vector<std::vector<long>>{{2, 1}, {2, 1}, {2, 1}});
  CHECK_FALSE(r.generic_exists);
  CHECK(r.root_correspondence);

  r = compute_report(parse_multitype("g=0; 1:[2,1] ; 1:[3] ; 1:[3]"));
  CHECK(r.h_polynomial == std::vector<long>{1});
  CHECK(r.root_class == "real");
  CHECK(r.d_omega == 0);

  r = compute_report(parse_multitype("g=0; 1:[1,1,1] ; 1:[1,1,1] ; 1:[1,1,1]"));
  CHECK(r.h_polynomial.empty());
  CHECK(r.h_rendered == "0");
  CHECK(r.root_class == "not_root");
}

TEST_CASE("JSON round trip and recomputation") {
  for (const auto& mt : enumerate_multitypes(2, 3, 1)) {
    const auto r = compute_report(mt);
    const auto j = to_json(r);
    CHECK(j.at("schema") == 1);
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back) == j);
    auto again = compute_report(parse_multitype(back.input));
    again.seconds = back.seconds;
    CHECK(to_json(again) == j);
  }
  CHECK_THROWS(report_from_json(nlohmann::json{{"schema", 2}}));
}

TEST_CASE("text and JSON agree on the numeric fields") {
  for (const auto& mt : enumerate_multitypes(3, 2, 0)) {
    const auto r = compute_report(mt);
    const auto text = to_text(r);
    const auto j = to_json(r);
    CHECK(field(text, "input:") == j.at("input").get<std::string>());
    CHECK(field(text, "H(q):") == j.at("h_rendered").get<std::string>());
    CHECK(std::stol(field(text, "d_omega:")) == j.at("d_omega").get<long>());
    CHECK(field(text, "root class:") == j.at("root_class").get<std::string>());
    std::string coeffs = "[";
    for (const auto& c : j.at("h_polynomial")) coeffs += (coeffs.size() > 1 ? "," : "") + std::to_string(c.get<long>());
    CHECK(field(text, "coefficients:") == coeffs + "]");
  }
}

TEST_CASE("coefficient_array") {
  CHECK(coefficient_array(IntPoly()).empty());
  CHECK(coefficient_array(IntPoly::q() + IntPoly(3L)) == std::vector<long>{3, 1});
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 80);
  CHECK_THROWS_AS(coefficient_array(IntPoly(std::vector<mpz_class>{big})), std::overflow_error);
}
