#include "hlmult/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "hlmult/multiplicity.hpp"

namespace hlm {

std::vector<long> coefficient_array(const IntPoly& p) {
  std::vector<long> out;
  for (const auto& c : p.coefficients()) {
    if (!c.fits_slong_p()) throw std::overflow_error("coefficient does not fit in a long");
    out.push_back(c.get_si());
  }
  return out;
}

ComputeReport compute_report(const MultiType& mt) {
  const auto t0 = std::chrono::steady_clock::now();
  ComputeReport r;
  r.input = mt.to_string();
  r.n = mt.n();
  r.k = mt.k();
  r.g = mt.genus();
  const IntPoly h = h_omega(mt);
  r.h_polynomial = coefficient_array(h);
  r.h_rendered = h.to_string();
  const QuiverData qd = build_quiver(mt);
  r.d_omega = d_omega(qd.quiver, qd.v);
  const RootClass rc = classify_root(qd.quiver, qd.v);
  r.root_class = root_class_name(rc);
  r.legs = qd.v.legs;
  r.center = qd.v.v0;
  r.generic_exists = generic_exists(mt);
  r.root_correspondence = h.is_zero() == (rc == RootClass::not_root);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json to_json(const ComputeReport& r) {
  return {
      {"schema", 1},
      {"input", r.input},
      {"n", r.n},
      {"k", r.k},
      {"g", r.g},
      {"h_polynomial", r.h_polynomial},
      {"h_rendered", r.h_rendered},
      {"d_omega", r.d_omega},
      {"root_class", r.root_class},
      {"quiver",
       {{"legs", r.legs}, {"loops", r.g}, {"center", r.center}, {"root_class", r.root_class}, {"d_omega", r.d_omega}}},
      {"generic_exists", r.generic_exists},
      {"root_correspondence", r.root_correspondence},
      {"timing_seconds", r.seconds},
  };
}

ComputeReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unknown report schema");
  ComputeReport r;
  r.input = j.at("input").get<std::string>();
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.g = j.at("g").get<int>();
  r.h_polynomial = j.at("h_polynomial").get<std::vector<long>>();
  r.h_rendered = j.at("h_rendered").get<std::string>();
  r.d_omega = j.at("d_omega").get<long>();
  r.root_class = j.at("root_class").get<std::string>();
  r.legs = j.at("quiver").at("legs").get<std::vector<std::vector<long>>>();
  r.center = j.at("quiver").at("center").get<long>();
  r.generic_exists = j.at("generic_exists").get<bool>();
  r.root_correspondence = j.at("root_correspondence").get<bool>();
  r.seconds = j.at("timing_seconds").get<double>();
  return r;
}

std::string to_text(const ComputeReport& r) {
  std::ostringstream os;
  os << "input:          " << r.input << "\n";
  os << "n, k, g:        " << r.n << ", " << r.k << ", " << r.g << "\n";
  os << "H(q):           " << r.h_rendered << "\n";
  os << "coefficients:   [";
  for (std::size_t i = 0; i < r.h_polynomial.size(); ++i) os << (i ? "," : "") << r.h_polynomial[i];
  os << "]\n";
  os << "dimension vec:  " << r.center << ";";
  for (std::size_t i = 0; i < r.legs.size(); ++i) {
    os << (i ? " ; " : " ");
    for (std::size_t j = 0; j < r.legs[i].size(); ++j) os << (j ? "," : "") << r.legs[i][j];
  }
  os << "\n";
  os << "root class:     " << r.root_class << "\n";
  os << "d_omega:        " << r.d_omega << "\n";
  os << "generic orbits: " << (r.generic_exists ? "yes" : "no") << "\n";
  if (!r.root_correspondence) os << "warning:        H and the root class disagree\n";
  os << "time:           " << r.seconds << " s\n";
  return os.str();
}

}  // namespace hlm
