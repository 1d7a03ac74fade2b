#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hlmult/int_poly.hpp"
#include "hlmult/quiver.hpp"
#include "hlmult/types.hpp"

namespace hlm {

struct ComputeReport {
  std::string input;  // normalized multitype
  int n = 0;
  int k = 0;
  int g = 0;
  std::vector<long> h_polynomial;  // constant term first; empty for zero
  std::string h_rendered;
  long d_omega = 0;
  std::string root_class;
  std::vector<std::vector<long>> legs;
  long center = 0;
  bool generic_exists = false;
  /// h ≠ 0 exactly when v_ω is a root.
  bool root_correspondence = true;
  double seconds = 0;
};

ComputeReport compute_report(const MultiType& mt);

nlohmann::json to_json(const ComputeReport& r);
ComputeReport report_from_json(const nlohmann::json& j);
std::string to_text(const ComputeReport& r);

/// Coefficients as longs, constant term first. Throws std::overflow_error if one does not fit.
std::vector<long> coefficient_array(const IntPoly& p);

}  // namespace hlm
