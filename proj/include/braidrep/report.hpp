#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidrep/modrep.hpp"

namespace braidrep::report {

using braidrep::modrep::SeriesMatrixC;
using braidrep::modrep::SeriesMatrixL;

// One verified identity. Exact-ring items pass iff the residual is
// identically zero; float items pass iff every per-order residual is below
// the tolerance.
struct CheckItem {
  std::string name;
  bool exact = false;
  double tol = 0.0;
  std::vector<double> residual_per_order;
  bool passed = false;
};

struct CheckReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckItem> items;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

CheckItem exact_item(const std::string& name, const SeriesMatrixL& residual);
CheckItem float_item(const std::string& name, const std::vector<double>& profile,
                     double tol);
// Negative controls: pass iff the residual is nonzero.
CheckItem exact_nonzero_item(const std::string& name, const SeriesMatrixL& residual);

// Exact scalars serialize as strings so reports never go through floats.
std::string scalar_string(const Rational& v);
std::string scalar_string(const CycloScalar& v);
std::string scalar_string(const LambdaRat& v);

// Canonical matrix serializations: {"dims": [...], "order": K,
// "coefficients": [k][i][j]}. Exact entries are strings, numeric entries
// [re, im] pairs.
nlohmann::json matrix_json(const SeriesMatrixL& m);
nlohmann::json matrix_json(const SeriesMatrixC& m);

}  // namespace braidrep::report
