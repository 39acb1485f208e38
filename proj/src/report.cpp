#include "braidrep/report.hpp"

#include "braidrep/kz.hpp"

namespace braidrep::report {

namespace {

std::string poly_string(const Poly<CycloScalar>& p) {
  if (p.zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (is_zero(p.c[i])) continue;
    if (!s.empty()) s += " + ";
    s += scalar_string(p.c[i]);
    if (i == 1) s += "*L";
    if (i > 1) s += "*L^" + std::to_string(i);
  }
  return s;
}

}  // namespace

bool CheckReport::all_passed() const {
  for (const CheckItem& it : items)
    if (!it.passed) return false;
  return true;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::json::array();
  for (const CheckItem& it : items) {
    nlohmann::json c;
    c["name"] = it.name;
    c["ring"] = it.exact ? "exact" : "float";
    if (!it.exact) c["tol"] = it.tol;
    c["residual_per_order"] = it.residual_per_order;
    c["passed"] = it.passed;
    j["checks"].push_back(std::move(c));
  }
  return j;
}

CheckItem exact_item(const std::string& name, const SeriesMatrixL& residual) {
  CheckItem it;
  it.name = name;
  it.exact = true;
  it.residual_per_order.assign(static_cast<std::size_t>(residual.K) + 1, 0.0);
  for (int k = 0; k <= residual.K; ++k)
    for (const LambdaRat& v : residual.c[static_cast<std::size_t>(k)])
      if (!is_zero(v)) it.residual_per_order[static_cast<std::size_t>(k)] = 1.0;
  it.passed = residual.zero();
  return it;
}

CheckItem exact_nonzero_item(const std::string& name, const SeriesMatrixL& residual) {
  CheckItem it = exact_item(name, residual);
  it.passed = !residual.zero();
  return it;
}

CheckItem float_item(const std::string& name, const std::vector<double>& profile,
                     double tol) {
  CheckItem it;
  it.name = name;
  it.exact = false;
  it.tol = tol;
  it.residual_per_order = profile;
  it.passed = true;
  for (double v : profile)
    if (!(v < tol)) it.passed = false;
  return it;
}

std::string scalar_string(const Rational& v) { return rational_str(v); }

std::string scalar_string(const CycloScalar& v) {
  if (v.is_rational()) return scalar_string(v.coords[0]);
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i].is_zero()) continue;
    if (!first) s += " + ";
    first = false;
    s += scalar_string(v.coords[i]);
    if (i == 1) s += "*z" + std::to_string(v.N);
    if (i > 1) s += "*z" + std::to_string(v.N) + "^" + std::to_string(i);
  }
  return s + ")";
}

std::string scalar_string(const LambdaRat& v) {
  if (v.den.deg() == 0) return poly_string(v.num);
  return "(" + poly_string(v.num) + ")/(" + poly_string(v.den) + ")";
}

nlohmann::json matrix_json(const SeriesMatrixL& m) {
  nlohmann::json j;
  j["dims"] = m.dims;
  j["order"] = m.K;
  j["ring"] = "exact";
  nlohmann::json coeffs = nlohmann::json::array();
  const int n = m.size();
  for (int k = 0; k <= m.K; ++k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jj = 0; jj < n; ++jj) row.push_back(scalar_string(m.at(k, i, jj)));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

nlohmann::json matrix_json(const SeriesMatrixC& m) {
  nlohmann::json j;
  j["dims"] = m.dims;
  j["order"] = m.K;
  j["ring"] = "complex";
  nlohmann::json coeffs = nlohmann::json::array();
  const int n = m.size();
  for (int k = 0; k <= m.K; ++k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jj = 0; jj < n; ++jj) {
        const std::complex<double>& z = m.at(k, i, jj);
        row.push_back({z.real(), z.imag()});
      }
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

}  // namespace braidrep::report
