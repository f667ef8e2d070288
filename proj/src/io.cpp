#include "trigonal/io.hpp"

#include <fstream>

#include "trigonal/errors.hpp"

namespace trigonal {

std::string to_string(Verification v) { return v == Verification::kExact ? "exact" : "randomized"; }

nlohmann::json identity_to_json(const StraightenedExpr& expr, int m, Verification verified) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : expr.terms) terms.push_back({{"tableau", t.to_string()}, {"coeff", c}});
  return {{"m", m}, {"source", expr.source.to_string()}, {"terms", terms}, {"verified", to_string(verified)}};
}

nlohmann::json report_to_json(const CoefficientReport& report) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [abs_c, count] : report.histogram) histogram[std::to_string(abs_c)] = count;
  nlohmann::json j = {{"identities", report.identities},
                      {"coefficients", report.coefficients},
                      {"histogram", histogram},
                      {"all_unit", report.all_unit}};
  j["min"] = report.min ? nlohmann::json(*report.min) : nlohmann::json(nullptr);
  j["max"] = report.max ? nlohmann::json(*report.max) : nlohmann::json(nullptr);
  return j;
}

namespace {

RealMatrix<double> matrix_from_json(const nlohmann::json& rows, int g, const char* name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != g) {
    throw InputError(std::string("tau file: '") + name + "' must be a " + std::to_string(g) + "x" +
                     std::to_string(g) + " array");
  }
  RealMatrix<double> out(g, g);
  for (int i = 0; i < g; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != g) {
      throw InputError(std::string("tau file: row ") + std::to_string(i) + " of '" + name + "' has the wrong length");
    }
    for (int k = 0; k < g; ++k) {
      if (!rows[i][k].is_number()) throw InputError(std::string("tau file: non-numeric entry in '") + name + "'");
      out(i, k) = rows[i][k].get<double>();
    }
  }
  return out;
}

}  // namespace

SiegelMatrix<double> siegel_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("re") || !j.contains("im")) {
    throw InputError("tau file needs keys 'g', 're' and 'im'");
  }
  if (!j["g"].is_number_integer() || j["g"].get<int>() < 1) throw InputError("tau file: 'g' must be a positive integer");
  const int g = j["g"].get<int>();
  return SiegelMatrix<double>::from_parts(matrix_from_json(j["re"], g, "re"), matrix_from_json(j["im"], g, "im"));
}

nlohmann::json siegel_to_json(const SiegelMatrix<double>& tau) {
  const auto g = tau.genus();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < g; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < g; ++k) {
      re_row.push_back(tau.matrix()(i, k).real());
      im_row.push_back(tau.matrix()(i, k).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return {{"g", g}, {"re", re}, {"im", im}};
}

SiegelMatrix<double> read_siegel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tau file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("tau file '" + path + "' is not valid JSON: " + e.what());
  }
  return siegel_from_json(j);
}

}  // namespace trigonal
