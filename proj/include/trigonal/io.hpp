#ifndef TRIGONAL_IO_HPP
#define TRIGONAL_IO_HPP

// JSON forms of identities, coefficient reports and Siegel matrices.

#include <string>

#include <json.hpp>

#include "trigonal/straighten.hpp"
#include "trigonal/theta.hpp"

namespace trigonal {

enum class Verification { kExact, kRandomized };

std::string to_string(Verification v);

/// { "m", "source", "terms": [{ "tableau", "coeff" }], "verified" }
nlohmann::json identity_to_json(const StraightenedExpr& expr, int m, Verification verified);

nlohmann::json report_to_json(const CoefficientReport& report);

/// { "g": 2, "re": [[...],[...]], "im": [[...],[...]] }
SiegelMatrix<double> siegel_from_json(const nlohmann::json& j);
nlohmann::json siegel_to_json(const SiegelMatrix<double>& tau);

SiegelMatrix<double> read_siegel_file(const std::string& path);

}  // namespace trigonal

#endif  // TRIGONAL_IO_HPP
