#pragma once

#include "rosenhain/curve.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/report.hpp"
#include "rosenhain/theta.hpp"

#include <json.hpp>

#include <string>

namespace rosenhain {

// Complex numbers are serialized as [re, im] pairs and matrices row-major.

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// {"genus": g, "branch_points": [... 2g+1 reals ...]}
nlohmann::json curve_to_json(const HyperellipticCurve& curve);
HyperellipticCurve curve_from_json(const nlohmann::json& j);

// {"genus": g, "a": ..., "b": ..., "tau": ..., "det_a": [re,im], "cond_a": x}
nlohmann::json periods_to_json(const PeriodData& periods);

// {"genus": g, "tau": ...}; validated against the Siegel conditions.
nlohmann::json tau_to_json(const SiegelMatrix& tau);
SiegelMatrix tau_from_json(const nlohmann::json& j, double symmetry_tol = 1e-8);

nlohmann::json report_to_json(const VerificationReport& rep);

nlohmann::json load_json_file(const std::string& path);

} // namespace rosenhain
