#include "rosenhain/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace rosenhain {

using nlohmann::json;

json complex_to_json(const Complex& z)
{
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex value must be a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const ComplexMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) {
        throw std::invalid_argument("matrix rows must be non-empty arrays");
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = complex_from_json(j[i][c]);
        }
    }
    return m;
}

json curve_to_json(const HyperellipticCurve& curve)
{
    return json{{"genus", curve.genus()}, {"branch_points", curve.points()}};
}

HyperellipticCurve curve_from_json(const json& j)
{
    if (!j.contains("branch_points") || !j["branch_points"].is_array()) {
        throw std::invalid_argument("curve JSON needs a branch_points array");
    }
    std::vector<double> pts;
    for (const auto& v : j["branch_points"]) {
        if (!v.is_number()) {
            throw std::invalid_argument("branch points must be numbers");
        }
        pts.push_back(v.get<double>());
    }
    HyperellipticCurve curve(std::move(pts));
    if (j.contains("genus") && j["genus"].get<int>() != curve.genus()) {
        throw std::invalid_argument("genus field disagrees with the branch point count");
    }
    return curve;
}

json periods_to_json(const PeriodData& periods)
{
    return json{{"genus", static_cast<int>(periods.a.rows())},
                {"a", matrix_to_json(periods.a)},
                {"b", matrix_to_json(periods.b)},
                {"tau", matrix_to_json(periods.tau.tau())},
                {"det_a", complex_to_json(periods.det_a)},
                {"cond_a", periods.cond_a}};
}

json tau_to_json(const SiegelMatrix& tau)
{
    return json{{"genus", tau.genus()}, {"tau", matrix_to_json(tau.tau())}};
}

SiegelMatrix tau_from_json(const json& j, double symmetry_tol)
{
    const json& body = j.contains("tau") ? j["tau"] : j;
    return SiegelMatrix(matrix_from_json(body), symmetry_tol);
}

json report_to_json(const VerificationReport& rep)
{
    return json{{"identity", rep.identity},
                {"indices", rep.indices},
                {"ratio", complex_to_json(rep.ratio)},
                {"nearest_root", complex_to_json(rep.nearest)},
                {"residual", rep.residual},
                {"pass", rep.pass}};
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace rosenhain
