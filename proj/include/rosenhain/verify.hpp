#pragma once

#include "rosenhain/curve.hpp"
#include "rosenhain/report.hpp"
#include "rosenhain/theta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rosenhain {

struct SuiteOptions {
    double tol = 1e-8;        // identity tolerance
    double series_tol = 1e-12; // theta series tail
    double quad_tol = 1e-12;   // period quadrature
    std::optional<double> e3;  // genus-3 reconstruction input
};

struct SuiteResult {
    std::string name;
    std::vector<VerificationReport> reports;
    int passed = 0;
    int total = 0;
    double residual_max = 0.0;

    bool all_pass() const { return passed == total; }
    std::string summary() const;
};

// Individually runnable suites, in the order `all` executes them.
const std::vector<std::string>& suite_names();
bool suite_applicable(const std::string& name, int genus);

// Runs one named suite (or "all") over every applicable partition and index
// choice for the given curve. Unknown or inapplicable names and a missing e3
// for the genus-3 reconstruction raise std::invalid_argument.
std::vector<SuiteResult> run_suites(const std::string& name, const HyperellipticCurve& curve,
                                    const SuiteOptions& opts);

// Tau-only entry for the genus-2 derivative identities (no curve needed).
SuiteResult run_appendix_a(const SiegelMatrix& tau, const SuiteOptions& opts);

} // namespace rosenhain
