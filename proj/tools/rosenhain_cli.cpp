// Command-line front end: periods, theta evaluation, identity verification,
// theta-only reconstruction of A^{-1}, branch point recovery.
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 usage or parse error, 3 numeric or validation failure.

#include "rosenhain/json_io.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/rosenhain.hpp"
#include "rosenhain/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace rosenhain;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

int cmd_periods(const std::string& curve_file, double quad_tol)
{
    const HyperellipticCurve curve = curve_from_json(load_json_file(curve_file));
    emit(periods_to_json(compute_periods(curve, quad_tol)));
    return kExitPass;
}

int cmd_theta(const std::string& tau_file, const std::string& curve_file,
              const std::string& char_text, const std::string& z_text, bool gradient,
              double series_tol, double quad_tol)
{
    std::optional<SiegelMatrix> tau;
    if (!tau_file.empty()) {
        tau.emplace(tau_from_json(load_json_file(tau_file)));
    } else if (!curve_file.empty()) {
        tau.emplace(compute_periods(curve_from_json(load_json_file(curve_file)), quad_tol).tau);
    } else {
        throw std::invalid_argument("theta needs --tau or --curve");
    }
    const Characteristic c = Characteristic::parse(char_text);
    if (c.genus() != tau->genus()) {
        throw std::invalid_argument("characteristic genus disagrees with tau");
    }
    json out{{"genus", tau->genus()}, {"characteristic", c.str()}};
    if (gradient) {
        const CVector grad = theta_gradient(c, *tau, series_tol);
        json g = json::array();
        for (const Complex& v : grad) {
            g.push_back(complex_to_json(v));
        }
        out["gradient"] = std::move(g);
    } else {
        CVector z(static_cast<std::size_t>(tau->genus()), Complex(0.0));
        if (!z_text.empty()) {
            json zj;
            try {
                zj = json::parse(z_text);
            } catch (const json::parse_error& e) {
                throw std::invalid_argument(std::string("--z is not valid JSON: ") + e.what());
            }
            if (!zj.is_array() || zj.size() != z.size()) {
                throw std::invalid_argument("--z must be a length-g array of [re, im] pairs");
            }
            for (std::size_t i = 0; i < z.size(); ++i) {
                z[i] = complex_from_json(zj[i]);
            }
        }
        out["value"] = complex_to_json(theta(c, z, *tau, series_tol));
    }
    emit(out);
    return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& curve_file,
               const std::string& tau_file, const SuiteOptions& opts)
{
    std::vector<SuiteResult> results;
    if (!tau_file.empty()) {
        if (suite != "appendix-a") {
            throw std::invalid_argument("--tau input is only supported by the appendix-a suite");
        }
        results.push_back(run_appendix_a(tau_from_json(load_json_file(tau_file)), opts));
    } else {
        if (curve_file.empty()) {
            throw std::invalid_argument("verify needs a curve file (or --tau for appendix-a)");
        }
        const HyperellipticCurve curve = curve_from_json(load_json_file(curve_file));
        results = run_suites(suite, curve, opts);
    }

    bool all_pass = true;
    json suites = json::array();
    for (const SuiteResult& res : results) {
        json reports = json::array();
        for (const VerificationReport& rep : res.reports) {
            reports.push_back(report_to_json(rep));
        }
        suites.push_back(json{{"suite", res.name},
                              {"pass", res.passed},
                              {"total", res.total},
                              {"residual_max", res.residual_max},
                              {"reports", std::move(reports)}});
        all_pass = all_pass && res.all_pass();
        std::cerr << res.summary() << "\n";
    }
    emit(json{{"suites", std::move(suites)}, {"all_pass", all_pass}});
    return all_pass ? kExitPass : kExitIdentityFailure;
}

int cmd_reconstruct(const std::string& tau_file, const std::string& curve_file, bool genus2,
                    int i, int j, bool genus3, std::optional<double> e3, double series_tol,
                    double quad_tol, double tol)
{
    if (genus2 == genus3) {
        throw std::invalid_argument("choose exactly one of --genus2 or --genus3");
    }
    if (genus3 && !e3.has_value()) {
        throw std::invalid_argument("--genus3 requires --e3");
    }
    const SiegelMatrix tau = tau_from_json(load_json_file(tau_file));
    const ThetaConstantCache cache(tau, series_tol);
    ComplexMatrix candidate;
    json out;
    if (genus2) {
        candidate = a_inverse_genus2(i, j, cache);
        out["method"] = "genus2";
        out["indices"] = json::array({i, j});
    } else {
        candidate = a_inverse_genus3(cache, *e3);
        out["method"] = "genus3";
        out["e3"] = *e3;
    }
    out["a_inverse"] = matrix_to_json(candidate);
    out["fit"] = nullptr;
    if (!curve_file.empty()) {
        // Cross-check against the quadrature periods of the supplied curve.
        const HyperellipticCurve curve = curve_from_json(load_json_file(curve_file));
        const PeriodData periods = compute_periods(curve, quad_tol);
        const MatrixRootFit fit = compare_up_to_global_root(candidate, periods.a.inverse());
        out["fit"] = json{{"ratio", complex_to_json(fit.fit.ratio)},
                          {"nearest_root", complex_to_json(fit.fit.nearest)},
                          {"residual", fit.fit.residual},
                          {"max_rel_error", fit.max_rel_error},
                          {"pass", fit.pass(tol)}};
        emit(out);
        return fit.pass(tol) ? kExitPass : kExitIdentityFailure;
    }
    emit(out);
    return kExitPass;
}

std::vector<double> recover_points(int g, const ThetaConstantCache& cache,
                                   const ComplexMatrix& a_inv)
{
    if (g == 2) {
        return bolza_recover_genus2(cache, a_inv);
    }
    if (g == 3) {
        // Consecutive pairs: I_1 = {i, i+1} gives s_1 = -(e_i + e_{i+1}),
        // s_2 = e_i e_{i+1}; the sorted quadratic roots are the two points.
        std::vector<double> pts(7, 0.0);
        for (int i = 1; i <= 6; ++i) {
            const CVector s = bolza_symmetric_functions(3, {i, i + 1}, cache, a_inv);
            const double s1 = s[1].real(), s2 = s[2].real();
            const double disc = std::sqrt(std::max(0.0, s1 * s1 - 4.0 * s2));
            const double lo = 0.5 * (-s1 - disc), hi = 0.5 * (-s1 + disc);
            if (i == 1) {
                pts[0] = lo;
            }
            pts[static_cast<std::size_t>(i)] = hi;
        }
        return pts;
    }
    throw std::invalid_argument("branch point recovery is implemented for genus 2 and 3");
}

int cmd_recover(const std::string& curve_file, const std::string& tau_file, bool genus2, int i,
                int j, double series_tol, double quad_tol, double tol)
{
    json out;
    std::vector<double> recovered;
    if (!curve_file.empty()) {
        const HyperellipticCurve curve = curve_from_json(load_json_file(curve_file));
        const PeriodData periods = compute_periods(curve, quad_tol);
        const ThetaConstantCache cache(periods.tau, series_tol);
        recovered = recover_points(curve.genus(), cache, periods.a.inverse());
        double err = 0.0;
        for (std::size_t k = 0; k < recovered.size(); ++k) {
            const double truth = curve.points()[k];
            err = std::max(err, std::abs(recovered[k] - truth) / (1.0 + std::abs(truth)));
        }
        out["max_rel_error"] = err;
        out["recovered_branch_points"] = recovered;
        out["pass"] = err < tol;
        emit(out);
        return err < tol ? kExitPass : kExitIdentityFailure;
    }
    if (tau_file.empty() || !genus2) {
        throw std::invalid_argument("recover-branch-points needs a curve file, or --tau with --genus2 i j");
    }
    const SiegelMatrix tau = tau_from_json(load_json_file(tau_file));
    const ThetaConstantCache cache(tau, series_tol);
    // Fully theta-only: reconstruct A^{-1} first, then take Bolza ratios.
    // The recovered points are those of the curve normalized to e_i=0, e_j=1.
    const ComplexMatrix a_inv = a_inverse_genus2(i, j, cache);
    recovered = bolza_recover_genus2(cache, a_inv);
    out["normalization"] = json::array({i, j});
    out["recovered_branch_points"] = recovered;
    emit(out);
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hyperelliptic periods, theta constants and Rosenhain-Thomae verification"};
    app.require_subcommand(1);

    double tol = 1e-8, series_tol = 1e-12, quad_tol = 1e-12;

    auto* periods_cmd = app.add_subcommand("periods", "Period matrices A, B and tau of a curve");
    std::string periods_curve;
    periods_cmd->add_option("curve", periods_curve, "curve JSON file")->required();
    periods_cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");

    auto* theta_cmd = app.add_subcommand("theta", "Evaluate theta[eps](z; tau)");
    std::string theta_tau, theta_curve, theta_char, theta_z;
    bool theta_grad = false;
    theta_cmd->add_option("--tau", theta_tau, "tau JSON file");
    theta_cmd->add_option("--curve", theta_curve, "curve JSON file (tau computed)");
    theta_cmd->add_option("--char", theta_char, "characteristic, e.g. [01;11]")->required();
    theta_cmd->add_option("--z", theta_z, "argument as JSON array of [re,im] pairs");
    theta_cmd->add_flag("--gradient", theta_grad, "emit the gradient theta constant instead");
    theta_cmd->add_option("--series-tol", series_tol, "series tolerance");
    theta_cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");

    auto* verify_cmd = app.add_subcommand("verify", "Run an identity verification suite");
    std::string verify_suite, verify_curve, verify_tau;
    double verify_e3 = 0.0;
    bool has_e3 = false;
    verify_cmd->add_option("suite", verify_suite,
                           "thomae1|thomae2|corollaries|riemann-jacobi|rosenhain2|rosenhain3|"
                           "appendix-a|bolza|all")
        ->required();
    verify_cmd->add_option("curve", verify_curve, "curve JSON file");
    verify_cmd->add_option("--tau", verify_tau, "tau JSON file (appendix-a only)");
    verify_cmd->add_option("--tol", tol, "identity tolerance");
    verify_cmd->add_option("--series-tol", series_tol, "series tolerance");
    verify_cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");
    verify_cmd->add_option("--e3", verify_e3, "third branch point for rosenhain3")
        ->each([&](const std::string&) { has_e3 = true; });

    auto* rec_cmd = app.add_subcommand("reconstruct", "Theta-only A^{-1} from tau");
    std::string rec_tau, rec_curve;
    std::vector<int> rec_ij;
    double rec_e3 = 0.0;
    bool rec_has_e3 = false, rec_genus3 = false;
    rec_cmd->add_option("--tau", rec_tau, "tau JSON file")->required();
    rec_cmd->add_option("--curve", rec_curve, "optional curve JSON for a quadrature cross-check");
    rec_cmd->add_option("--genus2", rec_ij, "branch indices i j of the normalization")
        ->expected(2);
    rec_cmd->add_flag("--genus3", rec_genus3, "use the genus-3 column formulae");
    rec_cmd->add_option("--e3", rec_e3, "third branch point (genus 3)")
        ->each([&](const std::string&) { rec_has_e3 = true; });
    rec_cmd->add_option("--tol", tol, "cross-check tolerance");
    rec_cmd->add_option("--series-tol", series_tol, "series tolerance");
    rec_cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");

    auto* rbp_cmd = app.add_subcommand("recover-branch-points", "Bolza branch point recovery");
    std::string rbp_curve, rbp_tau;
    std::vector<int> rbp_ij;
    rbp_cmd->add_option("curve", rbp_curve, "curve JSON file (round-trip check)");
    rbp_cmd->add_option("--tau", rbp_tau, "tau JSON file (theta-only recovery)");
    rbp_cmd->add_option("--genus2", rbp_ij, "normalization indices i j for --tau mode")
        ->expected(2);
    rbp_cmd->add_option("--tol", tol, "recovery tolerance");
    rbp_cmd->add_option("--series-tol", series_tol, "series tolerance");
    rbp_cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (periods_cmd->parsed()) {
            return cmd_periods(periods_curve, quad_tol);
        }
        if (theta_cmd->parsed()) {
            return cmd_theta(theta_tau, theta_curve, theta_char, theta_z, theta_grad, series_tol,
                             quad_tol);
        }
        if (verify_cmd->parsed()) {
            SuiteOptions opts;
            opts.tol = tol;
            opts.series_tol = series_tol;
            opts.quad_tol = quad_tol;
            if (has_e3) {
                opts.e3 = verify_e3;
            }
            return cmd_verify(verify_suite, verify_curve, verify_tau, opts);
        }
        if (rec_cmd->parsed()) {
            const bool genus2 = !rec_ij.empty();
            return cmd_reconstruct(rec_tau, rec_curve, genus2, genus2 ? rec_ij[0] : 0,
                                   genus2 ? rec_ij[1] : 0, rec_genus3,
                                   rec_has_e3 ? std::optional<double>(rec_e3) : std::nullopt,
                                   series_tol, quad_tol, tol);
        }
        if (rbp_cmd->parsed()) {
            const bool genus2 = !rbp_ij.empty();
            return cmd_recover(rbp_curve, rbp_tau, genus2, genus2 ? rbp_ij[0] : 0,
                               genus2 ? rbp_ij[1] : 0, series_tol, quad_tol, tol);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
