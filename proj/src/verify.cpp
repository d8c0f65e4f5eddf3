#include "rosenhain/verify.hpp"

#include "rosenhain/parallel.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/rosenhain.hpp"
#include "rosenhain/thomae.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rosenhain {

namespace {

void finalize(SuiteResult& out)
{
    out.total = static_cast<int>(out.reports.size());
    out.passed = 0;
    out.residual_max = 0.0;
    for (const auto& rep : out.reports) {
        if (rep.pass) {
            ++out.passed;
        }
        out.residual_max = std::max(out.residual_max, rep.residual);
    }
}

VerificationReport matrix_report(std::string identity, std::vector<int> indices,
                                 const MatrixRootFit& mf, double tol)
{
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.indices = std::move(indices);
    rep.ratio = mf.fit.ratio;
    rep.nearest = mf.fit.nearest;
    rep.residual = std::max(mf.fit.residual, mf.max_rel_error);
    rep.pass = rep.residual < tol;
    return rep;
}

struct CurveContext {
    const HyperellipticCurve& curve;
    PeriodData periods;
    ThetaConstantCache cache;
    std::vector<Partition> partitions;

    CurveContext(const HyperellipticCurve& c, const SuiteOptions& opts)
        : curve(c),
          periods(compute_periods(c, opts.quad_tol)),
          cache(periods.tau, opts.series_tol),
          partitions(all_partitions_m0(c))
    {
    }
};

SuiteResult suite_thomae1(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"thomae1", {}, 0, 0, 0.0};
    out.reports.resize(ctx.partitions.size());
    parallel_for(ctx.partitions.size(), [&](std::size_t i) {
        const Partition& p = ctx.partitions[i];
        out.reports[i] = make_report("first-thomae", p.i_set(),
                                     first_thomae_check(ctx.curve, p, ctx.periods, ctx.cache),
                                     opts.tol);
    });
    finalize(out);
    return out;
}

SuiteResult suite_thomae2(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"thomae2", {}, 0, 0, 0.0};
    const int g = ctx.curve.genus();
    out.reports.resize(ctx.partitions.size() * static_cast<std::size_t>(g + 1));
    parallel_for(ctx.partitions.size(), [&](std::size_t i) {
        const Partition& p = ctx.partitions[i];
        const std::size_t base = i * static_cast<std::size_t>(g + 1);
        for (int c = 0; c < g; ++c) {
            const int n = p.i_set()[static_cast<std::size_t>(c)];
            std::vector<int> idx = p.i_set();
            idx.push_back(n);
            out.reports[base + static_cast<std::size_t>(c)] =
                make_report("second-thomae", std::move(idx),
                            second_thomae_check(ctx.curve, p, n, ctx.periods, ctx.cache), opts.tol);
        }
        out.reports[base + static_cast<std::size_t>(g)] =
            make_report("second-thomae-matrix", p.i_set(),
                        second_thomae_matrix_check(ctx.curve, p, ctx.periods, ctx.cache), opts.tol);
    });
    finalize(out);
    return out;
}

SuiteResult suite_corollaries(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"corollaries", {}, 0, 0, 0.0};
    const int g = ctx.curve.genus();
    const int n_finite = 2 * g + 1;

    // Corollary 1: every choice of m, disjoint S, T (unordered to kill the
    // S<->T symmetry) and k < l from the leftovers.
    struct Cor1Args {
        std::vector<int> s, t;
        int k = 0, l = 0, m = 0;
    };
    std::vector<Cor1Args> cor1;
    std::vector<int> pool;
    for (int m = 1; m <= n_finite; ++m) {
        pool.clear();
        for (int v = 1; v <= n_finite; ++v) {
            if (v != m) {
                pool.push_back(v);
            }
        }
        const int pn = static_cast<int>(pool.size()); // 2g
        std::vector<int> smask(static_cast<std::size_t>(pn), 0);
        std::fill(smask.begin(), smask.begin() + (g - 1), 1);
        // enumerate S subsets via mask permutations
        std::sort(smask.begin(), smask.end());
        do {
            std::vector<int> s_set, rest;
            for (int q = 0; q < pn; ++q) {
                (smask[static_cast<std::size_t>(q)] ? s_set : rest).push_back(pool[static_cast<std::size_t>(q)]);
            }
            const int rn = static_cast<int>(rest.size()); // g+1
            std::vector<int> tmask(static_cast<std::size_t>(rn), 0);
            std::fill(tmask.begin(), tmask.begin() + (g - 1), 1);
            std::sort(tmask.begin(), tmask.end());
            do {
                Cor1Args args;
                args.s = s_set;
                args.m = m;
                std::vector<int> kl;
                for (int q = 0; q < rn; ++q) {
                    (tmask[static_cast<std::size_t>(q)] ? args.t : kl).push_back(rest[static_cast<std::size_t>(q)]);
                }
                args.k = kl[0];
                args.l = kl[1];
                // S and T enter symmetrically; equality happens only for the
                // genus-1 empty sets, which must still be counted once.
                if (args.s <= args.t) {
                    cor1.push_back(std::move(args));
                }
            } while (std::next_permutation(tmask.begin(), tmask.end()));
        } while (std::next_permutation(smask.begin(), smask.end()));
    }

    // Corollary 2: every partition, ordered pairs k != n in I_0, i < j in J_0.
    struct Cor2Args {
        const Partition* p = nullptr;
        int k = 0, n = 0, i = 0, j = 0;
    };
    std::vector<Cor2Args> cor2;
    if (g >= 2) {
        for (const Partition& p : ctx.partitions) {
            for (int k : p.i_set()) {
                for (int n : p.i_set()) {
                    if (k == n) {
                        continue;
                    }
                    for (std::size_t a = 0; a < p.j_set().size(); ++a) {
                        for (std::size_t b = a + 1; b < p.j_set().size(); ++b) {
                            cor2.push_back({&p, k, n, p.j_set()[a], p.j_set()[b]});
                        }
                    }
                }
            }
        }
    }

    out.reports.resize(cor1.size() + cor2.size());
    parallel_for(cor1.size(), [&](std::size_t q) {
        const Cor1Args& a = cor1[q];
        std::vector<int> idx{a.k, a.l, a.m};
        idx.insert(idx.end(), a.s.begin(), a.s.end());
        idx.insert(idx.end(), a.t.begin(), a.t.end());
        out.reports[q] = make_report("corollary1", std::move(idx),
                                     corollary1_check(ctx.curve, a.s, a.t, a.k, a.l, ctx.cache),
                                     opts.tol);
    });
    parallel_for(cor2.size(), [&](std::size_t q) {
        const Cor2Args& a = cor2[q];
        std::vector<int> idx = a.p->i_set();
        idx.insert(idx.end(), {a.k, a.n, a.i, a.j});
        out.reports[cor1.size() + q] =
            make_report("corollary2", std::move(idx),
                        corollary2_check(ctx.curve, *a.p, a.k, a.n, a.i, a.j, ctx.cache), opts.tol);
    });
    finalize(out);
    return out;
}

SuiteResult suite_riemann_jacobi(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"riemann-jacobi", {}, 0, 0, 0.0};
    out.reports.resize(ctx.partitions.size());
    parallel_for(ctx.partitions.size(), [&](std::size_t i) {
        const Partition& p = ctx.partitions[i];
        out.reports[i] = make_report("riemann-jacobi", p.i_set(),
                                     riemann_jacobi_check(p, ctx.cache), opts.tol);
    });
    finalize(out);
    return out;
}

SuiteResult suite_rosenhain2(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"rosenhain2", {}, 0, 0, 0.0};

    // Triple relation over all 20 triples from {1..6}.
    std::vector<std::array<int, 3>> triples;
    for (int i = 1; i <= 6; ++i) {
        for (int j = i + 1; j <= 6; ++j) {
            for (int k = j + 1; k <= 6; ++k) {
                triples.push_back({i, j, k});
            }
        }
    }

    // General reconstruction over every partition of the input curve.
    const std::size_t n_tr = triples.size();
    const std::size_t n_pt = ctx.partitions.size();

    // Theta-only reconstruction for every normalized pair (i, j).
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            pairs.push_back({i, j});
        }
    }

    out.reports.resize(n_tr + 2 * n_pt + 3 * pairs.size());
    parallel_for(n_tr, [&](std::size_t q) {
        out.reports[q] = triple_relation_check(triples[q][0], triples[q][1], triples[q][2],
                                               ctx.cache, opts.tol);
    });
    parallel_for(n_pt, [&](std::size_t q) {
        const Partition& p = ctx.partitions[q];
        out.reports[n_tr + 2 * q] =
            matrix_report("a-inverse-general", p.i_set(),
                          a_inverse_general_check(ctx.curve, p, ctx.periods, ctx.cache), opts.tol);
        out.reports[n_tr + 2 * q + 1] =
            matrix_report("a-direct-general", p.i_set(),
                          a_direct_general_check(ctx.curve, p, ctx.periods, ctx.cache), opts.tol);
    });
    parallel_for(pairs.size(), [&](std::size_t q) {
        const auto [i, j] = pairs[q];
        const HyperellipticCurve norm = moebius_normalize(ctx.curve, i, j);
        const PeriodData periods = compute_periods(norm, opts.quad_tol);
        const ThetaConstantCache cache(periods.tau, opts.series_tol);
        const ComplexMatrix a_inv_theta = a_inverse_genus2(i, j, cache);
        const ComplexMatrix a_theta = a_genus2(i, j, cache);
        const std::size_t base = n_tr + 2 * n_pt + 3 * q;
        out.reports[base] = matrix_report(
            "a-inverse-genus2", {i, j}, compare_up_to_global_root(a_inv_theta, periods.a.inverse()),
            opts.tol);
        out.reports[base + 1] = matrix_report(
            "a-genus2", {i, j}, compare_up_to_global_root(a_theta, periods.a), opts.tol);
        // Their product must be an eighth root of unity times the identity.
        const ComplexMatrix prod = a_theta * a_inv_theta;
        const Complex rho = prod(0, 0);
        RootOfUnityFit fit = fit_root_of_unity(rho, 8);
        double err = fit.residual;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                const Complex want = (r == c) ? rho : Complex(0.0);
                err = std::max(err, std::abs(prod(r, c) - want) / std::abs(rho));
            }
        }
        VerificationReport rep;
        rep.identity = "a-product-identity";
        rep.indices = {i, j};
        rep.ratio = rho;
        rep.nearest = fit.nearest;
        rep.residual = err;
        rep.pass = err < opts.tol;
        out.reports[base + 2] = rep;
    });
    finalize(out);
    return out;
}

SuiteResult suite_rosenhain3(const CurveContext& ctx, const SuiteOptions& opts)
{
    // e3 is not expressible through theta constants and must come in from
    // the caller; reject a wrong value before doing any work.
    const HyperellipticCurve norm = moebius_normalize(ctx.curve, 1, 2);
    const double expected_e3 = norm.point(3);
    if (!opts.e3.has_value()) {
        throw std::invalid_argument("the genus-3 reconstruction suite requires --e3");
    }
    if (std::abs(*opts.e3 - expected_e3) > 1e-9 * (1.0 + std::abs(expected_e3))) {
        throw std::invalid_argument("--e3 disagrees with the normalized curve's third branch point");
    }

    SuiteResult out{"rosenhain3", {}, 0, 0, 0.0};
    const std::size_t n_pt = ctx.partitions.size();
    out.reports.resize(2 * n_pt + 3);

    parallel_for(n_pt, [&](std::size_t q) {
        const Partition& p = ctx.partitions[q];
        out.reports[2 * q] =
            matrix_report("a-inverse-general", p.i_set(),
                          a_inverse_general_check(ctx.curve, p, ctx.periods, ctx.cache), opts.tol);
        out.reports[2 * q + 1] =
            matrix_report("a-direct-general", p.i_set(),
                          a_direct_general_check(ctx.curve, p, ctx.periods, ctx.cache), opts.tol);
    });

    // Theta-only columns for the normalized curve.
    const PeriodData periods = compute_periods(norm, opts.quad_tol);
    const ThetaConstantCache cache(periods.tau, opts.series_tol);
    const ComplexMatrix cand = a_inverse_genus3(cache, *opts.e3);
    const std::vector<ColumnRootFit> fits = compare_columns_up_to_roots(cand, periods.a.inverse());
    for (int c = 0; c < 3; ++c) {
        VerificationReport rep;
        rep.identity = "a-inverse-genus3-column";
        rep.indices = {c + 1};
        rep.ratio = fits[static_cast<std::size_t>(c)].fit.ratio;
        rep.nearest = fits[static_cast<std::size_t>(c)].fit.nearest;
        rep.residual = std::max(fits[static_cast<std::size_t>(c)].fit.residual,
                                fits[static_cast<std::size_t>(c)].max_rel_error);
        rep.pass = rep.residual < opts.tol * 10.0; // columnwise contract is 1e-7
        out.reports[2 * n_pt + static_cast<std::size_t>(c)] = rep;
    }
    finalize(out);
    return out;
}

SuiteResult suite_appendix_a_impl(const ThetaConstantCache& cache, const SuiteOptions& opts)
{
    SuiteResult out{"appendix-a", {}, 0, 0, 0.0};
    out.reports = appendix_a_suite(cache, opts.tol);
    VerificationReport margins;
    margins.identity = "rosenhain-derivative-margins";
    margins.ratio = Complex(1.0);
    margins.nearest = Complex(1.0);
    margins.residual = appendix_a_margins_consistent() ? 0.0 : 1.0;
    margins.pass = appendix_a_margins_consistent();
    out.reports.push_back(std::move(margins));
    finalize(out);
    return out;
}

SuiteResult suite_bolza(const CurveContext& ctx, const SuiteOptions& opts)
{
    SuiteResult out{"bolza", {}, 0, 0, 0.0};
    const int g = ctx.curve.genus();
    const ComplexMatrix a_inv = ctx.periods.a.inverse();

    if (g == 2) {
        const std::vector<double> rec = bolza_recover_genus2(ctx.cache, a_inv);
        for (int i = 1; i <= 5; ++i) {
            const double truth = ctx.curve.point(i);
            const double err = std::abs(rec[static_cast<std::size_t>(i - 1)] - truth) /
                               (1.0 + std::abs(truth));
            VerificationReport rep;
            rep.identity = "bolza-branch-point";
            rep.indices = {i};
            rep.ratio = Complex(rec[static_cast<std::size_t>(i - 1)]);
            rep.nearest = Complex(truth);
            rep.residual = err;
            rep.pass = err < opts.tol;
            out.reports.push_back(std::move(rep));
        }
    } else {
        // Every odd non-singular characteristic: I_1 of size g-1.
        std::vector<std::vector<int>> subsets;
        std::vector<int> pick(static_cast<std::size_t>(g - 1));
        const int n_finite = 2 * g + 1;
        for (int i = 0; i < g - 1; ++i) {
            pick[static_cast<std::size_t>(i)] = i + 1;
        }
        while (true) {
            subsets.push_back(pick);
            int pos = g - 2;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n_finite - (g - 2 - pos)) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < g - 1; ++q) {
                pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
            }
        }
        out.reports.resize(subsets.size());
        parallel_for(subsets.size(), [&](std::size_t q) {
            const std::vector<int>& i1 = subsets[q];
            std::vector<double> vals;
            for (int v : i1) {
                vals.push_back(ctx.curve.point(v));
            }
            const std::vector<double> truth = symmetric_functions_alt(vals);
            const CVector rec = bolza_symmetric_functions(g, i1, ctx.cache, a_inv);
            double err = 0.0, scale = 1.0;
            for (double t : truth) {
                scale = std::max(scale, std::abs(t));
            }
            for (int d = 0; d < g; ++d) {
                err = std::max(err, std::abs(rec[static_cast<std::size_t>(d)] -
                                             truth[static_cast<std::size_t>(d)]) / scale);
            }
            VerificationReport rep;
            rep.identity = "bolza-symmetric";
            rep.indices = i1;
            rep.ratio = rec.back();
            rep.nearest = Complex(truth.back());
            rep.residual = err;
            rep.pass = err < opts.tol;
            out.reports[q] = std::move(rep);
        });
    }
    finalize(out);
    return out;
}

} // namespace

std::string SuiteResult::summary() const
{
    std::ostringstream os;
    os << name << ": " << passed << "/" << total << " residual_max=" << residual_max;
    return os.str();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "thomae1", "thomae2",   "corollaries", "riemann-jacobi",
        "rosenhain2", "rosenhain3", "appendix-a", "bolza"};
    return names;
}

bool suite_applicable(const std::string& name, int genus)
{
    if (name == "thomae1" || name == "thomae2" || name == "riemann-jacobi" ||
        name == "corollaries") {
        return true;
    }
    if (name == "rosenhain2" || name == "appendix-a") {
        return genus == 2;
    }
    if (name == "rosenhain3") {
        return genus == 3;
    }
    if (name == "bolza") {
        return genus >= 2;
    }
    return false;
}

std::vector<SuiteResult> run_suites(const std::string& name, const HyperellipticCurve& curve,
                                    const SuiteOptions& opts)
{
    const bool all = (name == "all");
    if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw std::invalid_argument("unknown suite: " + name);
    }
    if (!all && !suite_applicable(name, curve.genus())) {
        throw std::invalid_argument("suite " + name + " does not apply to genus " +
                                    std::to_string(curve.genus()));
    }

    SuiteOptions effective = opts;
    if (all && curve.genus() == 3 && !effective.e3.has_value()) {
        effective.e3 = moebius_normalize(curve, 1, 2).point(3);
    }

    const CurveContext ctx(curve, effective);
    std::vector<SuiteResult> out;
    for (const std::string& suite : suite_names()) {
        if (!all && suite != name) {
            continue;
        }
        if (all && !suite_applicable(suite, curve.genus())) {
            continue;
        }
        if (suite == "thomae1") {
            out.push_back(suite_thomae1(ctx, effective));
        } else if (suite == "thomae2") {
            out.push_back(suite_thomae2(ctx, effective));
        } else if (suite == "corollaries") {
            out.push_back(suite_corollaries(ctx, effective));
        } else if (suite == "riemann-jacobi") {
            out.push_back(suite_riemann_jacobi(ctx, effective));
        } else if (suite == "rosenhain2") {
            out.push_back(suite_rosenhain2(ctx, effective));
        } else if (suite == "rosenhain3") {
            out.push_back(suite_rosenhain3(ctx, effective));
        } else if (suite == "appendix-a") {
            out.push_back(suite_appendix_a_impl(ctx.cache, effective));
        } else if (suite == "bolza") {
            out.push_back(suite_bolza(ctx, effective));
        }
    }
    return out;
}

SuiteResult run_appendix_a(const SiegelMatrix& tau, const SuiteOptions& opts)
{
    const ThetaConstantCache cache(tau, opts.series_tol);
    return suite_appendix_a_impl(cache, opts);
}

} // namespace rosenhain
