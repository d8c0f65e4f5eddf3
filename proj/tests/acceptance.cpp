// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned in code next to the check it gates.

#include "rosenhain/curve.hpp"
#include "rosenhain/characteristic.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/rosenhain.hpp"
#include "rosenhain/thomae.hpp"
#include "rosenhain/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace rosenhain;

namespace {

constexpr double kPi = std::numbers::pi;

struct Runner {
    int failures = 0;

    void run(int number, const std::string& label, double time_budget_s,
             const std::function<bool(std::string&)>& body)
    {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_budget_s > 0.0 && elapsed > time_budget_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        if (!ok) {
            ++failures;
        }
        std::printf("[%s] criterion %2d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number,
                    label.c_str(), elapsed, detail.empty() ? "" : "; ", detail.c_str());
        std::fflush(stdout);
    }
};

struct CurveData {
    HyperellipticCurve curve;
    PeriodData periods;
    ThetaConstantCache cache;

    explicit CurveData(std::vector<double> pts, double quad_tol = 1e-12,
                       double series_tol = 1e-12)
        : curve(std::move(pts)), periods(compute_periods(curve, quad_tol)),
          cache(periods.tau, series_tol)
    {
    }
};

std::vector<double> random_normalized_tail(std::mt19937& rng, int count, double lo, double hi,
                                           double min_gap)
{
    std::uniform_real_distribution<double> unif(lo, hi);
    while (true) {
        std::vector<double> tail(static_cast<std::size_t>(count));
        for (double& v : tail) {
            v = unif(rng);
        }
        std::sort(tail.begin(), tail.end());
        bool ok = tail.front() - 1.0 > min_gap;
        for (std::size_t k = 1; k < tail.size(); ++k) {
            ok = ok && (tail[k] - tail[k - 1] > min_gap);
        }
        if (ok) {
            return tail;
        }
    }
}

int run_cli(const std::string& args)
{
    const std::string cmd =
        std::string(ROSENHAIN_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main()
{
    Runner runner;

    // 1. Jacobi's derivative relation on the Weierstrass cubic with zero-sum
    //    real roots; theta_1 is -theta[1;1] in the series convention used
    //    here, so its derivative is -theta_1[1;1].
    runner.run(1, "genus-1 Jacobi derivative relation", 1.0, [](std::string& detail) {
        const CurveData data({-1.0, 0.0, 1.0});
        const Complex th2 = data.cache.constant(Characteristic({1}, {0}));
        const Complex th3 = data.cache.constant(Characteristic({0}, {0}));
        const Complex th4 = data.cache.constant(Characteristic({0}, {1}));
        const Complex dtheta1 = -data.cache.gradient(Characteristic({1}, {1}))[0];
        const Complex rhs = kPi * th2 * th3 * th4;
        const double rel = std::abs(dtheta1 - rhs) / std::abs(rhs);
        detail = "rel=" + std::to_string(rel);
        return rel < 1e-9;
    });

    // 2. Ratio Thomae for genus 1: with the classical decreasing labels
    //    e1 > e2 > e3, (e1-e2)/(e2-e3) = (theta_4/theta_2)^4 at the tau of
    //    the curve.
    runner.run(2, "genus-1 ratio Thomae on 5 random triples", 10.0, [](std::string& detail) {
        std::mt19937 rng(101);
        std::uniform_real_distribution<double> gap(0.4, 3.0);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const double e3 = gap(rng), e2 = e3 + gap(rng), e1 = e2 + gap(rng);
            const CurveData data({e3, e2, e1});
            const Complex th2 = data.cache.constant(Characteristic({1}, {0}));
            const Complex th4 = data.cache.constant(Characteristic({0}, {1}));
            const double lhs = (e1 - e2) / (e2 - e3);
            const double rhs = std::pow(std::abs(th4 / th2), 4.0);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
        detail = "worst rel=" + std::to_string(worst);
        return worst < 1e-9;
    });

    const CurveData ref2({0.0, 1.0, 2.0, 3.0, 4.0});
    const CurveData ref3({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0});

    // 3. First Thomae over all 10 + 35 partitions.
    runner.run(3, "first Thomae over every partition, genus 2 and 3", 30.0,
               [&](std::string& detail) {
                   double worst = 0.0;
                   int count = 0;
                   for (const CurveData* data : {&ref2, &ref3}) {
                       for (const Partition& p : all_partitions_m0(data->curve)) {
                           worst = std::max(worst, first_thomae_check(data->curve, p,
                                                                      data->periods, data->cache)
                                                       .residual);
                           ++count;
                       }
                   }
                   detail = std::to_string(count) + " partitions, worst=" + std::to_string(worst);
                   return count == 45 && worst < 1e-8;
               });

    // 4. Second Thomae, componentwise and in matrix form.
    runner.run(4, "second Thomae for every (I_0, n), genus 2 and 3", 60.0,
               [&](std::string& detail) {
                   double worst = 0.0;
                   for (const CurveData* data : {&ref2, &ref3}) {
                       for (const Partition& p : all_partitions_m0(data->curve)) {
                           for (int n : p.i_set()) {
                               worst = std::max(worst,
                                                second_thomae_check(data->curve, p, n,
                                                                    data->periods, data->cache)
                                                    .residual);
                           }
                           worst = std::max(worst,
                                            second_thomae_matrix_check(data->curve, p,
                                                                       data->periods, data->cache)
                                                .residual);
                       }
                   }
                   detail = "worst=" + std::to_string(worst);
                   return worst < 1e-8;
               });

    // 5. Riemann-Jacobi for every partition, plus the genus-3 instance with
    //    the right side written out factor by factor.
    runner.run(5, "Riemann-Jacobi derivative formula, genus 2 and 3", 60.0,
               [&](std::string& detail) {
                   double worst = 0.0;
                   for (const CurveData* data : {&ref2, &ref3}) {
                       for (const Partition& p : all_partitions_m0(data->curve)) {
                           worst = std::max(worst, riemann_jacobi_check(p, data->cache).residual);
                       }
                   }
                   const Partition p123(ref3.curve, {1, 2, 3});
                   const Complex lhs = jacobi_matrix(p123, ref3.cache).determinant();
                   const Complex rhs =
                       std::pow(kPi, 3) *
                       ref3.cache.constant(partition_characteristic(3, {5, 6, 7})) *
                       ref3.cache.constant(partition_characteristic(3, {4, 6, 7})) *
                       ref3.cache.constant(partition_characteristic(3, {4, 5, 7})) *
                       ref3.cache.constant(partition_characteristic(3, {4, 5, 6})) *
                       ref3.cache.constant(partition_characteristic(3, {4, 5, 6, 7}));
                   const double literal =
                       std::min(std::abs(lhs - rhs), std::abs(lhs + rhs)) / std::abs(rhs);
                   worst = std::max(worst, literal);
                   detail = "worst=" + std::to_string(worst);
                   return worst < 1e-8;
               });

    // 6. General genus-2 theta-only A^{-1} on 10 random normalized curves,
    //    plus the classical product identifications. The second
    //    identification carries the inherent fourth-root sign, which must be
    //    the same for every curve of this ordering.
    runner.run(6, "genus-2 Rosenhain round trip on 10 random curves", 120.0,
               [](std::string& detail) {
                   std::mt19937 rng(103);
                   double worst = 0.0, worst_id = 0.0;
                   int extra_sign = 0;
                   for (int trial = 0; trial < 10; ++trial) {
                       const std::vector<double> tail =
                           random_normalized_tail(rng, 3, 1.0, 20.0, 0.15);
                       const CurveData data({0.0, 1.0, tail[0], tail[1], tail[2]});
                       const MatrixRootFit fit = compare_up_to_global_root(
                           a_inverse_genus2(1, 2, data.cache), data.periods.a.inverse());
                       worst = std::max(worst, std::max(fit.fit.residual, fit.max_rel_error));

                       const std::array<int, 3> tri{1, 2, 6};
                       const Complex p_prod = pair_theta_product(2, 6, tri, data.cache);
                       const Complex q_prod = pair_theta_product(1, 2, tri, data.cache);
                       const Complex t16 = pair_theta_product(1, 6, tri, data.cache);
                       const double a123 = tail[0] * tail[1] * tail[2];
                       worst_id = std::max(worst_id,
                                           std::abs(std::pow(p_prod / q_prod, 4.0) - a123) / a123);
                       const double extra = (1.0 - tail[0]) * (1.0 - tail[1]) * (1.0 - tail[2]);
                       const Complex t4 = std::pow(t16 / q_prod, 4.0);
                       const int sign = std::abs(t4 - extra) < std::abs(t4 + extra) ? 1 : -1;
                       if (extra_sign == 0) {
                           extra_sign = sign;
                       } else if (extra_sign != sign) {
                           detail = "extra-identity sign not constant";
                           return false;
                       }
                       worst_id = std::max(worst_id, std::abs(static_cast<double>(sign) * t4 - extra) /
                                                         std::abs(extra));
                   }
                   detail = "worst=" + std::to_string(std::max(worst, worst_id)) +
                            ", extra sign=" + std::to_string(extra_sign);
                   return worst < 1e-8 && worst_id < 1e-8;
               });

    // 7. Genus-3 column formulae with e3 supplied.
    runner.run(7, "genus-3 theta-only columns on 5 random curves", 60.0, [](std::string& detail) {
        std::mt19937 rng(107);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const std::vector<double> tail = random_normalized_tail(rng, 5, 1.0, 20.0, 0.2);
            std::vector<double> pts{0.0, 1.0};
            pts.insert(pts.end(), tail.begin(), tail.end());
            const CurveData data(pts);
            const ComplexMatrix cand = a_inverse_genus3(data.cache, tail[0]);
            for (const ColumnRootFit& cf :
                 compare_columns_up_to_roots(cand, data.periods.a.inverse())) {
                worst = std::max(worst, std::max(cf.fit.residual, cf.max_rel_error));
            }
        }
        detail = "worst=" + std::to_string(worst);
        return worst < 1e-7;
    });

    // 8. The 15 derivative identities with pinned signs on 5 random taus.
    runner.run(8, "15 derivative identities on 5 random genus-2 taus", 60.0,
               [](std::string& detail) {
                   if (!appendix_a_margins_consistent()) {
                       detail = "margin characteristics do not match";
                       return false;
                   }
                   std::mt19937 rng(109);
                   double worst = 0.0;
                   for (int trial = 0; trial < 5; ++trial) {
                       const std::vector<double> tail =
                           random_normalized_tail(rng, 3, 1.0, 12.0, 0.2);
                       const CurveData data({0.0, 1.0, tail[0], tail[1], tail[2]});
                       for (const VerificationReport& rep : appendix_a_suite(data.cache, 1e-8)) {
                           worst = std::max(worst, rep.residual);
                           if (!rep.pass) {
                               detail = "row " + std::to_string(rep.indices[0]) + " failed";
                               return false;
                           }
                       }
                   }
                   detail = "worst=" + std::to_string(worst);
                   return worst < 1e-8;
               });

    // 9. Triple relation over all 20 triples with one consistent sign each.
    runner.run(9, "triple relation over all 20 triples", 30.0, [&](std::string& detail) {
        double worst = 0.0;
        int count = 0;
        for (int i = 1; i <= 6; ++i) {
            for (int j = i + 1; j <= 6; ++j) {
                for (int k = j + 1; k <= 6; ++k) {
                    const VerificationReport rep = triple_relation_check(i, j, k, ref2.cache, 1e-8);
                    worst = std::max(worst, rep.residual);
                    ++count;
                }
            }
        }
        detail = std::to_string(count) + " triples, worst=" + std::to_string(worst);
        return count == 20 && worst < 1e-8;
    });

    // 10. Bolza recovery: genus-2 branch points and the genus-3 pair ratios.
    runner.run(10, "Bolza branch point recovery", 30.0, [&](std::string& detail) {
        double worst = 0.0;
        const std::vector<double> rec = bolza_recover_genus2(ref2.cache, ref2.periods.a.inverse());
        for (int i = 1; i <= 5; ++i) {
            const double truth = ref2.curve.point(i);
            worst = std::max(worst, std::abs(rec[static_cast<std::size_t>(i - 1)] - truth) /
                                        (1.0 + std::abs(truth)));
        }
        const CVector s =
            bolza_symmetric_functions(3, {1, 2}, ref3.cache, ref3.periods.a.inverse());
        const double e1 = ref3.curve.point(1), e2 = ref3.curve.point(2);
        worst = std::max(worst, std::abs(s[2] - Complex(e1 * e2)) / (1.0 + std::abs(e1 * e2)));
        worst = std::max(worst, std::abs(s[1] - Complex(-e1 - e2)) / (1.0 + std::abs(e1 + e2)));
        detail = "worst=" + std::to_string(worst);
        return worst < 1e-8;
    });

    // 11. Combinatorial exactness: both characteristic tables bit-exact,
    //     parity counts, special fundamental systems.
    runner.run(11, "characteristic combinatorics", 30.0, [](std::string& detail) {
        const char* table2[6] = {"10;00", "10;10", "01;10", "01;11", "00;11", "00;00"};
        for (int j = 1; j <= 6; ++j) {
            if (branch_characteristic(2, j) != Characteristic::parse(table2[j - 1])) {
                detail = "genus-2 table mismatch at " + std::to_string(j);
                return false;
            }
        }
        const char* table3[8] = {"100;000", "100;100", "010;100", "010;110",
                                 "001;110", "001;111", "000;111", "000;000"};
        for (int j = 1; j <= 8; ++j) {
            if (branch_characteristic(3, j) != Characteristic::parse(table3[j - 1])) {
                detail = "genus-3 table mismatch at " + std::to_string(j);
                return false;
            }
        }
        if (riemann_constant(2) != Characteristic::parse("11;01") ||
            riemann_constant(3) != Characteristic::parse("111;101")) {
            detail = "Riemann constant mismatch";
            return false;
        }
        for (int g = 1; g <= 6; ++g) {
            int even = 0, odd = 0;
            for (std::uint32_t bits = 0; bits < (1u << (2 * g)); ++bits) {
                (Characteristic::from_packed(g, bits).is_even() ? even : odd)++;
            }
            if (even != ((1 << (2 * g)) + (1 << g)) / 2 ||
                odd != ((1 << (2 * g)) - (1 << g)) / 2) {
                detail = "parity count mismatch at genus " + std::to_string(g);
                return false;
            }
        }
        for (int g = 1; g <= 4; ++g) {
            std::vector<Characteristic> odd_first, evens;
            for (int j = 1; j <= 2 * g + 2; ++j) {
                const Characteristic a = branch_characteristic(g, j);
                (a.is_odd() ? odd_first : evens).push_back(a);
            }
            odd_first.insert(odd_first.end(), evens.begin(), evens.end());
            if (!is_special_fundamental_system(odd_first)) {
                detail = "not a special fundamental system at genus " + std::to_string(g);
                return false;
            }
        }
        return true;
    });

    // 12. The full CLI verification on the two reference curves.
    runner.run(12, "cli 'verify all' on the reference curves", 120.0, [](std::string& detail) {
        const std::string data_dir(ROSENHAIN_DATA_DIR);
        const int rc2 = run_cli("verify all " + data_dir + "/genus2.json");
        const int rc3 = run_cli("verify all " + data_dir + "/genus3.json");
        detail = "exit codes " + std::to_string(rc2) + ", " + std::to_string(rc3);
        return rc2 == 0 && rc3 == 0;
    });

    if (runner.failures > 0) {
        std::printf("%d criterion(s) failed\n", runner.failures);
    } else {
        std::printf("all 12 criteria passed\n");
    }
    return runner.failures;
}
