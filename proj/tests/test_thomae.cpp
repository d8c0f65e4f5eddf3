#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rosenhain/thomae.hpp"

#include <cmath>
#include <random>

using namespace rosenhain;

namespace {

struct Fixture {
    HyperellipticCurve curve;
    PeriodData periods;
    ThetaConstantCache cache;

    explicit Fixture(std::vector<double> pts)
        : curve(std::move(pts)), periods(compute_periods(curve, 1e-12)),
          cache(periods.tau, 1e-12)
    {
    }
};

const Fixture& genus2()
{
    static const Fixture f({0.0, 1.0, 2.0, 3.0, 4.0});
    return f;
}

const Fixture& genus3()
{
    static const Fixture f({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    return f;
}

} // namespace

TEST_CASE("root of unity fitting")
{
    const RootOfUnityFit exact = fit_root_of_unity(Complex(0.0, -1.0), 8);
    CHECK(exact.residual < 1e-15);
    CHECK(exact.root_index == 6);
    const RootOfUnityFit sign = fit_root_of_unity(Complex(-1.0, 0.0), 2);
    CHECK(sign.residual < 1e-15);
    CHECK(sign.nearest == Complex(-1.0));
    const RootOfUnityFit off = fit_root_of_unity(Complex(0.9, 0.1), 4);
    CHECK(off.residual > 0.1);
    CHECK_FALSE(off.pass(1e-8));
}

TEST_CASE("first Thomae theorem")
{
    // genus 1, symmetric points
    {
        const Fixture f({-1.0, 0.0, 1.0});
        for (const Partition& p : all_partitions_m0(f.curve)) {
            const RootOfUnityFit fit = first_thomae_check(f.curve, p, f.periods, f.cache);
            CHECK(fit.residual < 1e-9);
            CHECK(std::abs(std::abs(fit.ratio) - 1.0) < 1e-9);
        }
    }
    // all ten genus-2 partitions
    for (const Partition& p : all_partitions_m0(genus2().curve)) {
        const RootOfUnityFit fit = first_thomae_check(genus2().curve, p, genus2().periods,
                                                      genus2().cache);
        CHECK(fit.residual < 1e-8);
        CHECK(std::abs(std::abs(fit.ratio) - 1.0) < 1e-8);
    }
}

TEST_CASE("the fitted eighth root is scale invariant")
{
    const Fixture base({0.0, 1.0, 2.0, 3.0, 4.0});
    const Fixture scaled({0.0, 3.0, 6.0, 9.0, 12.0});
    for (const Partition& p : all_partitions_m0(base.curve)) {
        const int r1 = first_thomae_check(base.curve, p, base.periods, base.cache).root_index;
        const int r2 = first_thomae_check(scaled.curve, p, scaled.periods, scaled.cache).root_index;
        CHECK(r1 == r2);
    }
}

TEST_CASE("corollary 1")
{
    const Fixture& f = genus2();
    const RootOfUnityFit fit = corollary1_check(f.curve, {1}, {2}, 3, 4, f.cache);
    CHECK(fit.residual < 1e-8);
    CHECK(fit.order == 4);
    // branch ratio is real, so the fit lands on +-1 or +-i
    CHECK((fit.root_index % 2) == 0);
    CHECK_THROWS_AS(corollary1_check(f.curve, {1}, {2}, 3, 3, f.cache), std::invalid_argument);
    CHECK_THROWS_AS(corollary1_check(f.curve, {1}, {1}, 3, 4, f.cache), std::invalid_argument);
    CHECK_THROWS_AS(corollary1_check(f.curve, {1}, {2}, 1, 4, f.cache), std::invalid_argument);
}

TEST_CASE("corollary 2")
{
    const Fixture& f = genus2();
    const Partition p(f.curve, {1, 2});
    const RootOfUnityFit fit = corollary2_check(f.curve, p, 1, 2, 3, 4, f.cache);
    CHECK(fit.residual < 1e-8);
    // the right side is symmetric in i and j
    const RootOfUnityFit swapped = corollary2_check(f.curve, p, 1, 2, 4, 3, f.cache);
    CHECK(std::abs(fit.ratio - swapped.ratio) < 1e-13);
    CHECK(fit.root_index == swapped.root_index);

    const Partition p3(genus3().curve, {1, 2, 3});
    CHECK(corollary2_check(genus3().curve, p3, 1, 3, 5, 7, genus3().cache).residual < 1e-8);

    CHECK_THROWS_AS(corollary2_check(f.curve, p, 1, 1, 3, 4, f.cache), std::invalid_argument);
    CHECK_THROWS_AS(corollary2_check(f.curve, p, 1, 2, 3, 3, f.cache), std::invalid_argument);
    CHECK_THROWS_AS(corollary2_check(f.curve, p, 3, 2, 1, 4, f.cache), std::invalid_argument);
}

TEST_CASE("corollaries collapse to branch-point identities")
{
    // Replacing every theta by its first-Thomae value leaves rational
    // identities in the branch points alone; check them at random curves.
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> gap(0.3, 2.2);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> pts{gap(rng)};
        for (int k = 1; k < 5; ++k) {
            pts.push_back(pts.back() + gap(rng));
        }
        const HyperellipticCurve c(pts);
        // corollary 1 squared: ((e_l - e_m)/(e_k - e_m))^2 =
        //   nabla{k,S} nabla{k,T} / (nabla{l,S} nabla{l,T})
        const double lhs1 = std::pow((c.point(4) - c.point(5)) / (c.point(3) - c.point(5)), 2.0);
        const double rhs1 = nabla(c, {3, 1}) * nabla(c, {3, 2}) /
                            (nabla(c, {4, 1}) * nabla(c, {4, 2}));
        CHECK(lhs1 == doctest::Approx(rhs1).epsilon(1e-10));
        // corollary 2: the fourth powers collapse to a single nabla ratio
        const Partition p(c, {1, 2});
        const double lhs2 = std::abs(
            (c.point(1) - c.point(3)) * (c.point(1) - c.point(4)) * (c.point(1) - c.point(5)) /
            ((c.point(1) - c.point(2)) * (c.point(1) - c.point(2)) * (c.point(1) - c.point(2))));
        const double rhs2 = std::abs(nabla(c, {3, 2}) * nabla(c, {4, 2}) * nabla(c, {2, 5}) /
                                     (nabla(c, {3, 4}) * nabla(c, {3, 5}) * nabla(c, {4, 5})));
        CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-10));
    }
}

TEST_CASE("second Thomae theorem")
{
    // genus 1: the Jacobi derivative relation
    {
        const Fixture f({-1.0, 0.0, 1.0});
        const Partition p(f.curve, {1});
        const RootOfUnityFit fit = second_thomae_check(f.curve, p, 1, f.periods, f.cache);
        CHECK(fit.residual < 1e-9);
    }
    const Fixture& f = genus2();
    const Partition p(f.curve, {1, 2});
    for (int n : {1, 2}) {
        const RootOfUnityFit fit = second_thomae_check(f.curve, p, n, f.periods, f.cache);
        CHECK(fit.residual < 1e-8);
        CHECK(std::abs(std::abs(fit.ratio) - 1.0) < 1e-8);
    }

    // component consistency: the vector equality carries one scalar
    const Characteristic c1 = partition_characteristic(2, p.i1_set(1));
    const CVector& lhs = f.cache.gradient(c1);
    const std::vector<double> s = symmetric_functions_alt({f.curve.point(2)});
    const Complex scale = std::sqrt(f.periods.det_a / (16.0 * std::pow(3.14159265358979323846, 2))) *
                          std::pow(nabla(f.curve, p.i1_set(1)), 0.25);
    CVector rhs(2);
    for (int j = 0; j < 2; ++j) {
        rhs[static_cast<std::size_t>(j)] =
            scale * (f.periods.a(0, static_cast<std::size_t>(j)) * s[1] +
                     f.periods.a(1, static_cast<std::size_t>(j)) * s[0]);
    }
    const Complex ratio = lhs[0] / rhs[0];
    CHECK(std::abs(lhs[1] / rhs[1] - ratio) < 1e-8);
}

TEST_CASE("second Thomae in matrix form")
{
    const Fixture& f = genus2();
    for (const Partition& p : all_partitions_m0(f.curve)) {
        const RootOfUnityFit matrix_fit = second_thomae_matrix_check(f.curve, p, f.periods, f.cache);
        CHECK(matrix_fit.residual < 1e-8);
        // same content as the columnwise checks
        for (int n : p.i_set()) {
            const RootOfUnityFit col = second_thomae_check(f.curve, p, n, f.periods, f.cache);
            CHECK(col.root_index == matrix_fit.root_index);
        }
        // S stays invertible for distinct branch points
        const std::vector<double> s = s_matrix_row_major(f.curve, p);
        CHECK(std::abs(s[0] * s[3] - s[1] * s[2]) > 0.0);
    }
}

TEST_CASE("theta-only fourth root of chi")
{
    const Fixture& f = genus2();
    const Partition p(f.curve, {1, 2});
    const RootOfUnityFit fit = chi_fourth_root_theta(f.curve, p, 1, f.cache);
    CHECK(fit.residual < 1e-8);
    CHECK(std::abs(std::abs(fit.ratio) - 1.0) < 1e-8);

    const Partition p3(genus3().curve, {1, 2, 3});
    const RootOfUnityFit fit3 = chi_fourth_root_theta(genus3().curve, p3, 2, genus3().cache);
    CHECK(fit3.residual < 1e-8);

    // modulus form: |theta side|^4 = |chi_n|
    const Complex t0 = big_theta_i0(p3, genus3().cache);
    const Complex t1 = big_theta_i1(p3, 2, genus3().cache);
    double prod = 1.0;
    for (int i : p3.i1_set(2)) {
        prod *= (genus3().curve.point(2) - genus3().curve.point(i));
    }
    const double side = std::pow(std::abs(std::pow(t1 / t0, 0.5) *
                                          std::pow(Complex(prod), 0.25)), 4.0);
    CHECK(side == doctest::Approx(std::abs(chi(genus3().curve, p3, 2))).epsilon(1e-8));

    const HyperellipticCurve g1({0.0, 1.0, 2.0});
    const PeriodData pd1 = compute_periods(g1, 1e-12);
    const ThetaConstantCache tc1(pd1.tau, 1e-12);
    CHECK_THROWS_AS(chi_fourth_root_theta(g1, Partition(g1, {1}), 1, tc1), std::invalid_argument);
}
