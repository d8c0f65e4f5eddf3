#include "rosenhain/thomae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rosenhain {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const char* msg)
{
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

bool contains(const std::vector<int>& v, int x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<int> set_union(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

Complex theta_of_set(const ThetaConstantCache& tc, int g, const std::vector<int>& set)
{
    return tc.constant(partition_characteristic(g, set));
}

// det A is real for real branch points, up to quadrature noise. A noise-level
// imaginary part of either sign would land sqrt on either side of the branch
// cut, so pin such values to the upper side before taking the root.
Complex stable_sqrt(Complex z)
{
    if (std::abs(z.imag()) <= 4e-13 * std::abs(z)) {
        z = Complex(z.real(), +0.0);
    }
    return std::sqrt(z);
}

} // namespace

RootOfUnityFit fit_root_of_unity(Complex ratio, int order)
{
    RootOfUnityFit fit;
    fit.ratio = ratio;
    fit.order = order;
    fit.residual = std::abs(ratio - Complex(1.0));
    for (int k = 1; k < order; ++k) {
        Complex root = std::exp(2.0 * kImag * kPi * static_cast<double>(k) /
                                static_cast<double>(order));
        // snap the axis roots to exact values
        if (std::abs(root.real()) < 1e-15) {
            root = Complex(0.0, root.imag() > 0 ? 1.0 : -1.0);
        } else if (std::abs(root.imag()) < 1e-15) {
            root = Complex(root.real() > 0 ? 1.0 : -1.0, 0.0);
        }
        const double d = std::abs(ratio - root);
        if (d < fit.residual) {
            fit.residual = d;
            fit.nearest = root;
            fit.root_index = k;
        }
    }
    return fit;
}

VerificationReport make_report(std::string identity, std::vector<int> indices,
                               const RootOfUnityFit& fit, double tol)
{
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.indices = std::move(indices);
    rep.ratio = fit.ratio;
    rep.nearest = fit.nearest;
    rep.residual = fit.residual;
    rep.pass = fit.pass(tol);
    return rep;
}

Complex big_theta_i0(const Partition& p, const ThetaConstantCache& tc)
{
    require(p.speciality() == 0, "big theta products need a speciality-0 partition");
    Complex prod(1.0);
    for (int j : p.j_set()) {
        prod *= theta_of_set(tc, p.genus(), p.t_set(j));
    }
    return prod;
}

Complex big_theta_i1(const Partition& p, int n, const ThetaConstantCache& tc)
{
    const std::vector<int> i1 = p.i1_set(n);
    Complex prod(1.0);
    for (int j : p.j_set()) {
        std::vector<int> s = i1;
        s.push_back(j);
        std::sort(s.begin(), s.end());
        prod *= theta_of_set(tc, p.genus(), s);
    }
    return prod;
}

RootOfUnityFit first_thomae_check(const HyperellipticCurve& curve, const Partition& p,
                                  const PeriodData& periods, const ThetaConstantCache& tc)
{
    require(p.speciality() == 0, "first Thomae needs a speciality-0 partition");
    const int g = curve.genus();
    const Complex lhs = theta_of_set(tc, g, p.i_set());
    const Complex rhs = stable_sqrt(periods.det_a / std::pow(2.0 * kPi, g)) *
                        std::pow(nabla(curve, p), 0.25);
    if (std::abs(rhs) == 0.0) {
        throw std::domain_error("first Thomae: vanishing right-hand side");
    }
    return fit_root_of_unity(lhs / rhs, 8);
}

RootOfUnityFit first_thomae_check(const HyperellipticCurve& curve, const Partition& p,
                                  const PeriodData& periods, double series_tol)
{
    const ThetaConstantCache tc(periods.tau, series_tol);
    return first_thomae_check(curve, p, periods, tc);
}

RootOfUnityFit corollary1_check(const HyperellipticCurve& curve, const std::vector<int>& s_set,
                                const std::vector<int>& t_set, int k, int l,
                                const ThetaConstantCache& tc)
{
    const int g = curve.genus();
    const int n_finite = 2 * g + 1;
    require(static_cast<int>(s_set.size()) == g - 1 && static_cast<int>(t_set.size()) == g - 1,
            "S and T must have g-1 indices");
    require(k != l, "k and l must differ");
    std::vector<int> used = set_union(s_set, t_set);
    require(std::adjacent_find(used.begin(), used.end()) == used.end(), "S and T must be disjoint");
    require(!contains(used, k) && !contains(used, l), "k and l must avoid S and T");
    used.push_back(k);
    used.push_back(l);
    std::sort(used.begin(), used.end());
    int m = 0;
    for (int v = 1; v <= n_finite; ++v) {
        if (!contains(used, v)) {
            require(m == 0, "exactly one index must remain");
            m = v;
        }
    }
    require(m != 0, "exactly one index must remain");

    const Complex tks = theta_of_set(tc, g, set_union({k}, s_set));
    const Complex tkt = theta_of_set(tc, g, set_union({k}, t_set));
    const Complex tls = theta_of_set(tc, g, set_union({l}, s_set));
    const Complex tlt = theta_of_set(tc, g, set_union({l}, t_set));
    const Complex theta_ratio = (tks * tks * tkt * tkt) / (tls * tls * tlt * tlt);
    const double branch_ratio = (curve.point(l) - curve.point(m)) / (curve.point(k) - curve.point(m));
    return fit_root_of_unity(branch_ratio / theta_ratio, 4);
}

RootOfUnityFit corollary2_check(const HyperellipticCurve& curve, const Partition& p, int k,
                                int n, int i, int j, const ThetaConstantCache& tc)
{
    const int g = curve.genus();
    require(p.speciality() == 0, "needs a speciality-0 partition");
    require(k != n && contains(p.i_set(), k) && contains(p.i_set(), n),
            "k and n must be distinct members of I_0");
    require(i != j && contains(p.j_set(), i) && contains(p.j_set(), j),
            "i and j must be distinct members of J_0");

    std::vector<int> sk, skn, tij;
    for (int v : p.i_set()) {
        if (v != k) {
            sk.push_back(v);
        }
        if (v != k && v != n) {
            skn.push_back(v);
        }
    }
    for (int v : p.j_set()) {
        if (v != i && v != j) {
            tij.push_back(v);
        }
    }

    const double ek = curve.point(k), en = curve.point(n);
    double num = 1.0;
    for (int v : p.j_set()) {
        num *= (ek - curve.point(v));
    }
    double den = (ek - en) * (ek - en);
    for (int v : sk) {
        den *= (ek - curve.point(v));
    }
    const double lhs = num / den;

    const auto p4 = [](Complex z) { return z * z * z * z; };
    const Complex rhs_num = p4(theta_of_set(tc, g, set_union({i}, sk))) *
                            p4(theta_of_set(tc, g, set_union({j}, sk))) *
                            p4(theta_of_set(tc, g, set_union({n}, tij)));
    const Complex rhs_den = p4(theta_of_set(tc, g, set_union({i, j}, skn))) *
                            p4(theta_of_set(tc, g, set_union({i}, tij))) *
                            p4(theta_of_set(tc, g, set_union({j}, tij)));
    return fit_root_of_unity(Complex(lhs) / (rhs_num / rhs_den), 2);
}

RootOfUnityFit second_thomae_check(const HyperellipticCurve& curve, const Partition& p, int n,
                                   const PeriodData& periods, const ThetaConstantCache& tc)
{
    const int g = curve.genus();
    const Characteristic c = partition_characteristic(g, p.i1_set(n));
    const CVector& lhs = tc.gradient(c);

    std::vector<double> vals;
    for (int v : p.i1_set(n)) {
        vals.push_back(curve.point(v));
    }
    const std::vector<double> s = symmetric_functions_alt(vals); // s_0 .. s_{g-1}
    const Complex scale = stable_sqrt(periods.det_a / (std::pow(2.0, g + 2) * std::pow(kPi, g))) *
                          std::pow(nabla(curve, p.i1_set(n)), 0.25);

    CVector rhs(static_cast<std::size_t>(g), Complex(0.0));
    double rhs_max = 0.0;
    for (int j = 0; j < g; ++j) {
        Complex acc(0.0);
        for (int i = 1; i <= g; ++i) {
            acc += periods.a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j)) *
                   s[static_cast<std::size_t>(g - i)];
        }
        rhs[static_cast<std::size_t>(j)] = scale * acc;
        rhs_max = std::max(rhs_max, std::abs(rhs[static_cast<std::size_t>(j)]));
    }
    if (!(rhs_max > 0.0)) {
        throw std::domain_error("second Thomae: right-hand side vanishes");
    }

    // All components must agree on one scalar; measure against the largest.
    std::size_t ref = 0;
    for (std::size_t j = 1; j < rhs.size(); ++j) {
        if (std::abs(rhs[j]) > std::abs(rhs[ref])) {
            ref = j;
        }
    }
    const Complex ratio = lhs[ref] / rhs[ref];
    double spread = 0.0;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
        spread = std::max(spread, std::abs(lhs[j] - ratio * rhs[j]));
    }
    RootOfUnityFit fit = fit_root_of_unity(ratio, 8);
    fit.residual = std::max(fit.residual, spread / rhs_max);
    return fit;
}

RootOfUnityFit second_thomae_matrix_check(const HyperellipticCurve& curve, const Partition& p,
                                          const PeriodData& periods, const ThetaConstantCache& tc)
{
    const int g = curve.genus();
    const ComplexMatrix grads = jacobi_matrix(p, tc);

    const std::vector<double> s = s_matrix_row_major(curve, p);
    ComplexMatrix smat(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int r = 0; r < g; ++r) {
        for (int c = 0; c < g; ++c) {
            smat(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                s[static_cast<std::size_t>(r) * g + c];
        }
    }
    const Complex c2 = stable_sqrt(periods.det_a / (std::pow(2.0, g + 2) * std::pow(kPi, g)));
    ComplexMatrix rhs = periods.a.transposed() * smat;
    const std::vector<int>& i0 = p.i_set();
    for (int col = 0; col < g; ++col) {
        const double d = std::pow(nabla(curve, p.i1_set(i0[static_cast<std::size_t>(col)])), 0.25);
        for (int r = 0; r < g; ++r) {
            rhs(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) *= c2 * d;
        }
    }

    std::size_t ri = 0, rj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < rhs.rows(); ++i) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            if (std::abs(rhs(i, j)) > best) {
                best = std::abs(rhs(i, j));
                ri = i;
                rj = j;
            }
        }
    }
    if (!(best > 0.0)) {
        throw std::domain_error("second Thomae matrix form: right-hand side vanishes");
    }
    const Complex ratio = grads(ri, rj) / rhs(ri, rj);
    double spread = 0.0;
    for (std::size_t i = 0; i < rhs.rows(); ++i) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            spread = std::max(spread, std::abs(grads(i, j) - ratio * rhs(i, j)));
        }
    }
    RootOfUnityFit fit = fit_root_of_unity(ratio, 8);
    fit.residual = std::max(fit.residual, spread / best);
    return fit;
}

RootOfUnityFit chi_fourth_root_theta(const HyperellipticCurve& curve, const Partition& p, int n,
                                     const ThetaConstantCache& tc)
{
    const int g = curve.genus();
    require(g >= 2, "theta form of chi^{1/4} needs genus >= 2");
    const Complex t0 = big_theta_i0(p, tc);
    const Complex t1 = big_theta_i1(p, n, tc);
    if (std::abs(t0) == 0.0 || std::abs(t1) == 0.0) {
        throw std::domain_error("vanishing theta-constant product");
    }
    double prod = 1.0;
    for (int i : p.i1_set(n)) {
        prod *= (curve.point(n) - curve.point(i));
    }
    const Complex theta_side = std::pow(t1 / t0, 1.0 / (g - 1)) *
                               std::pow(Complex(prod), 1.0 / (2.0 * g - 2.0));
    const Complex direct = std::pow(Complex(chi(curve, p, n)), 0.25);
    return fit_root_of_unity(theta_side / direct, 8);
}

} // namespace rosenhain
