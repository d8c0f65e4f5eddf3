#include "rosenhain/periods.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rosenhain {

namespace {

constexpr double kPi = std::numbers::pi;

struct GLRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre rule by Newton iteration on the Legendre recurrence.
GLRule make_gl_rule(int n)
{
    GLRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

const GLRule& gl24()
{
    static const GLRule rule = make_gl_rule(24);
    return rule;
}

using VecFn = std::function<void(double, std::vector<double>&)>;

std::vector<double> gl_panel(const VecFn& fn, double a, double b, std::size_t dim)
{
    const GLRule& rule = gl24();
    std::vector<double> acc(dim, 0.0), val(dim, 0.0);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        fn(mid + half * rule.nodes[q], val);
        for (std::size_t i = 0; i < dim; ++i) {
            acc[i] += rule.weights[q] * val[i];
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        acc[i] *= half;
    }
    return acc;
}

void adapt(const VecFn& fn, double a, double b, const std::vector<double>& whole,
           double abs_tol, int depth, std::vector<double>& out)
{
    if (depth > 48) {
        throw std::runtime_error("quadrature did not converge");
    }
    const double mid = 0.5 * (a + b);
    const std::vector<double> left = gl_panel(fn, a, mid, whole.size());
    const std::vector<double> right = gl_panel(fn, mid, b, whole.size());
    double diff = 0.0;
    for (std::size_t i = 0; i < whole.size(); ++i) {
        diff = std::max(diff, std::abs(left[i] + right[i] - whole[i]));
    }
    if (diff <= abs_tol) {
        for (std::size_t i = 0; i < whole.size(); ++i) {
            out[i] += left[i] + right[i];
        }
        return;
    }
    adapt(fn, a, mid, left, 0.5 * abs_tol, depth + 1, out);
    adapt(fn, mid, b, right, 0.5 * abs_tol, depth + 1, out);
}

std::vector<double> integrate_adaptive(const VecFn& fn, double a, double b, double rel_tol,
                                       std::size_t dim)
{
    const std::vector<double> whole = gl_panel(fn, a, b, dim);
    double scale = 1.0;
    for (double v : whole) {
        scale = std::max(scale, std::abs(v));
    }
    std::vector<double> out(dim, 0.0);
    adapt(fn, a, b, whole, rel_tol * scale, 0, out);
    return out;
}

// Integrals of x^{i-1} |f(x)|^{-1/2} over [e_j, e_{j+1}], i = 1..g. The
// substitution x = mid + half*sin(theta) absorbs the two endpoint roots,
// leaving a smooth integrand in theta.
std::vector<double> segment_integrals(const HyperellipticCurve& curve, int seg, double quad_tol)
{
    const int g = curve.genus();
    const double a = curve.point(seg), b = curve.point(seg + 1);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const VecFn fn = [&](double theta, std::vector<double>& val) {
        const double x = mid + half * std::sin(theta);
        double rest = 1.0;
        for (int k = 1; k <= static_cast<int>(curve.num_finite()); ++k) {
            if (k == seg || k == seg + 1) {
                continue;
            }
            rest *= std::abs(x - curve.point(k));
        }
        const double base = 1.0 / std::sqrt(rest);
        double xpow = 1.0;
        for (int i = 0; i < g; ++i) {
            val[static_cast<std::size_t>(i)] = xpow * base;
            xpow *= x;
        }
    };
    return integrate_adaptive(fn, -0.5 * kPi, 0.5 * kPi, quad_tol, static_cast<std::size_t>(g));
}

} // namespace

PeriodData compute_periods(const HyperellipticCurve& curve, double quad_tol)
{
    if (!(quad_tol > 0.0)) {
        throw std::invalid_argument("quadrature tolerance must be positive");
    }
    const int g = curve.genus();
    const int segs = 2 * g; // finite inter-branch segments used by the cycles

    std::vector<std::vector<double>> t(static_cast<std::size_t>(segs) + 1);
    for (int j = 1; j <= segs; ++j) {
        t[static_cast<std::size_t>(j)] = segment_integrals(curve, j, quad_tol);
    }

    // 1 / y phase on segment j: y = i^{2g+1-j} sqrt|f| on the upper sheet.
    const auto inv_phase = [&](int j) {
        static const Complex table[4] = {Complex(1, 0), Complex(0, -1), Complex(-1, 0),
                                         Complex(0, 1)};
        return table[(2 * g + 1 - j) % 4];
    };

    ComplexMatrix a(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    ComplexMatrix b(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int k = 1; k <= g; ++k) {
        const Complex pa = 2.0 * inv_phase(2 * k - 1);
        for (int i = 0; i < g; ++i) {
            a(static_cast<std::size_t>(i), static_cast<std::size_t>(k - 1)) =
                pa * t[static_cast<std::size_t>(2 * k - 1)][static_cast<std::size_t>(i)];
        }
        for (int j = k; j <= g; ++j) {
            const Complex pb = 2.0 * inv_phase(2 * j);
            for (int i = 0; i < g; ++i) {
                b(static_cast<std::size_t>(i), static_cast<std::size_t>(k - 1)) +=
                    pb * t[static_cast<std::size_t>(2 * j)][static_cast<std::size_t>(i)];
            }
        }
    }

    const ComplexMatrix a_inv = a.inverse();
    ComplexMatrix tau_mat = a_inv * b;
    try {
        SiegelMatrix tau(std::move(tau_mat), 1e-8);
        return PeriodData{a, b, std::move(tau), a.determinant(), a.norm1() * a_inv.norm1()};
    } catch (const std::domain_error& e) {
        // Not a user error: the frozen sheet convention failed to produce a
        // Riemann matrix for this input.
        throw std::runtime_error(std::string("period matrix failed Siegel validation: ") + e.what());
    }
}

SiegelReport validate_siegel(const ComplexMatrix& tau)
{
    return SiegelMatrix::inspect(tau);
}

} // namespace rosenhain
