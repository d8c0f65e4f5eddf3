#pragma once

// Test-only oracles. Each one reimplements a quantity along a path that is
// independent of the library code it checks: plain cube-window lattice sums
// for theta, tanh-sinh quadrature on the untransformed variable for the
// periods, finite differences for gradients.

#include "rosenhain/characteristic.hpp"
#include "rosenhain/curve.hpp"
#include "rosenhain/linalg.hpp"
#include "rosenhain/theta.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracles {

using rosenhain::Characteristic;
using rosenhain::Complex;
using rosenhain::ComplexMatrix;
using rosenhain::CVector;
using rosenhain::HyperellipticCurve;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Direct lattice sum over the integer cube |n_i| <= window, transcribing the
// series definition with no truncation logic.
inline Complex brute_theta(const Characteristic& c, const CVector& z, const ComplexMatrix& tau,
                           int window)
{
    const int g = c.genus();
    std::vector<long> n(static_cast<std::size_t>(g), -window);
    Complex total(0.0);
    while (true) {
        Complex quad(0.0), lin(0.0);
        for (int i = 0; i < g; ++i) {
            const double vi = static_cast<double>(n[static_cast<std::size_t>(i)]) + 0.5 * c.top(i);
            for (int j = 0; j < g; ++j) {
                const double vj = static_cast<double>(n[static_cast<std::size_t>(j)]) + 0.5 * c.top(j);
                quad += tau(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * vi * vj;
            }
            lin += (z[static_cast<std::size_t>(i)] + 0.5 * c.bottom(i)) * vi;
        }
        total += std::exp(kI * kPi * quad + 2.0 * kI * kPi * lin);
        int dim = 0;
        while (dim < g && ++n[static_cast<std::size_t>(dim)] > window) {
            n[static_cast<std::size_t>(dim)] = -window;
            ++dim;
        }
        if (dim == g) {
            break;
        }
    }
    return total;
}

// Literal transcription of the explicit genus-2 expansion with the quadratic
// form written out term by term.
inline Complex genus2_window_sum(const Characteristic& c, const ComplexMatrix& tau, int window)
{
    if (c.genus() != 2) {
        throw std::invalid_argument("genus-2 oracle");
    }
    Complex total(0.0);
    for (long n1 = -window; n1 <= window; ++n1) {
        for (long n2 = -window; n2 <= window; ++n2) {
            const double p = n1 + 0.5 * c.top(0);
            const double q = n2 + 0.5 * c.top(1);
            const Complex expo = p * p * tau(0, 0) + 2.0 * p * q * tau(0, 1) + q * q * tau(1, 1) +
                                 c.bottom(0) * p + c.bottom(1) * q;
            total += std::exp(kI * kPi * expo);
        }
    }
    return total;
}

// tanh-sinh rule for integrals g(x) / sqrt((x-a)(b-x)); works on the
// original variable, unlike the library. The endpoint distances are handed
// to the integrand in a cancellation-free form: near the ends the direct
// difference x - a loses every significant digit while the transform knows
// it exactly as half * (1 + tanh(s)).
inline double tanh_sinh_sqrt_endpoints(const std::function<double(double, double, double)>& g,
                                       double a, double b, double tol)
{
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double prev = 0.0;
    for (int level = 2; level <= 12; ++level) {
        const double h = 1.0 / static_cast<double>(1 << level);
        double sum = 0.0;
        for (long k = -8L * (1 << level); k <= 8L * (1 << level); ++k) {
            const double t = k * h;
            const double s = std::sinh(t) * kPi / 2.0;
            // 1 +- tanh(s) without subtraction
            const double e2 = std::exp(-2.0 * std::abs(s));
            const double small = 2.0 * e2 / (1.0 + e2);
            const double large = 2.0 / (1.0 + e2);
            const double xa = half * (s >= 0.0 ? large : small); // x - a
            const double xb = half * (s >= 0.0 ? small : large); // b - x
            const double x = mid + half * std::tanh(s);
            const double w = half * (kPi / 2.0) * std::cosh(t) / std::pow(std::cosh(s), 2);
            if (w < 1e-290 || xa <= 0.0 || xb <= 0.0) {
                continue;
            }
            sum += w * g(x, xa, xb) / std::sqrt(xa * xb);
        }
        sum *= h;
        if (level > 3 && std::abs(sum - prev) < tol * (1.0 + std::abs(sum))) {
            return sum;
        }
        prev = sum;
    }
    return prev;
}

// Full a-period matrix by the same homology/phase conventions but a
// different quadrature route.
inline ComplexMatrix oracle_a_matrix(const HyperellipticCurve& curve, double tol)
{
    const int g = curve.genus();
    ComplexMatrix a(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int k = 1; k <= g; ++k) {
        const int seg = 2 * k - 1;
        const int rights = 2 * g + 1 - seg;
        // 1 / i^rights
        const Complex phases[4] = {Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1)};
        const Complex inv_phase = phases[rights % 4];
        for (int i = 1; i <= g; ++i) {
            const double val = tanh_sinh_sqrt_endpoints(
                [&](double x, double, double) {
                    double p = 1.0;
                    for (int q = 1; q <= 2 * g + 1; ++q) {
                        if (q == seg || q == seg + 1) {
                            continue;
                        }
                        p *= std::abs(x - curve.point(q));
                    }
                    return std::pow(x, i - 1) / std::sqrt(p);
                },
                curve.point(seg), curve.point(seg + 1), tol);
            a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) =
                2.0 * inv_phase * val;
        }
    }
    return a;
}

// Azygetic test along a different route: parity additivity.
inline bool azygetic_parity_oracle(const Characteristic& c1, const Characteristic& c2,
                                   const Characteristic& c3)
{
    const int total = c1.parity() + c2.parity() + c3.parity() + (c1 + c2 + c3).parity();
    return total % 2 == 1;
}

} // namespace oracles
