#include "rosenhain/theta.hpp"

#include "rosenhain/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rosenhain {

namespace {

constexpr double kPi = std::numbers::pi;

struct LatticeSum {
    Complex value{0.0};
    CVector gradient;
};

double tail_bound(int radius, double lambda_min, int g, bool for_gradient)
{
    double total = 0.0;
    for (int k = radius; k < radius + 2000; ++k) {
        const double shell = std::pow(2.0 * k + 3.0, g);
        double term = shell * std::exp(-kPi * lambda_min * static_cast<double>(k) * k);
        if (for_gradient) {
            term *= 2.0 * kPi * (k + 1.0);
        }
        if (term == 0.0) {
            break;
        }
        total += term;
        if (k > radius + 4 && term < total * 1e-8) {
            break;
        }
    }
    return total;
}

int radius_for(double lambda_min, int g, double tol, bool for_gradient)
{
    if (!(lambda_min > 0.0)) {
        throw std::domain_error("imaginary part of tau is not positive definite");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    for (int r = 1; r <= 512; ++r) {
        if (tail_bound(r, lambda_min, g, for_gradient) < tol) {
            return r;
        }
    }
    throw std::runtime_error("series tolerance unachievable within the radius limit");
}

// Shared kernel: enumerates m with |m + eps'/2 + shift| <= radius in
// lexicographic order and accumulates the series (and, on request, the
// differentiated series).
LatticeSum lattice_sum(const Characteristic& c, const CVector& z, const SiegelMatrix& s,
                       int radius, bool with_gradient)
{
    const int g = s.genus();
    if (static_cast<int>(z.size()) != g) {
        throw std::invalid_argument("theta argument dimension mismatch");
    }
    if (c.genus() != g) {
        throw std::invalid_argument("characteristic genus mismatch");
    }
    const ComplexMatrix& tau = s.tau();

    std::vector<double> half_top(static_cast<std::size_t>(g));
    CVector zshift(static_cast<std::size_t>(g));
    std::vector<double> imz(static_cast<std::size_t>(g), 0.0);
    bool complex_z = false;
    for (int i = 0; i < g; ++i) {
        half_top[static_cast<std::size_t>(i)] = 0.5 * c.top(i);
        zshift[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] + 0.5 * c.bottom(i);
        imz[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)].imag();
        if (imz[static_cast<std::size_t>(i)] != 0.0) {
            complex_z = true;
        }
    }

    // Window centre: the Gaussian peak sits at v = -Y^{-1} Im z.
    std::vector<double> centre_shift(static_cast<std::size_t>(g), 0.0);
    if (complex_z) {
        std::vector<double> y(static_cast<std::size_t>(g) * g);
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) {
                y[static_cast<std::size_t>(i) * g + j] = tau(i, j).imag();
            }
        }
        centre_shift = solve_real(std::move(y), imz, static_cast<std::size_t>(g));
        for (double& v : centre_shift) {
            v = -v;
        }
    }

    LatticeSum out;
    if (with_gradient) {
        out.gradient.assign(static_cast<std::size_t>(g), Complex(0.0));
    }

    std::vector<long> m(static_cast<std::size_t>(g), 0);
    std::vector<double> v(static_cast<std::size_t>(g), 0.0);
    const double r2 = static_cast<double>(radius) * radius * (1.0 + 1e-12);

    // Iterative odometer over the pruned box.
    const auto lo = [&](int dim) {
        return static_cast<long>(
            std::ceil(-half_top[static_cast<std::size_t>(dim)] + centre_shift[static_cast<std::size_t>(dim)] - radius));
    };
    const auto hi = [&](int dim) {
        return static_cast<long>(
            std::floor(-half_top[static_cast<std::size_t>(dim)] + centre_shift[static_cast<std::size_t>(dim)] + radius));
    };

    std::vector<double> partial(static_cast<std::size_t>(g) + 1, 0.0);
    int dim = 0;
    m[0] = lo(0);
    while (dim >= 0) {
        if (dim == g) {
            // complete lattice point: accumulate
            Complex quad(0.0);
            for (int i = 0; i < g; ++i) {
                Complex row(0.0);
                for (int j = 0; j < g; ++j) {
                    row += tau(i, j) * v[static_cast<std::size_t>(j)];
                }
                quad += v[static_cast<std::size_t>(i)] * row;
            }
            Complex lin(0.0);
            for (int i = 0; i < g; ++i) {
                lin += zshift[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
            }
            const Complex term = std::exp(kImag * kPi * quad + 2.0 * kImag * kPi * lin);
            out.value += term;
            if (with_gradient) {
                for (int i = 0; i < g; ++i) {
                    out.gradient[static_cast<std::size_t>(i)] +=
                        2.0 * kImag * kPi * v[static_cast<std::size_t>(i)] * term;
                }
            }
            --dim;
            if (dim >= 0) {
                ++m[static_cast<std::size_t>(dim)];
            }
            continue;
        }
        if (m[static_cast<std::size_t>(dim)] > hi(dim)) {
            --dim;
            if (dim >= 0) {
                ++m[static_cast<std::size_t>(dim)];
            }
            continue;
        }
        const double vi = static_cast<double>(m[static_cast<std::size_t>(dim)]) +
                          half_top[static_cast<std::size_t>(dim)];
        const double w = vi - centre_shift[static_cast<std::size_t>(dim)];
        const double acc = partial[static_cast<std::size_t>(dim)] + w * w;
        if (acc > r2) {
            ++m[static_cast<std::size_t>(dim)];
            continue;
        }
        v[static_cast<std::size_t>(dim)] = vi;
        partial[static_cast<std::size_t>(dim) + 1] = acc;
        ++dim;
        if (dim < g) {
            m[static_cast<std::size_t>(dim)] = lo(dim);
        }
    }
    return out;
}

int radius_for_argument(const CVector& z, const SiegelMatrix& s, double tol,
                        bool with_gradient)
{
    const int g = s.genus();
    double shift_energy = 0.0;
    bool complex_z = false;
    std::vector<double> imz(static_cast<std::size_t>(g), 0.0);
    for (int i = 0; i < g; ++i) {
        imz[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)].imag();
        if (imz[static_cast<std::size_t>(i)] != 0.0) {
            complex_z = true;
        }
    }
    if (complex_z) {
        std::vector<double> y(static_cast<std::size_t>(g) * g);
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) {
                y[static_cast<std::size_t>(i) * g + j] = s.tau()(i, j).imag();
            }
        }
        const std::vector<double> c0 = solve_real(std::move(y), imz, static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) {
            shift_energy += imz[static_cast<std::size_t>(i)] * c0[static_cast<std::size_t>(i)];
        }
    }
    const double scale = std::exp(kPi * shift_energy);
    return radius_for(s.min_imag_eigenvalue(), g, tol / scale, with_gradient);
}

} // namespace

SiegelMatrix::SiegelMatrix(ComplexMatrix tau, double symmetry_tol) : tau_(std::move(tau))
{
    if (tau_.rows() == 0 || tau_.rows() != tau_.cols()) {
        throw std::invalid_argument("tau must be a non-empty square matrix");
    }
    const SiegelReport rep = inspect(tau_);
    if (!(rep.symmetry_defect < symmetry_tol)) {
        throw std::domain_error("tau is not symmetric within tolerance");
    }
    if (!(rep.min_imag_eigenvalue > 0.0)) {
        throw std::domain_error("imaginary part of tau is not positive definite");
    }
    lambda_min_ = rep.min_imag_eigenvalue;
}

SiegelReport SiegelMatrix::inspect(const ComplexMatrix& tau)
{
    if (tau.rows() == 0 || tau.rows() != tau.cols()) {
        throw std::invalid_argument("tau must be a non-empty square matrix");
    }
    const std::size_t n = tau.rows();
    SiegelReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rep.symmetry_defect = std::max(rep.symmetry_defect, std::abs(tau(i, j) - tau(j, i)));
        }
    }
    std::vector<double> y(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // symmetrised imaginary part, so the eigensolver input is exact
            y[i * n + j] = 0.5 * (tau(i, j).imag() + tau(j, i).imag());
        }
    }
    rep.min_imag_eigenvalue = symmetric_eigenvalues(std::move(y), n).front();
    return rep;
}

int truncation_radius(const SiegelMatrix& tau, double tol, bool for_gradient)
{
    return radius_for(tau.min_imag_eigenvalue(), tau.genus(), tol, for_gradient);
}

Complex theta(const Characteristic& c, const CVector& z, const SiegelMatrix& tau, double tol)
{
    const int radius = radius_for_argument(z, tau, tol, false);
    return lattice_sum(c, z, tau, radius, false).value;
}

Complex theta_constant(const Characteristic& c, const SiegelMatrix& tau, double tol)
{
    return theta(c, CVector(static_cast<std::size_t>(tau.genus()), Complex(0.0)), tau, tol);
}

Complex theta_truncated(const Characteristic& c, const CVector& z, const SiegelMatrix& tau,
                        int radius)
{
    if (radius < 1) {
        throw std::invalid_argument("radius must be at least 1");
    }
    return lattice_sum(c, z, tau, radius, false).value;
}

CVector theta_gradient(const Characteristic& c, const SiegelMatrix& tau, double tol)
{
    if (c.is_even()) {
        throw std::domain_error("gradient theta constant of an even characteristic vanishes identically");
    }
    const CVector zero(static_cast<std::size_t>(tau.genus()), Complex(0.0));
    const int radius = radius_for_argument(zero, tau, tol, true);
    return lattice_sum(c, zero, tau, radius, true).gradient;
}

ComplexMatrix jacobi_matrix(const Partition& p, const SiegelMatrix& tau, double tol)
{
    if (p.speciality() != 0) {
        throw std::invalid_argument("Jacobi matrix needs a speciality-0 partition");
    }
    const int g = p.genus();
    if (g != tau.genus()) {
        throw std::invalid_argument("partition and tau genus mismatch");
    }
    ComplexMatrix j(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    const std::vector<int>& i0 = p.i_set();
    for (int n = 0; n < g; ++n) {
        const Characteristic cn = partition_characteristic(g, p.i1_set(i0[static_cast<std::size_t>(n)]));
        const CVector grad = theta_gradient(cn, tau, tol);
        for (int r = 0; r < g; ++r) {
            j(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = grad[static_cast<std::size_t>(r)];
        }
    }
    return j;
}

ComplexMatrix jacobi_matrix(const Partition& p, const ThetaConstantCache& tc)
{
    if (p.speciality() != 0) {
        throw std::invalid_argument("Jacobi matrix needs a speciality-0 partition");
    }
    const int g = p.genus();
    if (g != tc.tau().genus()) {
        throw std::invalid_argument("partition and tau genus mismatch");
    }
    ComplexMatrix j(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    const std::vector<int>& i0 = p.i_set();
    for (int n = 0; n < g; ++n) {
        const Characteristic cn = partition_characteristic(g, p.i1_set(i0[static_cast<std::size_t>(n)]));
        const CVector& grad = tc.gradient(cn);
        for (int r = 0; r < g; ++r) {
            j(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = grad[static_cast<std::size_t>(r)];
        }
    }
    return j;
}

ThetaConstantCache::ThetaConstantCache(const SiegelMatrix& tau, double tol)
    : tau_(tau), tol_(tol)
{
    const int g = tau_.genus();
    const std::size_t count = std::size_t{1} << (2 * g);
    constants_.assign(count, Complex(0.0));
    gradients_.assign(count, std::nullopt);
    parallel_for(count, [&](std::size_t idx) {
        const Characteristic c = Characteristic::from_packed(g, static_cast<std::uint32_t>(idx));
        if (c.is_even()) {
            constants_[idx] = theta_constant(c, tau_, tol_);
        } else {
            gradients_[idx] = theta_gradient(c, tau_, tol_);
        }
    });
}

Complex ThetaConstantCache::constant(const Characteristic& c) const
{
    if (c.genus() != tau_.genus()) {
        throw std::invalid_argument("characteristic genus mismatch");
    }
    return constants_[c.packed()];
}

const CVector& ThetaConstantCache::gradient(const Characteristic& c) const
{
    if (c.genus() != tau_.genus()) {
        throw std::invalid_argument("characteristic genus mismatch");
    }
    const auto& slot = gradients_[c.packed()];
    if (!slot) {
        throw std::domain_error("gradient theta constant of an even characteristic vanishes identically");
    }
    return *slot;
}

} // namespace rosenhain
