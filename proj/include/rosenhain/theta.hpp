#pragma once

#include "rosenhain/characteristic.hpp"
#include "rosenhain/curve.hpp"
#include "rosenhain/linalg.hpp"

#include <optional>
#include <vector>

namespace rosenhain {

struct SiegelReport {
    double symmetry_defect = 0.0;     // max |tau_ij - tau_ji|
    double min_imag_eigenvalue = 0.0; // smallest eigenvalue of Im tau
};

// Riemann matrix in the Siegel upper half-space: symmetric with positive
// definite imaginary part. Construction validates; inspect() only reports.
class SiegelMatrix {
public:
    explicit SiegelMatrix(ComplexMatrix tau, double symmetry_tol = 1e-10);
    static SiegelReport inspect(const ComplexMatrix& tau);

    const ComplexMatrix& tau() const { return tau_; }
    int genus() const { return static_cast<int>(tau_.rows()); }
    double min_imag_eigenvalue() const { return lambda_min_; }

private:
    ComplexMatrix tau_;
    double lambda_min_ = 0.0;
};

// Smallest integer radius R such that summing every lattice point with
// |m + eps'/2| <= R leaves a tail below tol. Omitted terms satisfy
// |term| <= exp(-pi lambda_min |v|^2), and the shell count is bounded by
// (2k+3)^g, so the bound sum_{k>=R} (2k+3)^g exp(-pi lambda_min k^2) is
// evaluated numerically; it is monotone in both R and tol.
int truncation_radius(const SiegelMatrix& tau, double tol, bool for_gradient = false);

// theta[eps](z; tau) as the truncated lattice sum
//   sum_m exp{ i pi v^T tau v + 2 i pi (z + eps/2)^T v },  v = m + eps'/2,
// with the omitted tail below tol. For Im z != 0 the enumeration window is
// recentred at -eps'/2 - Y^{-1} Im z and the tail budget is scaled by
// exp(pi b^T Y^{-1} b); enumeration order is fixed, so results are
// deterministic.
Complex theta(const Characteristic& c, const CVector& z, const SiegelMatrix& tau,
              double tol = 1e-12);
Complex theta_constant(const Characteristic& c, const SiegelMatrix& tau, double tol = 1e-12);

// Same sum restricted to |m + eps'/2| <= radius, no tail control. Exists so
// refinement behaviour can be tested directly.
Complex theta_truncated(const Characteristic& c, const CVector& z, const SiegelMatrix& tau,
                        int radius);

// Gradient theta constants theta_k[c] = d theta / d z_k at z = 0, by the
// term-by-term differentiated series (factor 2 i pi v_k). Even
// characteristics are rejected: their gradient vanishes identically.
CVector theta_gradient(const Characteristic& c, const SiegelMatrix& tau, double tol = 1e-12);

// g x g matrix whose column n is the gradient of theta[eps(I_1^(n))],
// n running over sorted I_0. All those characteristics are odd for a
// speciality-0 partition of an odd-model curve.
ComplexMatrix jacobi_matrix(const Partition& p, const SiegelMatrix& tau, double tol = 1e-12);

class ThetaConstantCache;
// Cache-backed variant used by the verification suites.
ComplexMatrix jacobi_matrix(const Partition& p, const ThetaConstantCache& tc);

// Precomputes every theta constant (even characteristics) and gradient
// (odd characteristics) for one tau. 4^g entries; read-only afterwards, so
// verification suites can share it across threads.
class ThetaConstantCache {
public:
    ThetaConstantCache(const SiegelMatrix& tau, double tol = 1e-12);

    const SiegelMatrix& tau() const { return tau_; }
    double tol() const { return tol_; }
    Complex constant(const Characteristic& c) const;
    const CVector& gradient(const Characteristic& c) const; // odd characteristics only

private:
    SiegelMatrix tau_;
    double tol_;
    std::vector<Complex> constants_;
    std::vector<std::optional<CVector>> gradients_;
};

} // namespace rosenhain
