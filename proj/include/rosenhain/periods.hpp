#pragma once

#include "rosenhain/curve.hpp"
#include "rosenhain/linalg.hpp"
#include "rosenhain/theta.hpp"

namespace rosenhain {

// Period matrices of du_i = x^{i-1} dx / y over the homology basis with
// cuts [e_{2k-1}, e_{2k}] and b-cycles closed on the lower sheet.
struct PeriodData {
    ComplexMatrix a;   // a_k-periods in column k
    ComplexMatrix b;   // b_k-periods in column k
    SiegelMatrix tau;  // A^{-1} B, validated on construction
    Complex det_a;
    double cond_a = 0.0; // 1-norm condition number of A
};

// Computes A and B by real quadrature of |f|^{-1/2} over the inter-branch
// segments. The a_k-period is twice the integral over the cut
// [e_{2k-1}, e_{2k}]; the b_k-period is twice the signed sum of the gap
// integrals from e_{2k} to e_{2g+1}. On segment j (counted from the left)
// the sheet carries the phase i^{2g+1-j}, i.e. y continues analytically
// through each branch point with a factor i; that single frozen convention
// makes Im(tau) positive definite in this basis.
PeriodData compute_periods(const HyperellipticCurve& curve, double quad_tol = 1e-12);

// Report-only Siegel check (symmetry defect and min eigenvalue of Im tau).
SiegelReport validate_siegel(const ComplexMatrix& tau);

} // namespace rosenhain
