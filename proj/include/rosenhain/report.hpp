#pragma once

#include "rosenhain/linalg.hpp"

#include <string>
#include <vector>

namespace rosenhain {

// Measured ratio of two sides of an identity, fitted to the nearest n-th
// root of unity. The identities verified here hold only up to such a factor.
struct RootOfUnityFit {
    Complex ratio{0.0};
    Complex nearest{1.0};
    double residual = 0.0; // |ratio - nearest|
    int root_index = 0;    // nearest = exp(2 pi i root_index / order)
    int order = 8;

    bool pass(double tol) const { return residual < tol; }
};

// Nearest root over exp(2 pi i k / order), k = 0..order-1.
RootOfUnityFit fit_root_of_unity(Complex ratio, int order);

struct VerificationReport {
    std::string identity;
    std::vector<int> indices;
    Complex ratio{0.0};
    Complex nearest{1.0};
    double residual = 0.0;
    bool pass = false;
};

VerificationReport make_report(std::string identity, std::vector<int> indices,
                               const RootOfUnityFit& fit, double tol);

} // namespace rosenhain
