#pragma once

#include "rosenhain/curve.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/report.hpp"
#include "rosenhain/theta.hpp"

namespace rosenhain {

// Theta-constant products attached to a speciality-0 partition:
//   big_theta_i0 = prod over j in J_0 of theta[eps(J_0 \ {j})]
//   big_theta_i1 = prod over j in J_0 of theta[eps(I_1^(n) u {j})]
Complex big_theta_i0(const Partition& p, const ThetaConstantCache& tc);
Complex big_theta_i1(const Partition& p, int n, const ThetaConstantCache& tc);

// First Thomae theorem: theta[eps(I_0)] = eps (det A / (2 pi)^g)^{1/2}
// nabla(I_0)^{1/4} with eps^8 = 1. Returns the fitted eighth root of the
// ratio lhs/rhs.
RootOfUnityFit first_thomae_check(const HyperellipticCurve& curve, const Partition& p,
                                  const PeriodData& periods, const ThetaConstantCache& tc);
RootOfUnityFit first_thomae_check(const HyperellipticCurve& curve, const Partition& p,
                                  const PeriodData& periods, double series_tol = 1e-12);

// Branch-point ratio through squared theta constants (fourth roots):
//   (e_l - e_m)/(e_k - e_m) = eps theta^2{k,S} theta^2{k,T} /
//                                 (theta^2{l,S} theta^2{l,T}).
RootOfUnityFit corollary1_check(const HyperellipticCurve& curve, const std::vector<int>& s_set,
                                const std::vector<int>& t_set, int k, int l,
                                const ThetaConstantCache& tc);

// Fourth-power ratio identity for k, n in I_0 and i, j in J_0 (sign only).
RootOfUnityFit corollary2_check(const HyperellipticCurve& curve, const Partition& p, int k,
                                int n, int i, int j, const ThetaConstantCache& tc);

// Second Thomae theorem for the gradient theta constants of eps(I_1^(n)):
//   theta_j[eps(I_1^(n))] = eps (det A / (2^{g+2} pi^g))^{1/2}
//       nabla(I_1^(n))^{1/4} sum_i A_{i,j} s_{g-i}(I_1^(n)).
// The contraction runs over the row index of A (the gradient components mix
// through A^T), which the genus-2/3 numerics pin down. All g components must
// share one scalar ratio; that ratio is fitted to eighth roots.
RootOfUnityFit second_thomae_check(const HyperellipticCurve& curve, const Partition& p, int n,
                                   const PeriodData& periods, const ThetaConstantCache& tc);

// Matrix form over all n at once: columnwise gradients against
// (det A / 2^{g+2} pi^g)^{1/2} A^T S D with D = Diag(nabla(I_1^(n))^{1/4}).
RootOfUnityFit second_thomae_matrix_check(const HyperellipticCurve& curve, const Partition& p,
                                          const PeriodData& periods, const ThetaConstantCache& tc);

// Theta-only fourth root of chi_n (g >= 2):
//   chi_n^{1/4} = eps (big_theta_i1 / big_theta_i0)^{1/(g-1)}
//                     (prod_{i in I_0, i != n} (e_n - e_i))^{1/(2g-2)}.
// Principal branches everywhere; the ratio against the direct chi_n^{1/4}
// is fitted to eighth roots.
RootOfUnityFit chi_fourth_root_theta(const HyperellipticCurve& curve, const Partition& p, int n,
                                     const ThetaConstantCache& tc);

} // namespace rosenhain
