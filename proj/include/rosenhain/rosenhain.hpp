#pragma once

#include "rosenhain/curve.hpp"
#include "rosenhain/periods.hpp"
#include "rosenhain/report.hpp"
#include "rosenhain/theta.hpp"
#include "rosenhain/thomae.hpp"

#include <array>
#include <vector>

namespace rosenhain {

// Comparison of a reconstructed matrix against a reference, allowed to be
// off by one global root of unity. max_rel_error is measured after removing
// the nearest root, relative to the largest reference entry.
struct MatrixRootFit {
    ComplexMatrix candidate;
    RootOfUnityFit fit;
    double max_rel_error = 0.0;

    bool pass(double tol) const { return fit.pass(tol) && max_rel_error < tol; }
};

MatrixRootFit compare_up_to_global_root(ComplexMatrix candidate, const ComplexMatrix& reference,
                                        int order = 8);

struct ColumnRootFit {
    RootOfUnityFit fit;
    double max_rel_error = 0.0;

    bool pass(double tol) const { return fit.pass(tol) && max_rel_error < tol; }
};

std::vector<ColumnRootFit> compare_columns_up_to_roots(const ComplexMatrix& candidate,
                                                       const ComplexMatrix& reference,
                                                       int order = 8);

// Riemann-Jacobi derivative formula:
//   det J = +- pi^g theta[eps(T_0)] prod_{n=1}^{g+1} theta[eps(T_n)],
// where J collects the gradients of theta[eps(I_1^(n))] and T_0 = J_0.
RootOfUnityFit riemann_jacobi_check(const Partition& p, const ThetaConstantCache& tc);

// A^{-1} from gradient theta constants, chi fourth roots and the symmetric
// function matrix:
//   A^{-1} = eps / (2 pi^g big_theta_i0) Adj(J) D_1 S^T,
// J in row-gradient layout, D_1 = Diag(chi_{i_n}^{1/4}) with principal
// fourth roots. Branch points enter through D_1 and S.
ComplexMatrix a_inverse_general(const HyperellipticCurve& curve, const Partition& p,
                                const ThetaConstantCache& tc);
// Column m of the same matrix assembled directly from the column formula.
CVector a_inverse_general_column(const HyperellipticCurve& curve, const Partition& p, int m,
                                 const ThetaConstantCache& tc);
MatrixRootFit a_inverse_general_check(const HyperellipticCurve& curve, const Partition& p,
                                      const PeriodData& periods, const ThetaConstantCache& tc);

// The non-inverted period matrix: A = eps 2 / theta[eps(J_0)] S^{-T} D_1^{-1} J.
ComplexMatrix a_direct_general(const HyperellipticCurve& curve, const Partition& p,
                               const ThetaConstantCache& tc);
MatrixRootFit a_direct_general_check(const HyperellipticCurve& curve, const Partition& p,
                                     const PeriodData& periods, const ThetaConstantCache& tc);

// Genus-2 gradient pairing D[d1; d2] = theta_1[d1] theta_2[d2] - theta_2[d1] theta_1[d2].
Complex rosenhain_d(const Characteristic& d1, const Characteristic& d2,
                    const ThetaConstantCache& tc);

// The 15 genus-2 derivative identities with pinned signs. Each row states
// D(d1, d2) = pi^2 * product of four even theta constants; residuals are
// measured without any root-of-unity slack.
struct AppendixARow {
    Characteristic d1, d2;
    std::array<Characteristic, 4> rhs;
    Characteristic margin; // mod-2 sum of the four rhs characteristics
};
const std::vector<AppendixARow>& appendix_a_rows();
std::vector<VerificationReport> appendix_a_suite(const ThetaConstantCache& tc, double tol);
bool appendix_a_margins_consistent();

// Genus-2 triple relation: for distinct i, j, k in {1..6},
//   theta_n[eps_i] Theta_{jk} +- theta_n[eps_j] Theta_{ik} = theta_n[eps_k] Theta_{ij}
// simultaneously for n = 1, 2 with a single sign. The report's indices carry
// {i, j, k, sign}.
VerificationReport triple_relation_check(int i, int j, int k, const ThetaConstantCache& tc,
                                         double tol);

// Theta product over pair {a, b} within a chosen triple of indices from
// {1..6}: prod over x outside the triple of theta[eps({a, b, x})].
Complex pair_theta_product(int a, int b, const std::array<int, 3>& triple,
                           const ThetaConstantCache& tc);

// Theta-only genus-2 inverse period matrix for a curve normalized to
// e_i = 0, e_j = 1 (tau computed after normalization):
//   A^{-1} = 1 / (2 pi^2 Theta_{ij}^2) [ -Theta_{j6} theta_2[eps_i]   Theta_{ij} theta_2[K]
//                                         Theta_{j6} theta_1[eps_i]  -Theta_{ij} theta_1[K] ].
ComplexMatrix a_inverse_genus2(int i, int j, const ThetaConstantCache& tc);

// Matching theta-only A for the same normalization.
ComplexMatrix a_genus2(int i, int j, const ThetaConstantCache& tc);

// Theta-only genus-3 inverse period matrix for a curve normalized to
// e_1 = 0, e_2 = 1 and I_0 = {1,2,3}; e_3 cannot be expressed through theta
// constants and must be supplied. Columns carry square roots of the
// big-theta products and quarter powers of e_3 and e_3 - 1.
ComplexMatrix a_inverse_genus3(const ThetaConstantCache& tc, double e3);

// Affine normalization x -> (x - e_i) / (e_j - e_i), i < j; preserves the
// ordering of the branch points and sends (e_i, e_j) to (0, 1).
HyperellipticCurve moebius_normalize(const HyperellipticCurve& curve, int i, int j);

// Directional derivatives of theta[eps(I_1)] along the columns U_m of a
// given A^{-1} recover the alternating symmetric functions of the branch
// points indexed by I_1 (size g-1):
//   dU_m theta / dU_n theta = s_{g-m}(I_1) / s_{g-n}(I_1).
ComplexMatrix bolza_ratio_matrix(int g, const std::vector<int>& i1_set, const ThetaConstantCache& tc,
                                 const ComplexMatrix& a_inv);
// Ratios against the last column (s_0 = 1): entry d is s_d(I_1), d = 0..g-1.
CVector bolza_symmetric_functions(int g, const std::vector<int>& i1_set,
                                  const ThetaConstantCache& tc, const ComplexMatrix& a_inv);
// Genus 2: e_i = -dU_1 theta[eps_i] / dU_2 theta[eps_i] for i = 1..5.
std::vector<double> bolza_recover_genus2(const ThetaConstantCache& tc, const ComplexMatrix& a_inv);

} // namespace rosenhain
