#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rosenhain {

// Monic real polynomial kept in root form; evaluation multiplies the linear
// factors, which is exact enough at the scales handled here.
class MonicPoly {
public:
    explicit MonicPoly(std::vector<double> roots);
    double operator()(double x) const;
    // Coefficients of prod (x - r_k), highest degree first, leading 1.
    std::vector<double> coefficients() const;
    const std::vector<double>& roots() const { return roots_; }
    std::size_t degree() const { return roots_.size(); }

private:
    std::vector<double> roots_;
};

// Odd-model hyperelliptic curve y^2 = (x - e_1) ... (x - e_{2g+1}) with real,
// strictly increasing finite branch points and one more branch point at
// infinity (index 2g+2).
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(std::vector<double> branch_points);

    // Even model with 2g+2 finite real roots: sends the designated root to
    // infinity through x -> 1/(x - r) and sorts the images. Everything
    // downstream assumes a branch point at infinity, so this is the only
    // accepted route for even input.
    static HyperellipticCurve from_even_model(std::vector<double> roots,
                                              std::size_t root_to_infinity);

    int genus() const { return genus_; }
    std::size_t num_finite() const { return points_.size(); } // 2g+1
    // 1-based branch index, matching the partition index sets.
    double point(int index) const;
    const std::vector<double>& points() const { return points_; }

    double f(double x) const;          // prod (x - e_k)
    double f_prime_at(int index) const; // prod_{i != k} (e_k - e_i)
    double span() const { return points_.back() - points_.front(); }

private:
    int genus_ = 0;
    std::vector<double> points_;
};

// Partition (I_m, J_m) of the finite branch indices {1, ..., 2g+1}. Index
// sets are kept sorted so every derived product has a deterministic sign.
class Partition {
public:
    Partition(int genus, std::vector<int> i_set);
    Partition(const HyperellipticCurve& curve, std::vector<int> i_set);

    int genus() const { return genus_; }
    int speciality() const { return m_; }
    const std::vector<int>& i_set() const { return i_set_; }
    const std::vector<int>& j_set() const { return j_set_; }

    // Derived sets for an m = 0 partition; n is a branch index value in I_0.
    std::vector<int> i1_set(int n) const; // I_0 \ {n}
    std::vector<int> j1_set(int n) const; // J_0 u {n}
    // T_n = J_0 \ {n} for a branch index value n in J_0.
    std::vector<int> t_set(int n) const;

private:
    int genus_ = 0;
    int m_ = 0;
    std::vector<int> i_set_;
    std::vector<int> j_set_;
};

// All speciality-0 partitions (I_0 of size g), lexicographic in I_0.
std::vector<Partition> all_partitions_m0(const HyperellipticCurve& curve);

// Vandermonde product Delta(set) = prod_{k < l in set} (e_l - e_k).
// Factors involving the branch point at infinity never enter.
double vandermonde(const HyperellipticCurve& curve, const std::vector<int>& index_set);

// nabla(I) = Delta(I) * Delta(complement of I in {1,...,2g+1}).
double nabla(const HyperellipticCurve& curve, const std::vector<int>& i_set);
double nabla(const HyperellipticCurve& curve, const Partition& p);

// y^2 = phi * psi with phi carrying the I_0 roots.
std::pair<MonicPoly, MonicPoly> split_phi_psi(const HyperellipticCurve& curve,
                                              const Partition& p);

// chi_n = psi(e_n) / phi'(e_n) for n in I_0, evaluated by the cross-ratio
// product over the opposite partition.
double chi(const HyperellipticCurve& curve, const Partition& p, int n);

// Coefficients of prod (x - x_k) from highest to lowest degree: the
// elementary symmetric functions with alternating signs, s_0 = 1 first.
std::vector<double> symmetric_functions_alt(const std::vector<double>& values);

// g x g matrix whose column n holds the alternating symmetric functions of
// I_1^(n) = I_0 \ {i_n}, degree g-1 in the top row down to s_0 = 1 in the
// bottom row; columns follow sorted I_0.
std::vector<double> s_matrix_row_major(const HyperellipticCurve& curve, const Partition& p);

} // namespace rosenhain
