#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rosenhain {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr Complex kImag{0.0, 1.0};

// Dense complex matrix, row-major. Everything in this project is g x g with
// g <= 8, so the algorithms below favour clarity over blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ComplexMatrix transposed() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    CVector operator*(const CVector& v) const;
    ComplexMatrix scaled(Complex factor) const;

    CVector column(std::size_t j) const;
    void set_column(std::size_t j, const CVector& v);

    Complex determinant() const;    // LU with partial pivoting
    ComplexMatrix inverse() const;  // throws std::runtime_error on singular input
    ComplexMatrix adjugate() const; // literal cofactor expansion
    double max_abs() const;
    double norm1() const;           // max column sum

private:
    std::size_t rows_ = 0, cols_ = 0;
    CVector a_;
};

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y);

// Eigenvalues of a real symmetric matrix (cyclic Jacobi sweeps), ascending.
// The input is row-major n x n.
std::vector<double> symmetric_eigenvalues(std::vector<double> m, std::size_t n);

// Solves the real linear system M x = b by Gaussian elimination with
// partial pivoting. M is row-major n x n, consumed by value.
std::vector<double> solve_real(std::vector<double> m, std::vector<double> b, std::size_t n);

} // namespace rosenhain
