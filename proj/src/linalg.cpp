#include "rosenhain/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rosenhain {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::transposed() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const
{
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix product: shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex x = (*this)(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += x * rhs(k, j);
            }
        }
    }
    return out;
}

CVector ComplexMatrix::operator*(const CVector& v) const
{
    if (cols_ != v.size()) {
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    }
    CVector out(rows_, Complex(0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex s(0.0);
        for (std::size_t j = 0; j < cols_; ++j) {
            s += (*this)(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const
{
    ComplexMatrix out = *this;
    for (auto& x : out.a_) {
        x *= factor;
    }
    return out;
}

CVector ComplexMatrix::column(std::size_t j) const
{
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

void ComplexMatrix::set_column(std::size_t j, const CVector& v)
{
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = v[i];
    }
}

Complex ComplexMatrix::determinant() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    ComplexMatrix lu = *this;
    Complex det(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best == 0.0) {
            return Complex(0.0);
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(piv, j));
            }
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                lu(i, j) -= f * lu(k, j);
            }
        }
    }
    return det;
}

ComplexMatrix ComplexMatrix::inverse() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = rows_;
    ComplexMatrix work = *this;
    ComplexMatrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(work(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(work(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best == 0.0) {
            throw std::runtime_error("matrix is singular");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        }
        const Complex d = work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) /= d;
            inv(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            const Complex f = work(i, k);
            if (f == Complex(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

ComplexMatrix ComplexMatrix::adjugate() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("adjugate of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 1) {
        ComplexMatrix out(1, 1);
        out(0, 0) = 1.0;
        return out;
    }
    ComplexMatrix out(n, n);
    ComplexMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) {
                    continue;
                }
                std::size_t mc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) {
                        continue;
                    }
                    minor(mr, mc) = (*this)(r, c);
                    ++mc;
                }
                ++mr;
            }
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            // adj(A)_{ji} = (-1)^{i+j} det(minor_ij)
            out(j, i) = sign * minor.determinant();
        }
    }
    return out;
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& x : a_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double ComplexMatrix::norm1() const
{
    double m = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += std::abs((*this)(i, j));
        }
        m = std::max(m, s);
    }
    return m;
}

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            m = std::max(m, std::abs(x(i, j) - y(i, j)));
        }
    }
    return m;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> m, std::size_t n)
{
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += at(i, j) * at(i, j);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = at(i, i);
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> solve_real(std::vector<double> m, std::vector<double> b, std::size_t n)
{
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(at(i, k)) > best) {
                best = std::abs(at(i, k));
                piv = i;
            }
        }
        if (best == 0.0) {
            throw std::runtime_error("solve_real: singular system");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(at(k, j), at(piv, j));
            }
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = at(i, k) / at(k, k);
            for (std::size_t j = k; j < n; ++j) {
                at(i, j) -= f * at(k, j);
            }
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= at(i, j) * x[j];
        }
        x[i] = s / at(i, i);
    }
    return x;
}

} // namespace rosenhain
