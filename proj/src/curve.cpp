#include "rosenhain/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rosenhain {

namespace {

void require(bool cond, const char* msg)
{
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw std::invalid_argument("index set has repeated entries");
    }
    return v;
}

} // namespace

MonicPoly::MonicPoly(std::vector<double> roots) : roots_(std::move(roots)) {}

double MonicPoly::operator()(double x) const
{
    double p = 1.0;
    for (double r : roots_) {
        p *= (x - r);
    }
    return p;
}

std::vector<double> MonicPoly::coefficients() const
{
    return symmetric_functions_alt(roots_);
}

HyperellipticCurve::HyperellipticCurve(std::vector<double> branch_points)
    : points_(std::move(branch_points))
{
    require(points_.size() >= 3 && points_.size() % 2 == 1,
            "branch point count must be odd and at least 3 (2g+1)");
    genus_ = static_cast<int>((points_.size() - 1) / 2);
    for (double e : points_) {
        require(std::isfinite(e), "branch points must be finite");
    }
    const double span = points_.back() - points_.front();
    require(span > 0.0, "branch points must be strictly increasing");
    for (std::size_t k = 1; k < points_.size(); ++k) {
        require(points_[k] - points_[k - 1] > 1e-10 * span,
                "branch points must be strictly increasing and well separated");
    }
}

HyperellipticCurve HyperellipticCurve::from_even_model(std::vector<double> roots,
                                                       std::size_t root_to_infinity)
{
    if (roots.size() < 4 || roots.size() % 2 != 0) {
        throw std::invalid_argument("even model needs 2g+2 finite roots");
    }
    if (root_to_infinity >= roots.size()) {
        throw std::invalid_argument("root index out of range");
    }
    const double r = roots[root_to_infinity];
    std::vector<double> mapped;
    mapped.reserve(roots.size() - 1);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k == root_to_infinity) {
            continue;
        }
        if (roots[k] == r) {
            throw std::invalid_argument("even model has a repeated root");
        }
        mapped.push_back(1.0 / (roots[k] - r));
    }
    std::sort(mapped.begin(), mapped.end());
    return HyperellipticCurve(std::move(mapped));
}

double HyperellipticCurve::point(int index) const
{
    if (index < 1 || index > static_cast<int>(points_.size())) {
        throw std::invalid_argument("branch index out of range (infinity has no coordinate)");
    }
    return points_[static_cast<std::size_t>(index - 1)];
}

double HyperellipticCurve::f(double x) const
{
    double p = 1.0;
    for (double e : points_) {
        p *= (x - e);
    }
    return p;
}

double HyperellipticCurve::f_prime_at(int index) const
{
    const double ek = point(index);
    double p = 1.0;
    for (int i = 1; i <= static_cast<int>(points_.size()); ++i) {
        if (i != index) {
            p *= (ek - point(i));
        }
    }
    return p;
}

Partition::Partition(int genus, std::vector<int> i_set)
    : genus_(genus), i_set_(sorted_unique(std::move(i_set)))
{
    require(genus_ >= 1, "genus must be positive");
    const int n = 2 * genus_ + 1;
    for (int v : i_set_) {
        require(v >= 1 && v <= n, "partition index out of range");
    }
    const int size = static_cast<int>(i_set_.size());
    if (size == genus_) {
        m_ = 0;
    } else if (size == genus_ - 1) {
        m_ = 1;
    } else {
        throw std::invalid_argument("I_m size must be g (m=0) or g-1 (m=1)");
    }
    j_set_.reserve(static_cast<std::size_t>(n - size));
    std::size_t pos = 0;
    for (int v = 1; v <= n; ++v) {
        if (pos < i_set_.size() && i_set_[pos] == v) {
            ++pos;
        } else {
            j_set_.push_back(v);
        }
    }
}

Partition::Partition(const HyperellipticCurve& curve, std::vector<int> i_set)
    : Partition(curve.genus(), std::move(i_set))
{
}

std::vector<int> Partition::i1_set(int n) const
{
    require(m_ == 0, "derived sets need a speciality-0 partition");
    std::vector<int> out;
    out.reserve(i_set_.size() - 1);
    bool found = false;
    for (int v : i_set_) {
        if (v == n) {
            found = true;
        } else {
            out.push_back(v);
        }
    }
    require(found, "index n must belong to I_0");
    return out;
}

std::vector<int> Partition::j1_set(int n) const
{
    (void)i1_set(n); // validates n in I_0
    std::vector<int> out = j_set_;
    out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Partition::t_set(int n) const
{
    require(m_ == 0, "T-sets need a speciality-0 partition");
    std::vector<int> out;
    out.reserve(j_set_.size() - 1);
    bool found = false;
    for (int v : j_set_) {
        if (v == n) {
            found = true;
        } else {
            out.push_back(v);
        }
    }
    require(found, "index n must belong to J_0");
    return out;
}

std::vector<Partition> all_partitions_m0(const HyperellipticCurve& curve)
{
    const int g = curve.genus();
    const int n = 2 * g + 1;
    std::vector<Partition> out;
    std::vector<int> pick(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        pick[static_cast<std::size_t>(i)] = i + 1;
    }
    while (true) {
        out.emplace_back(g, pick);
        int pos = g - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - (g - 1 - pos)) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < g; ++q) {
            pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return out;
}

double vandermonde(const HyperellipticCurve& curve, const std::vector<int>& index_set)
{
    const std::vector<int> idx = sorted_unique(index_set);
    for (int v : idx) {
        if (v < 1 || v > static_cast<int>(curve.num_finite())) {
            throw std::invalid_argument("vandermonde: index out of range");
        }
    }
    double p = 1.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            p *= (curve.point(idx[b]) - curve.point(idx[a]));
        }
    }
    return p;
}

double nabla(const HyperellipticCurve& curve, const std::vector<int>& i_set)
{
    const std::vector<int> idx = sorted_unique(i_set);
    std::vector<int> comp;
    std::size_t pos = 0;
    for (int v = 1; v <= static_cast<int>(curve.num_finite()); ++v) {
        if (pos < idx.size() && idx[pos] == v) {
            ++pos;
        } else {
            comp.push_back(v);
        }
    }
    if (pos != idx.size()) {
        throw std::invalid_argument("nabla: index out of range");
    }
    return vandermonde(curve, idx) * vandermonde(curve, comp);
}

double nabla(const HyperellipticCurve& curve, const Partition& p)
{
    return vandermonde(curve, p.i_set()) * vandermonde(curve, p.j_set());
}

std::pair<MonicPoly, MonicPoly> split_phi_psi(const HyperellipticCurve& curve,
                                              const Partition& p)
{
    if (p.speciality() != 0) {
        throw std::invalid_argument("phi/psi split needs a speciality-0 partition");
    }
    std::vector<double> phi_roots, psi_roots;
    for (int v : p.i_set()) {
        phi_roots.push_back(curve.point(v));
    }
    for (int v : p.j_set()) {
        psi_roots.push_back(curve.point(v));
    }
    return {MonicPoly(std::move(phi_roots)), MonicPoly(std::move(psi_roots))};
}

double chi(const HyperellipticCurve& curve, const Partition& p, int n)
{
    const std::vector<int> i1 = p.i1_set(n); // validates n in I_0
    const double en = curve.point(n);
    double num = 1.0;
    for (int j : p.j_set()) {
        num *= (en - curve.point(j));
    }
    double den = 1.0;
    for (int i : i1) {
        den *= (en - curve.point(i));
    }
    return num / den;
}

std::vector<double> symmetric_functions_alt(const std::vector<double>& values)
{
    std::vector<double> c{1.0};
    for (double r : values) {
        c.push_back(0.0);
        for (std::size_t d = c.size() - 1; d >= 1; --d) {
            c[d] -= r * c[d - 1];
        }
    }
    return c;
}

std::vector<double> s_matrix_row_major(const HyperellipticCurve& curve, const Partition& p)
{
    if (p.speciality() != 0) {
        throw std::invalid_argument("S matrix needs a speciality-0 partition");
    }
    const int g = p.genus();
    std::vector<double> s(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), 0.0);
    const std::vector<int>& i0 = p.i_set();
    for (int col = 0; col < g; ++col) {
        std::vector<double> vals;
        for (int v : p.i1_set(i0[static_cast<std::size_t>(col)])) {
            vals.push_back(curve.point(v));
        }
        const std::vector<double> sym = symmetric_functions_alt(vals); // s_0 .. s_{g-1}
        for (int row = 0; row < g; ++row) {
            // top row carries degree g-1, bottom row s_0 = 1
            s[static_cast<std::size_t>(row) * g + col] = sym[static_cast<std::size_t>(g - 1 - row)];
        }
    }
    return s;
}

} // namespace rosenhain
