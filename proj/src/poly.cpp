#include "cutquad/poly.hpp"

#include "cutquad/error.hpp"

#include <algorithm>
#include <cmath>

namespace cutquad {

namespace {

// Neumaier compensated accumulator.
struct Accumulator
{
    double sum = 0.0;
    double comp = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace

// ---------------------------------------------------------------------------
// Poly1D

Poly1D Poly1D::monomial(int power, double coeff)
{
    std::vector<double> c(power + 1, 0.0);
    c[power] = coeff;
    return Poly1D(std::move(c));
}

int Poly1D::degree() const
{
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
        if (c_[k] != 0.0)
            return k;
    return -1;
}

double Poly1D::operator()(double x) const
{
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * x + *it;
    return v;
}

Poly1D Poly1D::derivative() const
{
    if (c_.size() <= 1)
        return Poly1D{};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly1D(std::move(d));
}

Poly1D Poly1D::antiderivative() const
{
    if (degree() < 0)
        return Poly1D{};
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k)
        a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Poly1D(std::move(a));
}

double Poly1D::integral(double a, double b) const
{
    const Poly1D anti = antiderivative();
    return anti(b) - anti(a);
}

Poly1D Poly1D::compose(const Poly1D& inner) const
{
    Poly1D result;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        result = result * inner + Poly1D{*it};
    return result;
}

Poly1D operator+(const Poly1D& a, const Poly1D& b)
{
    std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        c[k] += b.c_[k];
    return Poly1D(std::move(c));
}

Poly1D operator-(const Poly1D& a, const Poly1D& b)
{
    return a + (-1.0) * b;
}

Poly1D operator*(const Poly1D& a, const Poly1D& b)
{
    if (a.c_.empty() || b.c_.empty())
        return Poly1D{};
    std::vector<Accumulator> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j].add(a.c_[i] * b.c_[j]);
    std::vector<double> c(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k)
        c[k] = acc[k].value();
    return Poly1D(std::move(c));
}

Poly1D operator*(double s, const Poly1D& a)
{
    std::vector<double> c = a.c_;
    for (double& v : c)
        v *= s;
    return Poly1D(std::move(c));
}

Poly1D legendre_poly(int k)
{
    Poly1D p0{1.0};
    if (k == 0)
        return p0;
    Poly1D p1{0.0, 1.0};
    const Poly1D x{0.0, 1.0};
    for (int n = 2; n <= k; ++n) {
        Poly1D pn = ((2.0 * n - 1.0) / n) * (x * p1) - ((n - 1.0) / n) * p0;
        p0 = std::move(p1);
        p1 = std::move(pn);
    }
    return p1;
}

// ---------------------------------------------------------------------------
// Poly2D

Poly2D::Poly2D(int nx, int ny) : nx_(std::max(nx, 0)), ny_(std::max(ny, 0)), c_((nx_ + 1) * (ny_ + 1), 0.0) {}

Poly2D::Poly2D(std::initializer_list<std::initializer_list<double>> rows)
{
    nx_ = std::max<int>(static_cast<int>(rows.size()) - 1, 0);
    int ncols = 1;
    for (const auto& r : rows)
        ncols = std::max<int>(ncols, static_cast<int>(r.size()));
    ny_ = ncols - 1;
    c_.assign((nx_ + 1) * (ny_ + 1), 0.0);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (double v : r)
            at(i, j++) = v;
        ++i;
    }
}

Poly2D Poly2D::constant(double c)
{
    Poly2D p(0, 0);
    p.at(0, 0) = c;
    return p;
}

Poly2D Poly2D::x_power(int k, double coeff)
{
    return monomial(k, 0, coeff);
}

Poly2D Poly2D::y_power(int k, double coeff)
{
    return monomial(0, k, coeff);
}

Poly2D Poly2D::monomial(int i, int j, double coeff)
{
    Poly2D p(i, j);
    p.at(i, j) = coeff;
    return p;
}

Poly2D Poly2D::from_1d(const Poly1D& p, bool in_y)
{
    const int d = std::max(p.degree(), 0);
    Poly2D out = in_y ? Poly2D(0, d) : Poly2D(d, 0);
    for (int k = 0; k <= d; ++k) {
        if (in_y)
            out.at(0, k) = p.coeff(k);
        else
            out.at(k, 0) = p.coeff(k);
    }
    return out;
}

double Poly2D::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i > nx_ || j > ny_)
        return 0.0;
    return c_[i * (ny_ + 1) + j];
}

double& Poly2D::at(int i, int j)
{
    if (i < 0 || j < 0 || i > nx_ || j > ny_)
        throw ParameterError("Poly2D::at: index out of range");
    return c_[i * (ny_ + 1) + j];
}

double Poly2D::operator()(double x, double y) const
{
    double v = 0.0;
    for (int i = nx_; i >= 0; --i) {
        double row = 0.0;
        for (int j = ny_; j >= 0; --j)
            row = row * y + c_[i * (ny_ + 1) + j];
        v = v * x + row;
    }
    return v;
}

Vec2 Poly2D::gradient(Point2 p) const
{
    return {dx()(p), dy()(p)};
}

Poly2D Poly2D::dx() const
{
    Poly2D d(std::max(nx_ - 1, 0), ny_);
    for (int i = 1; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            d.at(i - 1, j) = i * coeff(i, j);
    return d;
}

Poly2D Poly2D::dy() const
{
    Poly2D d(nx_, std::max(ny_ - 1, 0));
    for (int i = 0; i <= nx_; ++i)
        for (int j = 1; j <= ny_; ++j)
            d.at(i, j - 1) = j * coeff(i, j);
    return d;
}

double Poly2D::max_abs_coeff() const
{
    double m = 0.0;
    for (double v : c_) {
        if (std::isnan(v))
            return v;
        m = std::max(m, std::abs(v));
    }
    return m;
}

std::pair<int, int> Poly2D::bidegree(double rel_tol) const
{
    const double thresh = rel_tol * max_abs_coeff();
    int dx = -1;
    int dy = -1;
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (std::abs(coeff(i, j)) > thresh) {
                dx = std::max(dx, i);
                dy = std::max(dy, j);
            }
    return {dx, dy};
}

int Poly2D::total_degree(double rel_tol) const
{
    const double thresh = rel_tol * max_abs_coeff();
    int d = -1;
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (std::abs(coeff(i, j)) > thresh)
                d = std::max(d, i + j);
    return d;
}

bool Poly2D::is_zero(double rel_tol) const
{
    if (rel_tol <= 0.0)
        return max_abs_coeff() == 0.0;
    return bidegree(rel_tol).first < 0 || max_abs_coeff() <= rel_tol;
}

std::vector<double> Poly2D::row_major() const
{
    return c_;
}

Poly2D operator+(const Poly2D& a, const Poly2D& b)
{
    Poly2D r(std::max(a.nx_, b.nx_), std::max(a.ny_, b.ny_));
    for (int i = 0; i <= r.nx_; ++i)
        for (int j = 0; j <= r.ny_; ++j)
            r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
    return r;
}

Poly2D operator-(const Poly2D& a, const Poly2D& b)
{
    return a + (-1.0) * b;
}

Poly2D operator*(const Poly2D& a, const Poly2D& b)
{
    const int nx = a.nx_ + b.nx_;
    const int ny = a.ny_ + b.ny_;
    std::vector<Accumulator> acc((nx + 1) * (ny + 1));
    for (int i = 0; i <= a.nx_; ++i)
        for (int j = 0; j <= a.ny_; ++j) {
            const double ca = a.coeff(i, j);
            if (ca == 0.0)
                continue;
            for (int k = 0; k <= b.nx_; ++k)
                for (int l = 0; l <= b.ny_; ++l)
                    acc[(i + k) * (ny + 1) + (j + l)].add(ca * b.coeff(k, l));
        }
    Poly2D r(nx, ny);
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            r.at(i, j) = acc[i * (ny + 1) + j].value();
    return r;
}

Poly2D operator*(double s, const Poly2D& a)
{
    Poly2D r = a;
    for (double& v : r.c_)
        v *= s;
    return r;
}

Poly2D poly2d_compose(const Poly2D& f, const Poly2D& tx, const Poly2D& ty)
{
    auto check = [](const Poly2D& p) {
        const double m = p.max_abs_coeff();
        if (!(m <= 1e300))
            throw NumericRangeError("poly2d_compose: coefficient magnitude exceeds 1e300");
    };
    std::vector<Poly2D> xpow{Poly2D::constant(1.0)};
    std::vector<Poly2D> ypow{Poly2D::constant(1.0)};
    for (int i = 1; i < f.rows(); ++i) {
        xpow.push_back(xpow.back() * tx);
        check(xpow.back());
    }
    for (int j = 1; j < f.cols(); ++j) {
        ypow.push_back(ypow.back() * ty);
        check(ypow.back());
    }
    Poly2D result = Poly2D::constant(0.0);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            const double c = f.coeff(i, j);
            if (c == 0.0)
                continue;
            result = result + c * (xpow[i] * ypow[j]);
            check(result);
        }
    return result;
}

Poly2D poly2d_jacobian_det(const Poly2D& tx, const Poly2D& ty)
{
    return tx.dx() * ty.dy() - tx.dy() * ty.dx();
}

} // namespace cutquad
