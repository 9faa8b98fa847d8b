#pragma once

#include "cutquad/types.hpp"

#include <initializer_list>
#include <vector>

namespace cutquad {

/// Univariate polynomial, coefficients in ascending powers.
class Poly1D
{
public:
    Poly1D() = default;
    Poly1D(std::initializer_list<double> coeffs) : c_(coeffs) {}
    explicit Poly1D(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    static Poly1D monomial(int power, double coeff = 1.0);

    /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    const std::vector<double>& coeffs() const { return c_; }
    double coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }

    double operator()(double x) const;

    Poly1D derivative() const;
    /// Antiderivative with zero constant term.
    Poly1D antiderivative() const;

    /// Definite integral over [a, b] through the antiderivative.
    double integral(double a, double b) const;

    Poly1D compose(const Poly1D& inner) const;

    friend Poly1D operator+(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator-(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator*(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator*(double s, const Poly1D& a);

private:
    std::vector<double> c_;
};

/// Legendre polynomial P_k on [-1, 1].
Poly1D legendre_poly(int k);

/// Bivariate polynomial sum c(i, j) x^i y^j.
class Poly2D
{
public:
    Poly2D() = default;
    /// Zero polynomial with room for x-degree `nx` and y-degree `ny`.
    Poly2D(int nx, int ny);
    /// Row-major coefficients: rows = powers of x, columns = powers of y.
    Poly2D(std::initializer_list<std::initializer_list<double>> rows);

    static Poly2D constant(double c);
    static Poly2D x_power(int k, double coeff = 1.0);
    static Poly2D y_power(int k, double coeff = 1.0);
    static Poly2D monomial(int i, int j, double coeff = 1.0);
    /// p(x) embedded as a polynomial constant in y (or x when `in_y`).
    static Poly2D from_1d(const Poly1D& p, bool in_y = false);

    /// Allocated extents (not necessarily the true degree).
    int rows() const { return nx_ + 1; }
    int cols() const { return ny_ + 1; }

    double coeff(int i, int j) const;
    double& at(int i, int j);

    double operator()(double x, double y) const;
    double operator()(Point2 p) const { return (*this)(p.x, p.y); }
    Vec2 gradient(Point2 p) const;

    Poly2D dx() const;
    Poly2D dy() const;

    /// Bi-degree with coefficients below rel_tol * max|c| treated as zero.
    /// Returns (-1, -1) for the zero polynomial.
    std::pair<int, int> bidegree(double rel_tol = 1e-12) const;
    int total_degree(double rel_tol = 1e-12) const;
    bool is_zero(double rel_tol = 0.0) const;
    double max_abs_coeff() const;

    /// Row-major coefficient dump (rows() x cols()).
    std::vector<double> row_major() const;

    friend Poly2D operator+(const Poly2D& a, const Poly2D& b);
    friend Poly2D operator-(const Poly2D& a, const Poly2D& b);
    friend Poly2D operator*(const Poly2D& a, const Poly2D& b);
    friend Poly2D operator*(double s, const Poly2D& a);

private:
    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> c_{0.0};
};

/// f(tx(u, v), ty(u, v)) by exact expansion. Throws NumericRangeError past 1e300.
Poly2D poly2d_compose(const Poly2D& f, const Poly2D& tx, const Poly2D& ty);

/// d(tx)/du * d(ty)/dv - d(tx)/dv * d(ty)/du.
Poly2D poly2d_jacobian_det(const Poly2D& tx, const Poly2D& ty);

} // namespace cutquad
