#include "cutquad/analysis.hpp"

#include "cutquad/error.hpp"

#include <cmath>

namespace cutquad {

std::string_view to_string(MappingClass c)
{
    switch (c) {
    case MappingClass::General: return "general";
    case MappingClass::OneCurvedGeneric: return "one-curved-generic";
    case MappingClass::OneCurvedAxisAligned: return "one-curved-axis-aligned";
    case MappingClass::Degenerate: return "degenerate";
    case MappingClass::Affine: return "affine";
    }
    return "unknown";
}

std::pair<int, int> predict_bidegree(MappingClass cls, int p, int q)
{
    switch (cls) {
    case MappingClass::General: return {2 * p * (q + 1) - 1, 2 * p * (q + 1) - 1};
    case MappingClass::OneCurvedGeneric: return {2 * q + 1, 2 * p * (q + 1) - 1};
    case MappingClass::OneCurvedAxisAligned: return {2 * q + 1, q * p + q + p};
    case MappingClass::Degenerate: return {2 * q + 1, p * (q + 1) - 1};
    case MappingClass::Affine: return {q, q};
    }
    return {-1, -1};
}

int required_points(int p, int q, bool conservative)
{
    if (conservative)
        return p * (q + 1);
    return (q * p + q + p + 1 + 1) / 2;
}

namespace {

double nonzero_int(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> mag(1, 9);
    std::bernoulli_distribution sign(0.5);
    const int m = mag(rng);
    return sign(rng) ? m : -m;
}

Poly2D random_poly(int nx, int ny, std::mt19937_64& rng)
{
    Poly2D p(nx, ny);
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            p.at(i, j) = nonzero_int(rng);
    return p;
}

// b(v) embedded as a polynomial in (u, v).
Poly2D random_in_v(int p, std::mt19937_64& rng)
{
    return random_poly(0, p, rng);
}

} // namespace

std::pair<Poly2D, Poly2D> random_mapping(MappingClass cls, int p, std::mt19937_64& rng)
{
    if (p < 1 && cls != MappingClass::Affine)
        throw ParameterError("random_mapping: p must be at least 1");
    const Poly2D u = Poly2D::x_power(1);
    const Poly2D v = Poly2D::y_power(1);
    const Poly2D one = Poly2D::constant(1.0);
    switch (cls) {
    case MappingClass::General: return {random_poly(p, p, rng), random_poly(p, p, rng)};
    case MappingClass::OneCurvedGeneric: return {random_poly(1, p, rng), random_poly(1, p, rng)};
    case MappingClass::OneCurvedAxisAligned: {
        const Poly2D b = random_in_v(p, rng);
        return {u * v, (one - u) * v + u * b};
    }
    case MappingClass::Degenerate: {
        const double a0 = nonzero_int(rng);
        const Poly2D b = random_in_v(p, rng);
        return {u, a0 * (one - u) + u * b};
    }
    case MappingClass::Affine: {
        const double a = nonzero_int(rng), b = nonzero_int(rng), c = nonzero_int(rng), d = nonzero_int(rng);
        return {a * u + Poly2D::constant(b), c * v + Poly2D::constant(d)};
    }
    }
    throw ParameterError("random_mapping: unknown class");
}

Poly2D random_integrand(int q, std::mt19937_64& rng)
{
    return random_poly(q, q, rng);
}

std::pair<int, int> measured_bidegree(const Poly2D& f, const Poly2D& tx, const Poly2D& ty)
{
    return (poly2d_compose(f, tx, ty) * poly2d_jacobian_det(tx, ty)).bidegree();
}

ConvergenceFit fit_rate(const std::vector<std::pair<int, double>>& samples)
{
    ConvergenceFit fit;
    for (const auto& [n_ele, err] : samples) {
        if (n_ele < 1)
            throw ParameterError("fit_rate: element counts must be positive");
        if (!(err > kMachineFloor) || !std::isfinite(err))
            continue;
        fit.log_h.push_back(std::log(1.0 / n_ele));
        fit.log_error.push_back(std::log(err));
    }
    const std::size_t n = fit.log_h.size();
    if (n < 2)
        throw InsufficientDataError("fit_rate: need at least 2 samples above the machine floor, got " +
                                    std::to_string(n));
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += fit.log_h[i];
        my += fit.log_error[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (fit.log_h[i] - mx) * (fit.log_h[i] - mx);
        sxy += (fit.log_h[i] - mx) * (fit.log_error[i] - my);
    }
    if (!(sxx > 0.0))
        throw InsufficientDataError("fit_rate: all samples share one element count");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = fit.log_error[i] - (fit.intercept + fit.slope * fit.log_h[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

} // namespace cutquad
