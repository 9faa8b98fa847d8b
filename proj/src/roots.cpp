#include "cutquad/roots.hpp"

#include "cutquad/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cutquad {

namespace {

double checked(const std::function<double(double)>& f, double t)
{
    const double v = f(t);
    if (!std::isfinite(v))
        throw EvaluationError("find_roots_1d: non-finite value at t = " + std::to_string(t));
    return v;
}

// Shrinks a sign-changing bracket below `tol` with secant steps, falling back
// to bisection whenever a step fails to halve the bracket.
double refine(const std::function<double(double)>& f, double lo, double hi, double f_lo, double f_hi, double tol)
{
    bool bisect = false;
    for (int it = 0; it < 200; ++it) {
        const double width = hi - lo;
        if (width <= tol)
            break;
        double x = bisect ? 0.5 * (lo + hi) : lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if (!(x > lo && x < hi))
            x = 0.5 * (lo + hi);
        x = std::clamp(x, lo + 0.5 * tol, hi - 0.5 * tol);
        if (!(x > lo && x < hi))
            break; // bracket is down to adjacent floating-point numbers
        const double fx = checked(f, x);
        if (fx == 0.0)
            return x;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        bisect = (hi - lo) > 0.5 * width;
    }
    return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

} // namespace

std::vector<double> find_roots_1d(const std::function<double(double)>& f, double a, double b, int samples)
{
    if (!(a < b))
        throw ParameterError("find_roots_1d: need a < b");
    if (samples < 2)
        throw ParameterError("find_roots_1d: need at least 2 samples");

    std::vector<double> t(samples);
    std::vector<double> v(samples);
    double scale = 0.0;
    for (int i = 0; i < samples; ++i) {
        t[i] = (i == samples - 1) ? b : a + (b - a) * static_cast<double>(i) / (samples - 1);
        v[i] = checked(f, t[i]);
        scale = std::max(scale, std::abs(v[i]));
    }
    const double tol_x = 1e-14 * (b - a);
    const double zero_tol = 1e-13 * (1.0 + scale);

    std::vector<double> roots;
    for (int i = 0; i < samples; ++i) {
        if (v[i] == 0.0) {
            roots.push_back(t[i]);
            continue;
        }
        // Grazing contact: tiny sample at a local minimum of |f| without a sign change.
        if (std::abs(v[i]) <= zero_tol) {
            const bool left_same = i == 0 || (v[i - 1] != 0.0 && (v[i - 1] < 0.0) == (v[i] < 0.0) &&
                                              std::abs(v[i - 1]) >= std::abs(v[i]));
            const bool right_same = i == samples - 1 || (v[i + 1] != 0.0 && (v[i + 1] < 0.0) == (v[i] < 0.0) &&
                                                         std::abs(v[i + 1]) >= std::abs(v[i]));
            if (left_same && right_same)
                roots.push_back(t[i]);
        }
        if (i + 1 < samples && v[i + 1] != 0.0 && (v[i] < 0.0) != (v[i + 1] < 0.0))
            roots.push_back(refine(f, t[i], t[i + 1], v[i], v[i + 1], tol_x));
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> unique;
    for (double r : roots)
        if (unique.empty() || r - unique.back() > tol_x)
            unique.push_back(r);
    return unique;
}

} // namespace cutquad
