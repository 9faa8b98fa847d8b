#include "cutquad/bezier.hpp"

#include "cutquad/error.hpp"

#include <cmath>

namespace cutquad {

RationalBezier::RationalBezier(std::vector<Point2> control, std::vector<double> weights)
    : control_(std::move(control)), weights_(std::move(weights))
{
    if (control_.size() < 2)
        throw ParameterError("RationalBezier: need at least 2 control points");
    if (weights_.size() != control_.size())
        throw ParameterError("RationalBezier: weight count differs from control point count");
    for (double w : weights_)
        if (!(w > 0.0) || !std::isfinite(w))
            throw ParameterError("RationalBezier: weights must be positive and finite");
}

RationalBezier::RationalBezier(std::vector<Point2> control)
    : RationalBezier(control, std::vector<double>(control.size(), 1.0))
{
}

RationalBezier RationalBezier::line(Point2 a, Point2 b)
{
    return RationalBezier({a, b});
}

RationalBezier RationalBezier::reversed() const
{
    return RationalBezier(std::vector<Point2>(control_.rbegin(), control_.rend()),
                          std::vector<double>(weights_.rbegin(), weights_.rend()));
}

namespace {

struct Homogeneous
{
    double x, y, w;
};

} // namespace

CurvePoint bezier_eval(const RationalBezier& c, double s)
{
    if (!(s >= 0.0 && s <= 1.0))
        throw ParameterError("bezier_eval: parameter outside [0, 1]");
    const int p = c.degree();
    std::vector<Homogeneous> h(p + 1);
    for (int i = 0; i <= p; ++i) {
        const double w = c.weights()[i];
        h[i] = {w * c.control()[i].x, w * c.control()[i].y, w};
    }
    // Reduce to the two points of level p-1; their difference gives the derivative.
    for (int level = p; level > 1; --level)
        for (int i = 0; i < level; ++i)
            h[i] = {(1 - s) * h[i].x + s * h[i + 1].x, (1 - s) * h[i].y + s * h[i + 1].y,
                    (1 - s) * h[i].w + s * h[i + 1].w};
    const Homogeneous a = h[0];
    const Homogeneous b = h[1];
    const Homogeneous val{(1 - s) * a.x + s * b.x, (1 - s) * a.y + s * b.y, (1 - s) * a.w + s * b.w};
    const Homogeneous der{p * (b.x - a.x), p * (b.y - a.y), p * (b.w - a.w)};

    CurvePoint out;
    out.point = {val.x / val.w, val.y / val.w};
    const double w2 = val.w * val.w;
    out.derivative = {(der.x * val.w - val.x * der.w) / w2, (der.y * val.w - val.y * der.w) / w2};
    return out;
}

double bernstein_eval(const std::vector<double>& coeffs, double s)
{
    std::vector<double> b = coeffs;
    for (std::size_t level = b.size(); level > 1; --level)
        for (std::size_t i = 0; i + 1 < level; ++i)
            b[i] = (1 - s) * b[i] + s * b[i + 1];
    return b.empty() ? 0.0 : b[0];
}

} // namespace cutquad
