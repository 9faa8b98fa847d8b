#pragma once

#include "cutquad/types.hpp"

#include <vector>

namespace cutquad {

/// Rational Bernstein-Bezier curve on s in [0, 1].
class RationalBezier
{
public:
    RationalBezier(std::vector<Point2> control, std::vector<double> weights);
    /// Polynomial (all weights 1).
    explicit RationalBezier(std::vector<Point2> control);

    static RationalBezier line(Point2 a, Point2 b);

    int degree() const { return static_cast<int>(control_.size()) - 1; }
    const std::vector<Point2>& control() const { return control_; }
    const std::vector<double>& weights() const { return weights_; }

    Point2 start() const { return control_.front(); }
    Point2 end() const { return control_.back(); }

    RationalBezier reversed() const;

private:
    std::vector<Point2> control_;
    std::vector<double> weights_;
};

struct CurvePoint
{
    Point2 point;
    Vec2 derivative;
};

/// de Casteljau evaluation of point and first derivative (quotient rule).
CurvePoint bezier_eval(const RationalBezier& c, double s);

/// de Casteljau on scalar Bernstein coefficients.
double bernstein_eval(const std::vector<double>& coeffs, double s);

} // namespace cutquad
