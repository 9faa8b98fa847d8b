#pragma once

#include "cutquad/types.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace cutquad {

/// Which generator produced a rule.
enum class Provenance
{
    Reference,
    Tensor,
    Triangle,
    Quadtree,
    Tessellate,
    MomentFitLagrange,
    HmfInterface,
    HmfVolume,
    Height,
    Green,
    Composite,
};

std::string_view to_string(Provenance p);

/// Points and weights in physical coordinates.
///
/// Weights carry area units; applying the rule to f returns sum_i w_i f(x_i).
/// Weights may be negative (moment-fitted rules).
class QuadratureRule
{
public:
    QuadratureRule() = default;
    explicit QuadratureRule(Provenance provenance) : provenance_(provenance) {}
    QuadratureRule(std::vector<Point2> points, std::vector<double> weights, Provenance provenance);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    std::span<const Point2> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }
    Provenance provenance() const { return provenance_; }
    void set_provenance(Provenance p) { provenance_ = p; }

    void add(Point2 p, double w);
    void reserve(std::size_t n);

    /// Appends all points of `other`; the weight sum is additive.
    void append(const QuadratureRule& other);

    double weight_sum() const;

private:
    std::vector<Point2> points_;
    std::vector<double> weights_;
    Provenance provenance_ = Provenance::Reference;
};

/// n-point Gauss-Legendre rule on [-1, 1].
struct Gauss1D
{
    int order = 0;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // positive
};

inline constexpr int kMaxGaussOrder = 64;

/// Newton iteration on the Legendre recurrence with a bisection safeguard.
/// Results are cached; the returned reference stays valid for the program lifetime.
const Gauss1D& gauss_legendre(int n);

/// Gauss rule mapped onto [a, b]: returns (nodes, weights).
struct Rule1D
{
    std::vector<double> nodes;
    std::vector<double> weights;
};
Rule1D gauss_on_interval(int n, double a, double b);

/// x -> linear * x + offset.
class AffineMap2D
{
public:
    AffineMap2D(std::array<std::array<double, 2>, 2> linear, Point2 offset);

    static AffineMap2D identity();
    static AffineMap2D scale_translate(double sx, double sy, Point2 offset);
    static AffineMap2D rotation(double angle, Point2 offset = {});

    Point2 apply(Point2 p) const;
    Point2 apply_inverse(Point2 p) const;
    double determinant() const;

private:
    std::array<std::array<double, 2>, 2> a_;
    Point2 b_;
};

QuadratureRule tensor_rule(int nx, int ny, const Box& box);

QuadratureRule map_rule(const QuadratureRule& rule, const AffineMap2D& map);

/// Collapsed (Duffy) tensor rule on a triangle. Exact for total degree 2n-2.
QuadratureRule triangle_rule(int n, Point2 a, Point2 b, Point2 c);

/// Signed area of the triangle (positive when counterclockwise).
double signed_area(Point2 a, Point2 b, Point2 c);

using ScalarField = std::function<double(Point2)>;

/// sum_i w_i f(x_i). Throws EvaluationError naming the point if f is not finite.
double integrate(const QuadratureRule& rule, const ScalarField& f);

} // namespace cutquad
