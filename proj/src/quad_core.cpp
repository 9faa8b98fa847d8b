#include "cutquad/quad_core.hpp"

#include "cutquad/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace cutquad {

std::string to_string(Point2 p)
{
    std::ostringstream os;
    os.precision(17);
    os << '(' << p.x << ", " << p.y << ')';
    return os.str();
}

std::string to_string(const Box& b)
{
    return "[" + to_string(b.lo) + " - " + to_string(b.hi) + "]";
}

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Tensor: return "tensor";
    case Provenance::Triangle: return "triangle";
    case Provenance::Quadtree: return "quadtree";
    case Provenance::Tessellate: return "tessellate";
    case Provenance::MomentFitLagrange: return "momentfit-lagrange";
    case Provenance::HmfInterface: return "hmf-interface";
    case Provenance::HmfVolume: return "hmf";
    case Provenance::Height: return "height";
    case Provenance::Green: return "green";
    case Provenance::Composite: return "composite";
    }
    return "unknown";
}

QuadratureRule::QuadratureRule(std::vector<Point2> points, std::vector<double> weights, Provenance provenance)
    : points_(std::move(points)), weights_(std::move(weights)), provenance_(provenance)
{
    if (points_.size() != weights_.size())
        throw ParameterError("QuadratureRule: point and weight counts differ");
}

void QuadratureRule::add(Point2 p, double w)
{
    points_.push_back(p);
    weights_.push_back(w);
}

void QuadratureRule::reserve(std::size_t n)
{
    points_.reserve(n);
    weights_.reserve(n);
}

void QuadratureRule::append(const QuadratureRule& other)
{
    points_.insert(points_.end(), other.points_.begin(), other.points_.end());
    weights_.insert(weights_.end(), other.weights_.begin(), other.weights_.end());
}

double QuadratureRule::weight_sum() const
{
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x)
{
    double p0 = 1.0;
    double p1 = x;
    if (n == 0)
        return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    // n (x P_n - P_{n-1}) / (x^2 - 1); nodes never sit at +-1.
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

Gauss1D compute_gauss(int n)
{
    Gauss1D g;
    g.order = n;
    g.nodes.assign(n, 0.0);
    g.weights.assign(n, 0.0);

    const double pi = std::numbers::pi;
    const int half = (n + 1) / 2;
    for (int k = 1; k <= half; ++k) {
        // The k-th largest zero lies in (cos(k pi / n), cos((k-1) pi / n)).
        double hi = std::cos((k - 1) * pi / n);
        double lo = std::cos(k * pi / n);
        double x = std::cos(pi * (k - 0.25) / (n + 0.5));
        if (!(x > lo && x < hi))
            x = 0.5 * (lo + hi);

        double f_lo = legendre_with_derivative(n, lo).first;
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre_with_derivative(n, x);
            if (p == 0.0)
                break;
            if ((p < 0.0) == (f_lo < 0.0)) {
                lo = x;
                f_lo = p;
            } else {
                hi = x;
            }
            double next = x - p / dp;
            if (!(next > lo && next < hi))
                next = 0.5 * (lo + hi);
            const double step = std::abs(next - x);
            x = next;
            if (step <= 1e-16 * std::max(1.0, std::abs(x)))
                break;
        }
        if (n % 2 == 1 && k == half)
            x = 0.0;

        const double dp = legendre_with_derivative(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Descending order for k; store ascending and mirrored.
        g.nodes[n - k] = x;
        g.nodes[k - 1] = -x;
        g.weights[n - k] = w;
        g.weights[k - 1] = w;
    }
    return g;
}

} // namespace

const Gauss1D& gauss_legendre(int n)
{
    if (n < 1 || n > kMaxGaussOrder)
        throw ParameterError("gauss_legendre: order " + std::to_string(n) + " outside [1, 64]");
    static const std::vector<Gauss1D> table = [] {
        std::vector<Gauss1D> t(kMaxGaussOrder + 1);
        for (int k = 1; k <= kMaxGaussOrder; ++k)
            t[k] = compute_gauss(k);
        return t;
    }();
    return table[n];
}

Rule1D gauss_on_interval(int n, double a, double b)
{
    const Gauss1D& g = gauss_legendre(n);
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * g.nodes[i];
        r.weights[i] = half * g.weights[i];
    }
    return r;
}

AffineMap2D::AffineMap2D(std::array<std::array<double, 2>, 2> linear, Point2 offset) : a_(linear), b_(offset)
{
    const double det = determinant();
    if (det == 0.0 || !std::isfinite(det))
        throw ParameterError("AffineMap2D: singular linear part");
}

AffineMap2D AffineMap2D::identity()
{
    return AffineMap2D({{{1.0, 0.0}, {0.0, 1.0}}}, {});
}

AffineMap2D AffineMap2D::scale_translate(double sx, double sy, Point2 offset)
{
    return AffineMap2D({{{sx, 0.0}, {0.0, sy}}}, offset);
}

AffineMap2D AffineMap2D::rotation(double angle, Point2 offset)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return AffineMap2D({{{c, -s}, {s, c}}}, offset);
}

Point2 AffineMap2D::apply(Point2 p) const
{
    return {a_[0][0] * p.x + a_[0][1] * p.y + b_.x, a_[1][0] * p.x + a_[1][1] * p.y + b_.y};
}

Point2 AffineMap2D::apply_inverse(Point2 p) const
{
    const double det = determinant();
    const double dx = p.x - b_.x;
    const double dy = p.y - b_.y;
    return {(a_[1][1] * dx - a_[0][1] * dy) / det, (-a_[1][0] * dx + a_[0][0] * dy) / det};
}

double AffineMap2D::determinant() const
{
    return a_[0][0] * a_[1][1] - a_[0][1] * a_[1][0];
}

QuadratureRule tensor_rule(int nx, int ny, const Box& box)
{
    if (!box.valid())
        throw ParameterError("tensor_rule: degenerate box " + to_string(box));
    const Rule1D rx = gauss_on_interval(nx, box.lo.x, box.hi.x);
    const Rule1D ry = gauss_on_interval(ny, box.lo.y, box.hi.y);
    QuadratureRule rule(Provenance::Tensor);
    rule.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            rule.add({rx.nodes[i], ry.nodes[j]}, rx.weights[i] * ry.weights[j]);
    return rule;
}

QuadratureRule map_rule(const QuadratureRule& rule, const AffineMap2D& map)
{
    const double scale = std::abs(map.determinant());
    QuadratureRule out(rule.provenance());
    out.reserve(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        out.add(map.apply(rule.points()[i]), rule.weights()[i] * scale);
    return out;
}

double signed_area(Point2 a, Point2 b, Point2 c)
{
    return 0.5 * cross(b - a, c - a);
}

QuadratureRule triangle_rule(int n, Point2 a, Point2 b, Point2 c)
{
    const double area = std::abs(signed_area(a, b, c));
    if (!(area > 1e-300))
        throw GeometryError("triangle_rule: collinear vertices " + to_string(a) + ", " + to_string(b) + ", " +
                            to_string(c));
    const Rule1D r = gauss_on_interval(n, 0.0, 1.0);
    QuadratureRule rule(Provenance::Triangle);
    rule.reserve(static_cast<std::size_t>(n) * n);
    // (xi, eta) -> (1 - xi) a + xi (1 - eta) b + xi eta c, Jacobian 2 |T| xi.
    for (int i = 0; i < n; ++i) {
        const double xi = r.nodes[i];
        for (int j = 0; j < n; ++j) {
            const double eta = r.nodes[j];
            const Point2 p = (1.0 - xi) * a + (xi * (1.0 - eta)) * b + (xi * eta) * c;
            rule.add(p, r.weights[i] * r.weights[j] * 2.0 * area * xi);
        }
    }
    return rule;
}

double integrate(const QuadratureRule& rule, const ScalarField& f)
{
    double sum = 0.0;
    const auto pts = rule.points();
    const auto wts = rule.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double v = f(pts[i]);
        if (!std::isfinite(v))
            throw EvaluationError("integrate: non-finite integrand at " + to_string(pts[i]));
        sum += wts[i] * v;
    }
    return sum;
}

} // namespace cutquad
