#include "cutquad/oracle.hpp"

#include "cutquad/error.hpp"
#include "cutquad/quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cutquad {

namespace {

// Gauss order exact for a polynomial of the given degree plus a margin of two.
int exact_order(int degree)
{
    return std::min(kMaxGaussOrder, (degree + 2) / 2 + 1);
}

// int_{x0}^{x1} u^q [V(upper)^{q+1} - V(lower)^{q+1}] dx * dy / (q + 1)
double strip_integral(const Box& bbox, int q, double x0, double x1, const Poly1D& lower, const Poly1D& upper)
{
    if (!(x1 > x0))
        return 0.0;
    const double dx = bbox.width();
    const double dy = bbox.height();
    const int deg = q + (q + 1) * std::max({lower.degree(), upper.degree(), 0});
    const Rule1D g = gauss_on_interval(exact_order(deg), x0, x1);
    double sum = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double x = g.nodes[k];
        const double u = (x - bbox.lo.x) / dx;
        const double vt = (upper(x) - bbox.lo.y) / dy;
        const double vb = (lower(x) - bbox.lo.y) / dy;
        sum += g.weights[k] * std::pow(u, q) * (std::pow(vt, q + 1) - std::pow(vb, q + 1));
    }
    return sum * dy / (q + 1);
}

double disk_integral(const DiskRegion& d, const Box& bbox, int q)
{
    const double r = d.radius;
    if (q == 0)
        return std::numbers::pi * r * r;
    // x = cx + r sin(theta), y in [cy - r cos(theta), cy + r cos(theta)].
    const Rule1D g = gauss_on_interval(64, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    const double dx = bbox.width();
    const double dy = bbox.height();
    double sum = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double c = std::cos(g.nodes[k]);
        const double x = d.center.x + r * std::sin(g.nodes[k]);
        const double u = (x - bbox.lo.x) / dx;
        const double vt = (d.center.y + r * c - bbox.lo.y) / dy;
        const double vb = (d.center.y - r * c - bbox.lo.y) / dy;
        sum += g.weights[k] * r * c * std::pow(u, q) * (std::pow(vt, q + 1) - std::pow(vb, q + 1));
    }
    return sum * dy / (q + 1);
}

} // namespace

double oracle_integral(const RegionShape& region, const Box& bbox, int q)
{
    if (q < 0)
        throw ParameterError("oracle_integral: q must be nonnegative");
    if (!bbox.valid())
        throw ParameterError("oracle_integral: degenerate bounding box");
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, GraphRegion>) {
                double sum = 0.0;
                for (const auto& piece : r.pieces)
                    sum += strip_integral(bbox, q, piece.x0, piece.x1, Poly1D{r.floor}, piece.top);
                return sum;
            } else if constexpr (std::is_same_v<T, DiskRegion>) {
                return disk_integral(r, bbox, q);
            } else if constexpr (std::is_same_v<T, LensRegion>) {
                return strip_integral(bbox, q, r.x0, r.x1, r.lower, r.upper);
            } else {
                throw UnsupportedCaseError("oracle_integral: unsupported region shape");
            }
        },
        region);
}

double oracle_integral(const TestCase& tc, int q)
{
    return oracle_integral(tc.region, tc.bbox, q);
}

namespace {

// Piecewise-linear clipping of a triangle by every component of a max-composed level set.
void clip_triangle(const std::vector<LevelSet>& parts, Triangle t, int n, QuadratureRule& out)
{
    std::vector<Point2> poly{t.a, t.b, t.c};
    const double det = cross(t.b - t.a, t.c - t.a);
    for (const LevelSet& part : parts) {
        const double v0 = part(t.a), v1 = part(t.b), v2 = part(t.c);
        auto lin = [&](Point2 p) {
            const double l1 = cross(p - t.a, t.c - t.a) / det;
            const double l2 = cross(t.b - t.a, p - t.a) / det;
            return (1.0 - l1 - l2) * v0 + l1 * v1 + l2 * v2;
        };
        std::vector<Point2> next;
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const Point2 p = poly[k];
            const Point2 r = poly[(k + 1) % poly.size()];
            const double fp = lin(p), fr = lin(r);
            if (fp <= 0.0)
                next.push_back(p);
            if ((fp <= 0.0) != (fr <= 0.0))
                next.push_back(p + fp / (fp - fr) * (r - p));
        }
        poly = std::move(next);
        if (poly.size() < 3)
            return;
    }
    for (std::size_t k = 1; k + 1 < poly.size(); ++k)
        if (std::abs(signed_area(poly[0], poly[k], poly[k + 1])) > 1e-300)
            out.append(triangle_rule(n, poly[0], poly[k], poly[k + 1]));
}

double linear_clip_integral(const TestCase& tc, int q, int depth)
{
    std::vector<LevelSet> parts;
    switch (tc.level_set.form()) {
    case LevelSet::Form::Polynomial:
    case LevelSet::Form::Generic: parts = {tc.level_set}; break;
    case LevelSet::Form::ComposedMax: parts = tc.level_set.parts(); break;
    case LevelSet::Form::ComposedMin:
        throw UnsupportedCaseError("tessellation_estimate: min-composed level sets are not supported");
    }
    QuadtreeConfig cfg;
    // Exact on every triangle and every uncut square for this integrand.
    cfg.n_set = q + 1;
    cfg.depth = depth;
    cfg.leaf_mode = LeafMode::Tessellate;
    QuadratureRule rule;
    for (const QuadtreeLeaf& leaf : quadtree_leaves(tc.level_set, tc.domain, cfg)) {
        if (leaf.state == CellState::Inside) {
            rule.append(tensor_rule(cfg.n_set, cfg.n_set, leaf.box));
        } else if (leaf.state == CellState::Cut) {
            const Box& b = leaf.box;
            const Point2 c10{b.hi.x, b.lo.y}, c01{b.lo.x, b.hi.y};
            clip_triangle(parts, {b.lo, c10, b.hi}, cfg.n_set, rule);
            clip_triangle(parts, {b.lo, b.hi, c01}, cfg.n_set, rule);
        }
    }
    return integrate(rule, scaled_monomial(tc, q));
}

} // namespace

TessellationEstimate tessellation_estimate(const TestCase& tc, int q, int depth)
{
    if (depth < 1)
        throw ParameterError("tessellation_estimate: depth must be at least 1");
    TessellationEstimate e;
    e.coarse = linear_clip_integral(tc, q, depth - 1);
    e.fine = linear_clip_integral(tc, q, depth);
    e.extrapolated = (4.0 * e.fine - e.coarse) / 3.0;
    return e;
}

double cross_check_references(const TestCase& tc, const std::vector<int>& degrees, int depth)
{
    double worst = 0.0;
    for (int q : degrees) {
        const double ref = tc.reference(q);
        const double est = tessellation_estimate(tc, q, depth).extrapolated;
        worst = std::max(worst, std::abs(est - ref) / std::max(std::abs(ref), 1e-300));
    }
    return worst;
}

} // namespace cutquad
