#include "cutquad/geometry.hpp"

#include "cutquad/error.hpp"
#include "cutquad/quad_core.hpp"
#include "cutquad/roots.hpp"

#include <cmath>

namespace cutquad {

BoundaryChain::BoundaryChain(std::vector<RationalBezier> segments) : segments_(std::move(segments))
{
    if (segments_.empty())
        throw GeometryError("BoundaryChain: no segments");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Point2 end = segments_[i].end();
        const Point2 next = segments_[(i + 1) % segments_.size()].start();
        if (norm(end - next) > 1e-12)
            throw GeometryError("BoundaryChain: open chain at segment " + std::to_string(i) + ": " + to_string(end) +
                                " vs " + to_string(next));
    }
    if (!(sampled_signed_area() > 0.0))
        throw GeometryError("BoundaryChain: chain is not counterclockwise");
}

double BoundaryChain::sampled_signed_area(int samples_per_segment) const
{
    double twice = 0.0;
    for (const auto& seg : segments_) {
        Point2 prev = seg.start();
        for (int k = 1; k <= samples_per_segment; ++k) {
            const Point2 cur = bezier_eval(seg, static_cast<double>(k) / samples_per_segment).point;
            twice += cross(prev, cur);
            prev = cur;
        }
    }
    return 0.5 * twice;
}

int BoundaryChain::winding_number(Point2 p) const
{
    int winding = 0;
    for (const auto& seg : segments_) {
        // w(s) (y(s) - p.y) in Bernstein form; its roots are the ray crossings.
        std::vector<double> coeffs(seg.control().size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] = seg.weights()[i] * (seg.control()[i].y - p.y);
        const auto roots = find_roots_1d([&](double s) { return bernstein_eval(coeffs, s); }, 0.0, 1.0,
                                         8 * (seg.degree() + 1) + 8);
        for (double s : roots) {
            if (s >= 1.0)
                continue; // half-open: the next segment owns the junction
            const CurvePoint cp = bezier_eval(seg, s);
            if (cp.point.x <= p.x || cp.derivative.y == 0.0)
                continue;
            winding += cp.derivative.y > 0.0 ? 1 : -1;
        }
    }
    return winding;
}

BackgroundMesh::BackgroundMesh(const Box& domain, int nx, int ny) : domain_(domain), nx_(nx), ny_(ny)
{
    if (!domain.valid())
        throw ParameterError("BackgroundMesh: degenerate domain");
    if (nx < 1 || ny < 1)
        throw ParameterError("BackgroundMesh: element counts must be positive");
}

Box BackgroundMesh::cell(int i, int j) const
{
    const double hx = domain_.width() / nx_;
    const double hy = domain_.height() / ny_;
    const Point2 lo{domain_.lo.x + i * hx, domain_.lo.y + j * hy};
    const Point2 hi{i + 1 == nx_ ? domain_.hi.x : domain_.lo.x + (i + 1) * hx,
                    j + 1 == ny_ ? domain_.hi.y : domain_.lo.y + (j + 1) * hy};
    return {lo, hi};
}

CellState classify_cell(const LevelSet& ls, const Box& cell, int grid)
{
    if (grid < 2)
        throw ParameterError("classify_cell: grid must be at least 2");
    bool any_in = false;
    bool any_out = false;
    for (int j = 0; j < grid; ++j)
        for (int i = 0; i < grid; ++i) {
            const Point2 p = cell.at(static_cast<double>(i) / (grid - 1), static_cast<double>(j) / (grid - 1));
            const double v = ls(p);
            if (!std::isfinite(v))
                throw EvaluationError("classify_cell: non-finite level set at " + to_string(p));
            (v <= 0.0 ? any_in : any_out) = true;
        }
    if (any_in && any_out)
        return CellState::Cut;
    return any_in ? CellState::Inside : CellState::Outside;
}

EdgeRoots edge_roots(const LevelSet& ls, const Box& cell)
{
    const double x0 = cell.lo.x, x1 = cell.hi.x, y0 = cell.lo.y, y1 = cell.hi.y;
    const double w = cell.width(), h = cell.height();
    EdgeRoots r;
    r.bottom = find_roots_1d([&](double t) { return ls({x0 + t * w, y0}); }, 0.0, 1.0);
    r.right = find_roots_1d([&](double t) { return ls({x1, y0 + t * h}); }, 0.0, 1.0);
    r.top = find_roots_1d([&](double t) { return ls({x0 + t * w, y1}); }, 0.0, 1.0);
    r.left = find_roots_1d([&](double t) { return ls({x0, y0 + t * h}); }, 0.0, 1.0);
    return r;
}

std::vector<EdgePiece> active_edge_pieces(const LevelSet& ls, const Box& cell)
{
    const EdgeRoots roots = edge_roots(ls, cell);
    const Point2 c00 = cell.lo;
    const Point2 c10{cell.hi.x, cell.lo.y};
    const Point2 c11 = cell.hi;
    const Point2 c01{cell.lo.x, cell.hi.y};

    struct Edge
    {
        Point2 from; // parameter 0 (increasing coordinate)
        Point2 to;
        const std::vector<double>* roots;
        Vec2 normal;
        bool reverse; // counterclockwise traversal runs against the parameter
    };
    const Edge edges[4] = {
        {c00, c10, &roots.bottom, {0.0, -1.0}, false},
        {c10, c11, &roots.right, {1.0, 0.0}, false},
        {c01, c11, &roots.top, {0.0, 1.0}, true},
        {c00, c01, &roots.left, {-1.0, 0.0}, true},
    };

    std::vector<EdgePiece> pieces;
    for (const Edge& e : edges) {
        std::vector<double> breaks{0.0};
        for (double t : *e.roots)
            if (t > 0.0 && t < 1.0)
                breaks.push_back(t);
        breaks.push_back(1.0);
        std::vector<EdgePiece> local;
        for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
            const double ta = breaks[k], tb = breaks[k + 1];
            if (!(tb > ta))
                continue;
            const Point2 a = e.from + ta * (e.to - e.from);
            const Point2 b = e.from + tb * (e.to - e.from);
            if (ls(0.5 * (a + b)) <= 0.0)
                local.push_back(e.reverse ? EdgePiece{b, a, e.normal} : EdgePiece{a, b, e.normal});
        }
        if (e.reverse)
            pieces.insert(pieces.end(), local.rbegin(), local.rend());
        else
            pieces.insert(pieces.end(), local.begin(), local.end());
    }
    return pieces;
}

} // namespace cutquad
