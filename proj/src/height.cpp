#include "cutquad/height.hpp"

#include "cutquad/error.hpp"
#include "cutquad/geometry.hpp"
#include "cutquad/roots.hpp"

#include <algorithm>
#include <cmath>

namespace cutquad {

void HeightConfig::validate() const
{
    if (n_set < 1 || n_set > kMaxGaussOrder)
        throw ParameterError("height: n_set must be in [1, " + std::to_string(kMaxGaussOrder) + "], got " +
                             std::to_string(n_set));
    if (samples < 4)
        throw ParameterError("height: monotonicity sample grid must be at least 4");
    if (max_depth < 0)
        throw ParameterError("height: max depth must be nonnegative");
    if (grid < 2)
        throw ParameterError("height: classification grid must be at least 2");
}

namespace {

// Coordinates split into a tangential part t and a height part h.
struct Axes
{
    int height; // 0 = x, 1 = y

    Point2 point(double t, double h) const { return height == 1 ? Point2{t, h} : Point2{h, t}; }
    double t_lo(const Box& b) const { return height == 1 ? b.lo.x : b.lo.y; }
    double t_hi(const Box& b) const { return height == 1 ? b.hi.x : b.hi.y; }
    double h_lo(const Box& b) const { return height == 1 ? b.lo.y : b.lo.x; }
    double h_hi(const Box& b) const { return height == 1 ? b.hi.y : b.hi.x; }
    double grad(Vec2 g) const { return height == 1 ? g.y : g.x; }
    Box sub(const Box& b, double t0, double t1) const
    {
        return height == 1 ? Box{{t0, b.lo.y}, {t1, b.hi.y}} : Box{{b.lo.x, t0}, {b.hi.x, t1}};
    }
};

bool monotone(const LevelSet& ls, const Box& box, const Axes& ax, int m)
{
    bool any_pos = false, any_neg = false;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            const Point2 p = box.at(static_cast<double>(i) / (m - 1), static_cast<double>(j) / (m - 1));
            const double d = ax.grad(ls.gradient(p));
            if (!std::isfinite(d))
                throw EvaluationError("height: non-finite gradient at " + to_string(p));
            any_pos = any_pos || d > 0.0;
            any_neg = any_neg || d < 0.0;
        }
    return !(any_pos && any_neg);
}

void append_roots(std::vector<double>& breaks, const std::vector<double>& roots, double lo, double hi)
{
    for (double r : roots)
        if (r > lo && r < hi)
            breaks.push_back(r);
}

void integrate_monotone(const LevelSet& ls, const Box& box, const Axes& ax, int n, QuadratureRule& rule)
{
    const double t0 = ax.t_lo(box), t1 = ax.t_hi(box);
    const double h0 = ax.h_lo(box), h1 = ax.h_hi(box);

    // The outer integrand has kinks where the interface meets the two faces normal
    // to the height direction.
    std::vector<double> tb{t0};
    for (double h : {h0, h1})
        append_roots(tb, find_roots_1d([&](double t) { return ls(ax.point(t, h)); }, t0, t1), t0, t1);
    tb.push_back(t1);
    std::sort(tb.begin(), tb.end());

    std::vector<double> hb;
    for (std::size_t a = 0; a + 1 < tb.size(); ++a) {
        if (!(tb[a + 1] > tb[a]))
            continue;
        const Rule1D outer = gauss_on_interval(n, tb[a], tb[a + 1]);
        for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
            const double t = outer.nodes[i];
            hb.assign(1, h0);
            append_roots(hb, find_roots_1d([&](double h) { return ls(ax.point(t, h)); }, h0, h1), h0, h1);
            hb.push_back(h1);
            for (std::size_t b = 0; b + 1 < hb.size(); ++b) {
                if (!(hb[b + 1] > hb[b]))
                    continue;
                if (!(ls(ax.point(t, 0.5 * (hb[b] + hb[b + 1]))) <= 0.0))
                    continue;
                const Rule1D inner = gauss_on_interval(n, hb[b], hb[b + 1]);
                for (std::size_t j = 0; j < inner.nodes.size(); ++j)
                    rule.add(ax.point(t, inner.nodes[j]), outer.weights[i] * inner.weights[j]);
            }
        }
    }
}

void height_cell(const LevelSet& ls, const Box& box, const HeightConfig& cfg, int depth, QuadratureRule& rule)
{
    const CellState state = classify_cell(ls, box, cfg.grid);
    if (state == CellState::Outside)
        return;
    if (state == CellState::Inside) {
        rule.append(tensor_rule(cfg.n_set, cfg.n_set, box));
        return;
    }
    const Vec2 g = ls.gradient(box.center());
    const Axes ax{std::abs(g.y) > std::abs(g.x) ? 1 : 0};
    if (monotone(ls, box, ax, cfg.samples)) {
        integrate_monotone(ls, box, ax, cfg.n_set, rule);
        return;
    }
    if (depth >= cfg.max_depth)
        throw MethodFailure("height: subdivision depth " + std::to_string(cfg.max_depth) + " exhausted at cell " +
                            to_string(box));
    // Split the longer side (the tangential one on ties) so repeated splits keep cells square-ish.
    const double t_len = ax.t_hi(box) - ax.t_lo(box);
    const double h_len = ax.h_hi(box) - ax.h_lo(box);
    const Axes split = h_len > t_len ? Axes{1 - ax.height} : ax;
    const double tm = 0.5 * (split.t_lo(box) + split.t_hi(box));
    height_cell(ls, split.sub(box, split.t_lo(box), tm), cfg, depth + 1, rule);
    height_cell(ls, split.sub(box, tm, split.t_hi(box)), cfg, depth + 1, rule);
}

} // namespace

QuadratureRule height_rule(const LevelSet& ls, const Box& cell, const HeightConfig& cfg)
{
    cfg.validate();
    if (!cell.valid())
        throw ParameterError("height: degenerate cell " + to_string(cell));
    if (classify_cell(ls, cell, cfg.grid) == CellState::Inside)
        return tensor_rule(cfg.n_set, cfg.n_set, cell);
    QuadratureRule rule(Provenance::Height);
    height_cell(ls, cell, cfg, 0, rule);
    return rule;
}

} // namespace cutquad
