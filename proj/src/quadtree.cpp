#include "cutquad/quadtree.hpp"

#include "cutquad/error.hpp"

#include <cmath>

namespace cutquad {

void QuadtreeConfig::validate() const
{
    if (n_set < 1 || n_set > kMaxGaussOrder)
        throw ParameterError("quadtree: n_set must be in [1, " + std::to_string(kMaxGaussOrder) + "], got " +
                             std::to_string(n_set));
    if (depth < 0 || depth > kMaxQuadtreeDepth)
        throw ParameterError("quadtree: depth must be in [0, " + std::to_string(kMaxQuadtreeDepth) + "], got " +
                             std::to_string(depth));
    if (grid < 2)
        throw ParameterError("quadtree: classification grid must be at least 2");
}

namespace {

void collect_leaves(const LevelSet& ls, const Box& box, int level, const QuadtreeConfig& cfg,
                    std::vector<QuadtreeLeaf>& out)
{
    const CellState state = classify_cell(ls, box, cfg.grid);
    if (state != CellState::Cut || level == cfg.depth) {
        out.push_back({box, state, level});
        return;
    }
    const Point2 c = box.center();
    const Box children[4] = {
        {box.lo, c},
        {{c.x, box.lo.y}, {box.hi.x, c.y}},
        {{box.lo.x, c.y}, {c.x, box.hi.y}},
        {c, box.hi},
    };
    for (const Box& child : children)
        collect_leaves(ls, child, level + 1, cfg, out);
}

void check_size(const QuadratureRule& rule)
{
    if (rule.size() > kMaxRulePoints)
        throw ResourceError("quadtree: more than " + std::to_string(kMaxRulePoints) + " points");
}

double phi_checked(const LevelSet& ls, Point2 p)
{
    const double v = ls(p);
    if (!std::isfinite(v))
        throw EvaluationError("tessellate_leaf: non-finite level set at " + to_string(p));
    return v;
}

} // namespace

std::vector<QuadtreeLeaf> quadtree_leaves(const LevelSet& ls, const Box& cell, const QuadtreeConfig& cfg)
{
    cfg.validate();
    if (!cell.valid())
        throw ParameterError("quadtree: degenerate cell " + to_string(cell));
    std::vector<QuadtreeLeaf> leaves;
    collect_leaves(ls, cell, 0, cfg, leaves);
    return leaves;
}

QuadratureRule quadtree_rule(const LevelSet& ls, const Box& cell, const QuadtreeConfig& cfg)
{
    const bool tessellate = cfg.leaf_mode == LeafMode::Tessellate;
    QuadratureRule rule(tessellate ? Provenance::Tessellate : Provenance::Quadtree);
    for (const QuadtreeLeaf& leaf : quadtree_leaves(ls, cell, cfg)) {
        switch (leaf.state) {
        case CellState::Outside: break;
        case CellState::Inside: rule.append(tensor_rule(cfg.n_set, cfg.n_set, leaf.box)); break;
        case CellState::Cut:
            if (tessellate) {
                for (const Triangle& t : tessellate_leaf(ls, leaf.box))
                    rule.append(triangle_rule(cfg.n_set, t.a, t.b, t.c));
            } else {
                const QuadratureRule full = tensor_rule(cfg.n_set, cfg.n_set, leaf.box);
                for (std::size_t i = 0; i < full.size(); ++i)
                    if (ls(full.points()[i]) <= 0.0)
                        rule.add(full.points()[i], full.weights()[i]);
            }
            break;
        }
        check_size(rule);
    }
    return rule;
}

std::vector<Triangle> tessellate_leaf(const LevelSet& ls, const Box& cell)
{
    if (!cell.valid())
        throw ParameterError("tessellate_leaf: degenerate cell " + to_string(cell));
    const Point2 corner[4] = {cell.lo, {cell.hi.x, cell.lo.y}, cell.hi, {cell.lo.x, cell.hi.y}};
    double v[4];
    bool in[4];
    for (int k = 0; k < 4; ++k) {
        v[k] = phi_checked(ls, corner[k]);
        in[k] = v[k] <= 0.0;
    }
    auto crossing = [&](int a, int b) {
        const double t = v[a] / (v[a] - v[b]);
        return corner[a] + t * (corner[b] - corner[a]);
    };

    std::vector<std::vector<Point2>> polygons;
    const bool saddle = in[0] == in[2] && in[1] == in[3] && in[0] != in[1];
    if (saddle && !(phi_checked(ls, cell.center()) <= 0.0)) {
        // Two separate corner triangles around the active corners.
        for (int k = 0; k < 4; ++k) {
            if (!in[k])
                continue;
            const int prev = (k + 3) % 4;
            const int next = (k + 1) % 4;
            polygons.push_back({corner[k], crossing(k, next), crossing(prev, k)});
        }
    } else {
        std::vector<Point2> poly;
        for (int k = 0; k < 4; ++k) {
            const int next = (k + 1) % 4;
            if (in[k])
                poly.push_back(corner[k]);
            if (in[k] != in[next])
                poly.push_back(crossing(k, next));
        }
        if (!poly.empty())
            polygons.push_back(std::move(poly));
    }

    std::vector<Triangle> tris;
    for (const auto& poly : polygons)
        for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
            const Triangle t{poly[0], poly[k], poly[k + 1]};
            if (std::abs(signed_area(t.a, t.b, t.c)) > 1e-300)
                tris.push_back(t);
        }
    return tris;
}

} // namespace cutquad
