#include "cutquad/methods.hpp"

#include "cutquad/error.hpp"
#include "cutquad/geometry.hpp"
#include "cutquad/green.hpp"
#include "cutquad/height.hpp"
#include "cutquad/momentfit.hpp"
#include "cutquad/quadtree.hpp"

namespace cutquad {

namespace {

constexpr MethodId kAllMethods[] = {
    MethodId::Quadtree, MethodId::Tessellate, MethodId::MomentFitLagrange,
    MethodId::Hmf,      MethodId::Height,     MethodId::Green,
};

} // namespace

std::string_view to_string(MethodId m)
{
    switch (m) {
    case MethodId::Quadtree: return "quadtree";
    case MethodId::Tessellate: return "tessellate";
    case MethodId::MomentFitLagrange: return "momentfit-lagrange";
    case MethodId::Hmf: return "hmf";
    case MethodId::Height: return "height";
    case MethodId::Green: return "green";
    }
    return "unknown";
}

std::vector<std::string> method_ids()
{
    std::vector<std::string> ids;
    for (MethodId m : kAllMethods)
        ids.emplace_back(to_string(m));
    return ids;
}

MethodId parse_method(std::string_view id)
{
    for (MethodId m : kAllMethods)
        if (to_string(m) == id)
            return m;
    if (id == "tessellate-direct")
        return MethodId::Tessellate;
    std::string msg = "unknown method '" + std::string(id) + "'; valid ids:";
    for (const auto& name : method_ids())
        msg += " " + name;
    throw UnsupportedCaseError(msg);
}

std::vector<MethodId> parse_method_list(std::string_view list)
{
    std::vector<MethodId> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? list.size() : comma;
        if (end > start)
            out.push_back(parse_method(list.substr(start, end - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (out.empty())
        throw ParameterError("empty method list");
    return out;
}

bool uses_level(MethodId m)
{
    return m == MethodId::Quadtree || m == MethodId::Tessellate || m == MethodId::MomentFitLagrange;
}

int default_level(MethodId m)
{
    switch (m) {
    case MethodId::Quadtree:
    case MethodId::MomentFitLagrange: return 3;
    default: return 0;
    }
}

bool is_mesh_free(MethodId m)
{
    return m == MethodId::Green;
}

bool is_implicit(MethodId m)
{
    return m != MethodId::Green;
}

QuadratureRule cell_rule(MethodId m, const LevelSet& ls, const Box& cell, const MethodParams& params)
{
    const int level = params.level.value_or(default_level(m));
    switch (m) {
    case MethodId::Quadtree:
    case MethodId::Tessellate: {
        QuadtreeConfig cfg;
        cfg.n_set = params.n_set;
        cfg.depth = level;
        cfg.leaf_mode = m == MethodId::Tessellate ? LeafMode::Tessellate : LeafMode::MaskedGauss;
        return quadtree_rule(ls, cell, cfg);
    }
    case MethodId::MomentFitLagrange: {
        MomentFitConfig cfg;
        cfg.n_set = params.n_set;
        cfg.reference.depth = level;
        return lagrange_momentfit_rule(ls, cell, cfg);
    }
    case MethodId::Hmf: {
        MomentFitConfig cfg;
        cfg.n_set = params.n_set;
        return hmf_volume_rule(ls, cell, cfg);
    }
    case MethodId::Height: {
        HeightConfig cfg;
        cfg.n_set = params.n_set;
        return height_rule(ls, cell, cfg);
    }
    case MethodId::Green: throw UnsupportedCaseError("green works on a boundary chain, not on a cell");
    }
    throw UnsupportedCaseError("unknown method");
}

PipelineResult run_pipeline(MethodId m, const TestCase& tc, int n_ele, const MethodParams& params)
{
    if (n_ele < 1)
        throw ParameterError("run_pipeline: n_ele must be positive");
    if (params.level && !uses_level(m) && *params.level != 0)
        throw ParameterError("run_pipeline: method " + std::string(to_string(m)) + " takes no level");
    PipelineResult out;
    if (is_mesh_free(m)) {
        if (!tc.chain)
            throw UnsupportedCaseError("case " + tc.id + " has no boundary chain for method green");
        out.rule = green_rule(*tc.chain, GreenConfig::linked(params.n_set));
        out.n_qp_cut = out.rule.size();
        return out;
    }
    const BackgroundMesh mesh(tc.domain, n_ele, n_ele);
    out.rule = QuadratureRule(Provenance::Composite);
    for (int j = 0; j < mesh.ny(); ++j)
        for (int i = 0; i < mesh.nx(); ++i) {
            const Box cell = mesh.cell(i, j);
            const CellState state = classify_cell(tc.level_set, cell);
            if (state == CellState::Outside)
                continue;
            const QuadratureRule r = cell_rule(m, tc.level_set, cell, params);
            if (state == CellState::Cut) {
                out.n_qp_cut += r.size();
                ++out.cut_cells;
            }
            out.rule.append(r);
            if (out.rule.size() > kMaxRulePoints)
                throw ResourceError("run_pipeline: more than " + std::to_string(kMaxRulePoints) + " points");
        }
    return out;
}

} // namespace cutquad
