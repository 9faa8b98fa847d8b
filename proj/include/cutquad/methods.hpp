#pragma once

#include "cutquad/catalog.hpp"
#include "cutquad/quad_core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cutquad {

enum class MethodId
{
    Quadtree,
    Tessellate,
    MomentFitLagrange,
    Hmf,
    Height,
    Green,
};

std::string_view to_string(MethodId m);
/// Accepts the method ids and the preset "tessellate-direct" (tessellate at level 0).
/// Throws UnsupportedCaseError listing the valid ids.
MethodId parse_method(std::string_view id);
std::vector<MethodId> parse_method_list(std::string_view comma_separated);
std::vector<std::string> method_ids();

/// Whether the method takes a subdivision level.
bool uses_level(MethodId m);
/// quadtree 3, tessellate 0, momentfit-lagrange 3; 0 for the others.
int default_level(MethodId m);
/// Green's theorem works on the boundary chain and ignores the background mesh.
bool is_mesh_free(MethodId m);
/// Methods driven by the level set alone.
bool is_implicit(MethodId m);

struct MethodParams
{
    int n_set = 2;
    std::optional<int> level;
};

/// Rule of one method on one cell (Inside and Cut cells; the method shortcuts uncut cells).
QuadratureRule cell_rule(MethodId m, const LevelSet& ls, const Box& cell, const MethodParams& params);

struct PipelineResult
{
    QuadratureRule rule;
    std::size_t n_qp_cut = 0;
    int cut_cells = 0;
};

/// Classifies every cell of an n_ele x n_ele mesh over the case domain and dispatches the
/// method on Inside and Cut cells; Outside cells contribute nothing. Mesh-free methods
/// ignore n_ele and count every point as a cut-cell point.
PipelineResult run_pipeline(MethodId m, const TestCase& tc, int n_ele, const MethodParams& params);

} // namespace cutquad
