#pragma once

#include "cutquad/level_set.hpp"
#include "cutquad/quad_core.hpp"

namespace cutquad {

struct HeightConfig
{
    int n_set = 2;
    /// Monotonicity sample grid (m x m).
    int samples = 12;
    int max_depth = 16;
    int grid = 5;

    /// Throws ParameterError.
    void validate() const;
};

/// Nested 1D Gauss rules along a height direction. Inside cells return the plain
/// n_set x n_set tensor rule, Outside cells an empty rule.
/// Throws MethodFailure when the subdivision depth is exhausted.
QuadratureRule height_rule(const LevelSet& ls, const Box& cell, const HeightConfig& cfg);

} // namespace cutquad
