#pragma once

#include "cutquad/geometry.hpp"
#include "cutquad/level_set.hpp"
#include "cutquad/quad_core.hpp"

#include <vector>

namespace cutquad {

enum class LeafMode
{
    MaskedGauss,
    Tessellate,
};

inline constexpr int kMaxQuadtreeDepth = 12;
inline constexpr std::size_t kMaxRulePoints = 10'000'000;

struct QuadtreeConfig
{
    int n_set = 2;
    int depth = 3;
    LeafMode leaf_mode = LeafMode::MaskedGauss;
    int grid = kDefaultClassificationGrid;

    /// Throws ParameterError.
    void validate() const;
};

/// Leaf of the subdivision with its classification.
struct QuadtreeLeaf
{
    Box box;
    CellState state;
    int level;
};

/// Leaves in Morton order (children ordered lower-left, lower-right, upper-left, upper-right).
std::vector<QuadtreeLeaf> quadtree_leaves(const LevelSet& ls, const Box& cell, const QuadtreeConfig& cfg);

/// Inside leaves get an n_set x n_set tensor rule, Outside leaves nothing, Cut leaves at
/// the final depth are handled according to the leaf mode.
/// Throws ResourceError beyond kMaxRulePoints points.
QuadratureRule quadtree_rule(const LevelSet& ls, const Box& cell, const QuadtreeConfig& cfg);

struct Triangle
{
    Point2 a;
    Point2 b;
    Point2 c;
};

/// Marching-squares polygon of {phi <= 0} from the corner values, fan-triangulated.
/// Saddle patterns are resolved by the sign at the cell center.
std::vector<Triangle> tessellate_leaf(const LevelSet& ls, const Box& cell);

} // namespace cutquad
