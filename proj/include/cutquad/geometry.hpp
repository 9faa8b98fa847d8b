#pragma once

#include "cutquad/bezier.hpp"
#include "cutquad/level_set.hpp"
#include "cutquad/types.hpp"

#include <array>
#include <vector>

namespace cutquad {

/// Closed, counterclockwise boundary of the active region made of rational Bezier segments.
class BoundaryChain
{
public:
    /// Throws GeometryError if the segments do not close up to 1e-12 or are clockwise.
    explicit BoundaryChain(std::vector<RationalBezier> segments);

    const std::vector<RationalBezier>& segments() const { return segments_; }

    /// Signed area of the polygon through densely sampled curve points.
    double sampled_signed_area(int samples_per_segment = 64) const;

    /// Winding number of the chain around p (exact ray crossing on each segment).
    int winding_number(Point2 p) const;

private:
    std::vector<RationalBezier> segments_;
};

/// Uniform Cartesian background mesh.
class BackgroundMesh
{
public:
    BackgroundMesh(const Box& domain, int nx, int ny);

    const Box& domain() const { return domain_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int cell_count() const { return nx_ * ny_; }
    /// Cell (i, j), i along x; row-major with j outer.
    Box cell(int i, int j) const;

private:
    Box domain_;
    int nx_;
    int ny_;
};

enum class CellState
{
    Inside,
    Outside,
    Cut,
};

inline constexpr int kDefaultClassificationGrid = 5;

/// Samples phi on a grid x grid lattice including corners.
CellState classify_cell(const LevelSet& ls, const Box& cell, int grid = kDefaultClassificationGrid);

/// Roots of phi along each edge, parameter = fraction of edge length measured
/// in increasing coordinate direction.
struct EdgeRoots
{
    std::vector<double> bottom;
    std::vector<double> right;
    std::vector<double> top;
    std::vector<double> left;
};

EdgeRoots edge_roots(const LevelSet& ls, const Box& cell);

/// One straight piece of the cell boundary, with outward normal.
struct EdgePiece
{
    Point2 a;
    Point2 b;
    Vec2 normal;
};

/// Sub-segments of the cell boundary where phi <= 0 (midpoint test between edge roots).
std::vector<EdgePiece> active_edge_pieces(const LevelSet& ls, const Box& cell);

} // namespace cutquad
