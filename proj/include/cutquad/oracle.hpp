#pragma once

#include "cutquad/catalog.hpp"

namespace cutquad {

/// Reference integral of the scaled monomial of degree q over a region shape,
/// computed by exact reduction to a 1D integral. Independent of every rule generator.
double oracle_integral(const RegionShape& region, const Box& bbox, int q);

/// Same, for a catalog case. Throws UnsupportedCaseError for unknown shapes.
double oracle_integral(const TestCase& tc, int q);

/// Richardson-extrapolated tessellation estimate of a catalog integral
/// (quadtree tessellation at depths `depth - 1` and `depth`).
struct TessellationEstimate
{
    double coarse = 0.0;
    double fine = 0.0;
    double extrapolated = 0.0;
};
TessellationEstimate tessellation_estimate(const TestCase& tc, int q, int depth = 10);

/// Compares every stored reference against the tessellation estimate; returns the
/// largest relative deviation over all q in `degrees`.
double cross_check_references(const TestCase& tc, const std::vector<int>& degrees, int depth = 10);

} // namespace cutquad
