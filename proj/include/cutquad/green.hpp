#pragma once

#include "cutquad/geometry.hpp"
#include "cutquad/quad_core.hpp"

#include <string>
#include <vector>

namespace cutquad {

struct GreenConfig
{
    /// Intermediate points per segment.
    int q_points = 2;
    /// Antiderivative points along x.
    int p_points = 2;

    static GreenConfig linked(int n) { return {n, n}; }
    /// Throws ParameterError.
    void validate() const;
};

struct GreenResult
{
    QuadratureRule rule;
    /// Minimum control-point x over the chain.
    double c = 0.0;
    std::vector<std::string> warnings;
};

/// Boundary-parametrized rule: Q points on every segment, P points on [C, x(s_q)].
/// Mesh-free; points may lie outside the active region, weights may be negative.
GreenResult green_rule_detailed(const BoundaryChain& chain, const GreenConfig& cfg);
QuadratureRule green_rule(const BoundaryChain& chain, const GreenConfig& cfg);

} // namespace cutquad
