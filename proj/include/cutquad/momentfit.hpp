#pragma once

#include "cutquad/level_set.hpp"
#include "cutquad/poly.hpp"
#include "cutquad/quad_core.hpp"
#include "cutquad/quadtree.hpp"

#include <Eigen/Dense>

#include <vector>

namespace cutquad {

struct MomentFitConfig
{
    int n_set = 2;
    /// Reference integrals for the Lagrange variant; its n_set is overridden by n_set above.
    QuadtreeConfig reference{};
    double surface_safety = 1.6;
    double volume_safety = 1.0;

    /// Throws ParameterError.
    void validate() const;
    /// k_q = 2 n_set - 1.
    int order() const { return 2 * n_set - 1; }
};

/// Linear system of a moment-fitted rule: matrix (moments x nodes) times weights = rhs.
struct MomentSystem
{
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    Eigen::VectorXd weights;
    double residual = 0.0;
    Eigen::Index rank = 0;
};

/// Nodes are (2 n_set)^2 tensor Gauss points; weights are quadtree reference integrals
/// of the tensor Lagrange polynomials on those nodes.
QuadratureRule lagrange_momentfit_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg);

struct HmfResult
{
    QuadratureRule rule;
    MomentSystem system;
};

/// Rule on the interface {phi = 0} inside the cell (line integrals).
HmfResult hmf_interface_detailed(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg);
QuadratureRule hmf_interface_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg);

struct HmfVolumeResult
{
    QuadratureRule rule;
    MomentSystem system;
    HmfResult interface;
};

HmfVolumeResult hmf_volume_detailed(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg);
QuadratureRule hmf_volume_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg);

/// Stream functions psi of total degree 1..order+1 in the cell-local coordinates
/// xi = 2 (x - cx) / hx, eta = 2 (y - cy) / hy.
std::vector<Poly2D> hmf_stream_functions(int order);

/// g = (d psi / dy, -d psi / dx) in physical coordinates for a cell of size hx x hy,
/// as polynomials in (xi, eta).
std::pair<Poly2D, Poly2D> hmf_surface_field(const Poly2D& psi, double hx, double hy);

/// Number of interface-rule nodes: ceil(safety * moments) rounded up to a square.
int hmf_node_side(int moments, double safety);

} // namespace cutquad
