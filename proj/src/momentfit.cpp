#include "cutquad/momentfit.hpp"

#include "cutquad/error.hpp"
#include "cutquad/geometry.hpp"

#include <cmath>

namespace cutquad {

void MomentFitConfig::validate() const
{
    if (n_set < 1 || 2 * n_set > kMaxGaussOrder)
        throw ParameterError("momentfit: n_set must be in [1, " + std::to_string(kMaxGaussOrder / 2) + "], got " +
                             std::to_string(n_set));
    if (!(surface_safety >= 1.0) || !(volume_safety >= 1.0))
        throw ParameterError("momentfit: safety factors must be at least 1");
    const int k = order();
    const double surface_moments = 0.5 * (k + 1) * (k + 4);
    const double volume_moments = (k + 1.0) * (k + 1.0);
    if (surface_safety * surface_moments > 1e4 || volume_safety * volume_moments > 1e4)
        throw ParameterError("momentfit: safety factor times moment count exceeds 1e4");
    QuadtreeConfig ref = reference;
    ref.n_set = n_set;
    ref.validate();
}

namespace {

// Lagrange basis polynomials on the given nodes, evaluated at t.
void lagrange_values(const std::vector<double>& nodes, double t, std::vector<double>& out)
{
    const std::size_t m = nodes.size();
    out.assign(m, 1.0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b)
                out[a] *= (t - nodes[b]) / (nodes[a] - nodes[b]);
}

// P_0..P_k at t.
void legendre_values(int k, double t, std::vector<double>& p)
{
    p.assign(k + 2, 0.0);
    p[0] = 1.0;
    if (k + 1 >= 1)
        p[1] = t;
    for (int j = 1; j <= k; ++j)
        p[j + 1] = ((2 * j + 1) * t * p[j] - j * p[j - 1]) / (j + 1);
}

// int_{-1}^{t} P_a for a = 0..k, given P_0..P_{k+1}.
double legendre_integral(const std::vector<double>& p, int a, double t)
{
    if (a == 0)
        return t + 1.0;
    return (p[a + 1] - p[a - 1]) / (2 * a + 1);
}

struct Local
{
    Point2 c;
    double hx;
    double hy;
    Point2 operator()(Point2 x) const { return {2.0 * (x.x - c.x) / hx, 2.0 * (x.y - c.y) / hy}; }
};

Vec2 unit_normal(const LevelSet& ls, Point2 p)
{
    const Vec2 g = ls.gradient(p);
    const double len = norm(g);
    if (!(len >= 1e-10) || !std::isfinite(len))
        throw DegenerateNormalError("hmf: level-set gradient vanishes at " + to_string(p));
    return (1.0 / len) * g;
}

void solve_min_norm(MomentSystem& sys)
{
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sys.matrix);
    cod.setThreshold(1e-12);
    sys.weights = cod.solve(sys.rhs);
    sys.rank = cod.rank();
    sys.residual = (sys.matrix * sys.weights - sys.rhs).norm();
    if (!sys.weights.allFinite())
        throw MethodFailure("hmf: non-finite weights");
}

QuadratureRule to_rule(const QuadratureRule& nodes, const Eigen::VectorXd& w, Provenance prov)
{
    QuadratureRule rule(prov);
    rule.reserve(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j)
        rule.add(nodes.points()[j], w[static_cast<Eigen::Index>(j)]);
    return rule;
}

} // namespace

QuadratureRule lagrange_momentfit_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg)
{
    cfg.validate();
    const int m = 2 * cfg.n_set;
    const CellState state = classify_cell(ls, cell, cfg.reference.grid);
    QuadratureRule nodes = tensor_rule(m, m, cell);
    nodes.set_provenance(Provenance::MomentFitLagrange);
    if (state == CellState::Inside)
        return nodes;
    if (state == CellState::Outside)
        return QuadratureRule(Provenance::MomentFitLagrange);

    QuadtreeConfig ref = cfg.reference;
    ref.n_set = cfg.n_set;
    ref.leaf_mode = LeafMode::MaskedGauss;
    const QuadratureRule reference = quadtree_rule(ls, cell, ref);

    const Gauss1D& g = gauss_legendre(m);
    const Local local{cell.center(), cell.width(), cell.height()};
    std::vector<double> lx, ly;
    std::vector<double> w(static_cast<std::size_t>(m) * m, 0.0);
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const Point2 xi = local(reference.points()[i]);
        lagrange_values(g.nodes, xi.x, lx);
        lagrange_values(g.nodes, xi.y, ly);
        const double ri = reference.weights()[i];
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a)
                w[static_cast<std::size_t>(b) * m + a] += ri * lx[a] * ly[b];
    }
    QuadratureRule rule(Provenance::MomentFitLagrange);
    rule.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        rule.add(nodes.points()[j], w[j]);
    return rule;
}

std::vector<Poly2D> hmf_stream_functions(int order)
{
    std::vector<Poly2D> psi;
    for (int d = 1; d <= order + 1; ++d)
        for (int j = 0; j <= d; ++j)
            psi.push_back(Poly2D::monomial(d - j, j));
    return psi;
}

std::pair<Poly2D, Poly2D> hmf_surface_field(const Poly2D& psi, double hx, double hy)
{
    return {(2.0 / hy) * psi.dy(), (-2.0 / hx) * psi.dx()};
}

int hmf_node_side(int moments, double safety)
{
    const auto target = static_cast<long>(std::ceil(safety * moments - 1e-9));
    int side = 1;
    while (static_cast<long>(side) * side < target)
        ++side;
    return side;
}

HmfResult hmf_interface_detailed(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg)
{
    cfg.validate();
    HmfResult out{QuadratureRule(Provenance::HmfInterface), {}};
    if (!cell.valid())
        throw ParameterError("hmf: degenerate cell " + to_string(cell));
    if (classify_cell(ls, cell, cfg.reference.grid) != CellState::Cut)
        return out;

    const double hx = cell.width(), hy = cell.height();
    const Local local{cell.center(), hx, hy};
    std::vector<std::pair<Poly2D, Poly2D>> fields;
    for (const Poly2D& psi : hmf_stream_functions(cfg.order()))
        fields.push_back(hmf_surface_field(psi, hx, hy));
    const auto moments = static_cast<Eigen::Index>(fields.size());

    const int side = hmf_node_side(static_cast<int>(moments), cfg.surface_safety);
    const QuadratureRule nodes = tensor_rule(side, side, cell);
    const auto n_nodes = static_cast<Eigen::Index>(nodes.size());

    MomentSystem& sys = out.system;
    sys.matrix.resize(moments, n_nodes);
    for (Eigen::Index j = 0; j < n_nodes; ++j) {
        const Point2 x = nodes.points()[j];
        const Vec2 n = unit_normal(ls, x);
        const Point2 xi = local(x);
        for (Eigen::Index i = 0; i < moments; ++i)
            sys.matrix(i, j) = fields[i].first(xi) * n.x + fields[i].second(xi) * n.y;
    }

    // div g = 0 => integral over the interface = -(integral over the active cell boundary).
    sys.rhs = Eigen::VectorXd::Zero(moments);
    for (const EdgePiece& piece : active_edge_pieces(ls, cell)) {
        const Rule1D r = gauss_on_interval(cfg.n_set + 2, 0.0, 1.0);
        const double len = norm(piece.b - piece.a);
        for (std::size_t k = 0; k < r.nodes.size(); ++k) {
            const Point2 xi = local(piece.a + r.nodes[k] * (piece.b - piece.a));
            const double wk = r.weights[k] * len;
            for (Eigen::Index i = 0; i < moments; ++i)
                sys.rhs[i] -= wk * (fields[i].first(xi) * piece.normal.x + fields[i].second(xi) * piece.normal.y);
        }
    }
    solve_min_norm(sys);
    out.rule = to_rule(nodes, sys.weights, Provenance::HmfInterface);
    return out;
}

QuadratureRule hmf_interface_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg)
{
    return hmf_interface_detailed(ls, cell, cfg).rule;
}

HmfVolumeResult hmf_volume_detailed(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg)
{
    cfg.validate();
    if (!cell.valid())
        throw ParameterError("hmf: degenerate cell " + to_string(cell));
    HmfVolumeResult out{QuadratureRule(Provenance::HmfVolume), {}, {}};
    const CellState state = classify_cell(ls, cell, cfg.reference.grid);
    if (state == CellState::Outside)
        return out;
    if (state == CellState::Inside) {
        out.rule = tensor_rule(cfg.n_set, cfg.n_set, cell);
        out.rule.set_provenance(Provenance::HmfVolume);
        return out;
    }

    const int k = cfg.order();
    const double hx = cell.width(), hy = cell.height();
    const Local local{cell.center(), hx, hy};
    const auto moments = static_cast<Eigen::Index>((k + 1) * (k + 1));
    // Moment index i = b (k + 1) + a for P_a(xi) P_b(eta).

    // F_i = 1/2 (int f_i dx, int f_i dy); returns F_i . n for all i.
    std::vector<double> px, py;
    auto flux = [&](Point2 x, Vec2 n, Eigen::VectorXd& out_row) {
        const Point2 xi = local(x);
        legendre_values(k, xi.x, px);
        legendre_values(k, xi.y, py);
        for (int b = 0; b <= k; ++b)
            for (int a = 0; a <= k; ++a) {
                const double fx = 0.5 * hx * legendre_integral(px, a, xi.x) * py[b];
                const double fy = 0.5 * hy * px[a] * legendre_integral(py, b, xi.y);
                out_row[b * (k + 1) + a] = 0.5 * (fx * n.x + fy * n.y);
            }
    };

    MomentSystem& sys = out.system;
    sys.rhs = Eigen::VectorXd::Zero(moments);
    Eigen::VectorXd row(moments);
    for (const EdgePiece& piece : active_edge_pieces(ls, cell)) {
        const Rule1D r = gauss_on_interval(cfg.n_set + 2, 0.0, 1.0);
        const double len = norm(piece.b - piece.a);
        for (std::size_t q = 0; q < r.nodes.size(); ++q) {
            flux(piece.a + r.nodes[q] * (piece.b - piece.a), piece.normal, row);
            sys.rhs += (r.weights[q] * len) * row;
        }
    }
    out.interface = hmf_interface_detailed(ls, cell, cfg);
    const QuadratureRule& iface = out.interface.rule;
    for (std::size_t j = 0; j < iface.size(); ++j) {
        const Point2 x = iface.points()[j];
        flux(x, unit_normal(ls, x), row);
        sys.rhs += iface.weights()[j] * row;
    }

    const int side = hmf_node_side(static_cast<int>(moments), cfg.volume_safety);
    const QuadratureRule nodes = tensor_rule(side, side, cell);
    const auto n_nodes = static_cast<Eigen::Index>(nodes.size());
    sys.matrix.resize(moments, n_nodes);
    for (Eigen::Index j = 0; j < n_nodes; ++j) {
        const Point2 xi = local(nodes.points()[j]);
        legendre_values(k, xi.x, px);
        legendre_values(k, xi.y, py);
        for (int b = 0; b <= k; ++b)
            for (int a = 0; a <= k; ++a)
                sys.matrix(b * (k + 1) + a, j) = px[a] * py[b];
    }
    solve_min_norm(sys);
    out.rule = to_rule(nodes, sys.weights, Provenance::HmfVolume);
    return out;
}

QuadratureRule hmf_volume_rule(const LevelSet& ls, const Box& cell, const MomentFitConfig& cfg)
{
    return hmf_volume_detailed(ls, cell, cfg).rule;
}

} // namespace cutquad
