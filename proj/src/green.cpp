#include "cutquad/green.hpp"

#include "cutquad/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cutquad {

void GreenConfig::validate() const
{
    if (q_points < 1 || q_points > kMaxGaussOrder || p_points < 1 || p_points > kMaxGaussOrder)
        throw ParameterError("green: Q and P must be in [1, " + std::to_string(kMaxGaussOrder) + "]");
}

GreenResult green_rule_detailed(const BoundaryChain& chain, const GreenConfig& cfg)
{
    cfg.validate();
    GreenResult out{QuadratureRule(Provenance::Green), 0.0, {}};

    double c = std::numeric_limits<double>::infinity();
    for (const auto& seg : chain.segments())
        for (const Point2& p : seg.control())
            c = std::min(c, p.x);
    out.c = c;

    const Rule1D sq = gauss_on_interval(cfg.q_points, 0.0, 1.0);
    for (std::size_t k = 0; k < chain.segments().size(); ++k) {
        const RationalBezier& seg = chain.segments()[k];
        const auto& cps = seg.control();
        const bool zero_length =
            std::all_of(cps.begin(), cps.end(), [&](Point2 p) { return norm(p - cps.front()) == 0.0; });
        if (zero_length) {
            out.warnings.push_back("segment " + std::to_string(k) + " has zero length; skipped");
            continue;
        }
        const double y0 = cps.front().y;
        const bool flat = std::all_of(cps.begin(), cps.end(),
                                      [&](Point2 p) { return std::abs(p.y - y0) <= 1e-14 * (1.0 + std::abs(y0)); });
        if (flat)
            continue;
        for (std::size_t i = 0; i < sq.nodes.size(); ++i) {
            const CurvePoint cp = bezier_eval(seg, sq.nodes[i]);
            const Rule1D sz = gauss_on_interval(cfg.p_points, c, cp.point.x);
            for (std::size_t j = 0; j < sz.nodes.size(); ++j)
                out.rule.add({sz.nodes[j], cp.point.y}, sq.weights[i] * sz.weights[j] * cp.derivative.y);
        }
    }
    return out;
}

QuadratureRule green_rule(const BoundaryChain& chain, const GreenConfig& cfg)
{
    return green_rule_detailed(chain, cfg).rule;
}

} // namespace cutquad
