#include "cutquad/catalog.hpp"
#include "cutquad/error.hpp"
#include "cutquad/green.hpp"
#include "cutquad/height.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace cutquad;

namespace {

const Box kUnit{{0.0, 0.0}, {1.0, 1.0}};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

BoundaryChain polygon_chain(const std::vector<Point2>& v)
{
    std::vector<RationalBezier> segs;
    for (std::size_t i = 0; i < v.size(); ++i)
        segs.push_back(RationalBezier::line(v[i], v[(i + 1) % v.size()]));
    return BoundaryChain(std::move(segs));
}

} // namespace

TEST_CASE("height rule: linear boundary with one point")
{
    const TestCase& tc = find_case("case1");
    const QuadratureRule r = height_rule(tc.level_set, tc.domain, {1});
    CHECK(rel(r.weight_sum(), 0.5) <= 1e-14);
}

TEST_CASE("height rule: quadratic boundary with two points")
{
    const TestCase& tc = find_case("case2");
    CHECK(rel(height_rule(tc.level_set, tc.domain, {2}).weight_sum(), 0.5) <= 1e-13);
}

TEST_CASE("height rule: degree-6 integrand at the exactness threshold")
{
    const TestCase& tc = find_case("case2");
    const double v = integrate(height_rule(tc.level_set, tc.domain, {11}), scaled_monomial(tc, 6));
    CHECK(rel(v, tc.reference(6)) <= 1e-12);
}

TEST_CASE("height rule: weights positive and points active")
{
    for (const TestCase& tc : catalog()) {
        CAPTURE(tc.id);
        const QuadratureRule r = height_rule(tc.level_set, tc.domain, {4});
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(r.weights()[i] > 0.0);
            CHECK(tc.level_set(r.points()[i]) <= 1e-12);
        }
    }
}

TEST_CASE("height rule: uncut cells")
{
    const LevelSet inside = LevelSet::polynomial(Poly2D{{-2.0, 1.0}});
    const QuadratureRule r = height_rule(inside, kUnit, {3});
    const QuadratureRule t = tensor_rule(3, 3, kUnit);
    REQUIRE(r.size() == t.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.points()[i] == t.points()[i]);
        CHECK(r.weights()[i] == t.weights()[i]);
    }
    CHECK(height_rule(LevelSet::polynomial(Poly2D{{1.0, 1.0}}), kUnit, {3}).empty());
}

TEST_CASE("height rule: five-sided case needs subdivision")
{
    const TestCase& tc = find_case("case3");
    const int n = 5;
    const QuadratureRule r = height_rule(tc.level_set, tc.domain, {n});
    CHECK(r.size() >= static_cast<std::size_t>(2 * n * n));
    CHECK(r.size() <= static_cast<std::size_t>(4 * n * n));
    CHECK(rel(r.weight_sum(), tc.reference_area()) <= 1e-10);
}

TEST_CASE("height rule: depth cap")
{
    // d phi / dx changes sign across the disk, so the cell must be split.
    const TestCase& tc = find_case("disk");
    HeightConfig cfg{3};
    cfg.max_depth = 0;
    CHECK_THROWS_AS(height_rule(tc.level_set, tc.domain, cfg), MethodFailure);
    cfg.n_set = 0;
    CHECK_THROWS_AS(height_rule(tc.level_set, tc.domain, cfg), ParameterError);
}

TEST_CASE("green rule: unit square")
{
    const BoundaryChain sq = polygon_chain({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const QuadratureRule r = green_rule(sq, GreenConfig::linked(1));
    CHECK(r.weight_sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("green rule: catalog areas")
{
    const TestCase& c1 = find_case("case1");
    CHECK(rel(green_rule(*c1.chain, GreenConfig::linked(1)).weight_sum(), 0.5) <= 1e-14);
    const TestCase& disk = find_case("disk");
    CHECK(rel(green_rule(*disk.chain, GreenConfig::linked(10)).weight_sum(), 0.16 * std::numbers::pi) <= 1e-10);
}

TEST_CASE("green rule: degree-6 integrand on a linear boundary")
{
    const TestCase& tc = find_case("case1");
    const double v = integrate(green_rule(*tc.chain, GreenConfig::linked(7)), scaled_monomial(tc, 6));
    CHECK(rel(v, tc.reference(6)) <= 1e-12);
}

TEST_CASE("green rule: random convex polygons")
{
    std::mt19937_64 rng(20261018);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> radius(0.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(3 + trial % 6);
        for (double& t : a)
            t = angle(rng);
        std::sort(a.begin(), a.end());
        std::vector<Point2> v;
        for (double t : a) {
            const double r = radius(rng);
            v.push_back({r * std::cos(t), r * std::sin(t)});
        }
        double area = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            area += 0.5 * cross(v[i], v[(i + 1) % v.size()]);
        if (area < 1e-3)
            continue;
        const QuadratureRule r = green_rule(polygon_chain(v), GreenConfig::linked(2));
        CHECK(rel(r.weight_sum(), area) <= 1e-13);
        // x y is degree 2, exact with two points.
        const double mxy = integrate(r, [](Point2 p) { return p.x * p.y; });
        double exact = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 p = v[i], q = v[(i + 1) % v.size()];
            exact += cross(p, q) * (2 * p.x * p.y + p.x * q.y + q.x * p.y + 2 * q.x * q.y) / 24.0;
        }
        CHECK(std::abs(mxy - exact) <= 1e-13 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("green rule: zero-length segments are skipped with a warning")
{
    const BoundaryChain sq = polygon_chain({{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}});
    const GreenResult res = green_rule_detailed(sq, GreenConfig::linked(2));
    CHECK(res.warnings.size() == 1);
    CHECK(res.rule.weight_sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(res.c == 0.0);
}
