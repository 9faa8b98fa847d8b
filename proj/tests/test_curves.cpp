#include "cutquad/bezier.hpp"
#include "cutquad/error.hpp"
#include "cutquad/level_set.hpp"
#include "cutquad/roots.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cutquad;

TEST_CASE("line segment evaluation")
{
    const RationalBezier l = RationalBezier::line({0.0, 1.0}, {2.0, 3.0});
    const CurvePoint c = bezier_eval(l, 0.25);
    CHECK(c.point.x == doctest::Approx(0.5));
    CHECK(c.point.y == doctest::Approx(1.5));
    CHECK(c.derivative.x == doctest::Approx(2.0));
    CHECK(c.derivative.y == doctest::Approx(2.0));
}

TEST_CASE("rational quadratic traces an exact quarter circle")
{
    const double w = 1.0 / std::numbers::sqrt2;
    const RationalBezier arc({{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, {1.0, w, 1.0});
    for (int k = 0; k <= 16; ++k) {
        const double s = k / 16.0;
        const CurvePoint c = bezier_eval(arc, s);
        CHECK(norm(c.point) == doctest::Approx(1.0).epsilon(1e-15));
        // Tangent is perpendicular to the radius.
        CHECK(std::abs(dot(c.point, c.derivative)) <= 1e-13);
    }
}

TEST_CASE("derivative matches finite differences")
{
    const RationalBezier c({{0.0, 0.0}, {0.3, 1.0}, {0.9, -0.5}, {1.0, 0.2}}, {1.0, 2.0, 0.5, 1.0});
    const double h = 1e-6;
    for (double s : {0.1, 0.5, 0.8}) {
        const Point2 fd = (1.0 / (2 * h)) * (bezier_eval(c, s + h).point - bezier_eval(c, s - h).point);
        const Vec2 d = bezier_eval(c, s).derivative;
        CHECK(d.x == doctest::Approx(fd.x).epsilon(1e-7));
        CHECK(d.y == doctest::Approx(fd.y).epsilon(1e-7));
    }
}

TEST_CASE("bezier validation")
{
    CHECK_THROWS_AS(RationalBezier({{0.0, 0.0}}), ParameterError);
    CHECK_THROWS_AS(RationalBezier({{0.0, 0.0}, {1.0, 0.0}}, {1.0, -1.0}), ParameterError);
    CHECK_THROWS_AS(bezier_eval(RationalBezier::line({0, 0}, {1, 1}), 1.5), ParameterError);
    const RationalBezier r = RationalBezier::line({0, 0}, {1, 2}).reversed();
    CHECK(r.start() == Point2{1, 2});
}

TEST_CASE("roots of a cubic")
{
    const auto roots = find_roots_1d([](double t) { return (t - 0.1) * (t - 0.45) * (t - 0.9); }, 0.0, 1.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(roots[1] == doctest::Approx(0.45).epsilon(1e-14));
    CHECK(roots[2] == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("roots at the interval ends and grazing roots")
{
    const auto end = find_roots_1d([](double t) { return t; }, 0.0, 1.0);
    REQUIRE(end.size() == 1);
    CHECK(end[0] == 0.0);
    // A double root is only seen when a sample lands on it.
    const auto graze = find_roots_1d([](double t) { return (t - 0.5) * (t - 0.5); }, 0.0, 1.0, 33);
    REQUIRE(graze.size() == 1);
    CHECK(graze[0] == doctest::Approx(0.5));
    CHECK(find_roots_1d([](double t) { return 1.0 + t; }, 0.0, 1.0).empty());
    CHECK_THROWS_AS(find_roots_1d([](double) { return NAN; }, 0.0, 1.0), EvaluationError);
}

TEST_CASE("level set forms")
{
    const LevelSet a = LevelSet::polynomial(Poly2D{{-0.5}, {1.0}});   // x - 0.5
    const LevelSet b = LevelSet::polynomial(Poly2D{{-0.5, 1.0}});     // y - 0.5
    const LevelSet both = LevelSet::max_of({a, b});
    const LevelSet any = LevelSet::min_of({a, b});
    CHECK(both({0.2, 0.7}) == doctest::Approx(0.2));
    CHECK(any({0.2, 0.7}) == doctest::Approx(-0.3));
    CHECK(both.gradient({0.2, 0.7}).y == doctest::Approx(1.0));
    CHECK(any.gradient({0.2, 0.7}).x == doctest::Approx(1.0));
    CHECK(both.parts().size() == 2);
    CHECK_THROWS_AS(both.poly(), ParameterError);
    const LevelSet g = LevelSet::generic([](Point2 p) { return p.x * p.x + p.y * p.y - 1.0; },
                                         [](Point2 p) { return Vec2{2 * p.x, 2 * p.y}; });
    CHECK(g.form() == LevelSet::Form::Generic);
    CHECK(g({1.0, 1.0}) == doctest::Approx(1.0));
}
