#include "cutquad/catalog.hpp"
#include "cutquad/error.hpp"
#include "cutquad/oracle.hpp"
#include "cutquad/quadtree.hpp"

#include <doctest.h>

#include <cmath>

using namespace cutquad;

namespace {

const Box kUnit{{0.0, 0.0}, {1.0, 1.0}};

LevelSet poly_ls(Poly2D p) { return LevelSet::polynomial(std::move(p)); }

double tri_area(const std::vector<Triangle>& tris)
{
    double a = 0.0;
    for (const auto& t : tris)
        a += std::abs(signed_area(t.a, t.b, t.c));
    return a;
}

} // namespace

TEST_CASE("uncut cell reduces to the tensor rule")
{
    const LevelSet ls = poly_ls(Poly2D{{-2.0, 1.0}}); // y - 2
    for (LeafMode mode : {LeafMode::MaskedGauss, LeafMode::Tessellate})
        for (int depth : {0, 3}) {
            const QuadratureRule r = quadtree_rule(ls, kUnit, {2, depth, mode});
            CHECK(r.size() == 4);
            CHECK(r.weight_sum() == doctest::Approx(1.0).epsilon(1e-15));
        }
    CHECK(quadtree_rule(poly_ls(Poly2D{{1.0, 1.0}}), kUnit, {}).empty());
}

TEST_CASE("tessellation of a linear boundary is exact")
{
    const TestCase& tc = find_case("case1");
    const QuadratureRule r = quadtree_rule(tc.level_set, tc.domain, {1, 0, LeafMode::Tessellate});
    CHECK(r.weight_sum() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("tessellation error shrinks with depth on a curved boundary")
{
    const TestCase& tc = find_case("case2");
    auto err = [&](int depth) {
        const QuadratureRule r = quadtree_rule(tc.level_set, tc.domain, {1, depth, LeafMode::Tessellate});
        return std::abs(r.weight_sum() - 0.5) / 0.5;
    };
    CHECK(err(3) <= 5e-3);
    CHECK(err(3) < err(1));
}

TEST_CASE("leaves partition the cell")
{
    for (const TestCase& tc : catalog()) {
        CAPTURE(tc.id);
        const auto leaves = quadtree_leaves(tc.level_set, tc.domain, {2, 4});
        double area = 0.0;
        for (const auto& l : leaves) {
            area += l.box.area();
            CHECK(l.level <= 4);
            if (l.level < 4)
                CHECK(l.state != CellState::Cut);
        }
        CHECK(area == doctest::Approx(tc.domain.area()).epsilon(1e-14));
    }
}

TEST_CASE("morton child order")
{
    const LevelSet ls = poly_ls(Poly2D{{-0.5}, {1.0}}); // x - 0.5: left half active
    const auto leaves = quadtree_leaves(ls, kUnit, {2, 1});
    REQUIRE(leaves.size() == 4);
    CHECK(leaves[0].box.lo == Point2{0.0, 0.0});
    CHECK(leaves[1].box.lo == Point2{0.5, 0.0});
    CHECK(leaves[2].box.lo == Point2{0.0, 0.5});
    CHECK(leaves[3].box.lo == Point2{0.5, 0.5});
}

TEST_CASE("tessellated rule weight sum equals the triangle areas")
{
    const TestCase& tc = find_case("disk");
    const QuadtreeConfig cfg{3, 3, LeafMode::Tessellate};
    const QuadratureRule r = quadtree_rule(tc.level_set, tc.domain, cfg);
    double expected = 0.0;
    for (const auto& leaf : quadtree_leaves(tc.level_set, tc.domain, cfg)) {
        if (leaf.state == CellState::Inside)
            expected += leaf.box.area();
        else if (leaf.state == CellState::Cut)
            expected += tri_area(tessellate_leaf(tc.level_set, leaf.box));
    }
    CHECK(r.weight_sum() == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("quadtree rule is deterministic")
{
    const TestCase& tc = find_case("case3");
    const QuadratureRule a = quadtree_rule(tc.level_set, tc.domain, {3, 4});
    const QuadratureRule b = quadtree_rule(tc.level_set, tc.domain, {3, 4});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points()[i] == b.points()[i]);
        CHECK(a.weights()[i] == b.weights()[i]);
    }
}

TEST_CASE("tessellate_leaf shapes")
{
    const auto half = tessellate_leaf(poly_ls(Poly2D{{-0.5, 1.0}}), kUnit);
    CHECK(half.size() == 2);
    CHECK(tri_area(half) == doctest::Approx(0.5));

    const auto corner = tessellate_leaf(poly_ls(Poly2D{{-0.5, 1.0}, {1.0}}), kUnit); // x + y - 0.5
    CHECK(corner.size() == 1);
    CHECK(tri_area(corner) == doctest::Approx(0.125));

    const LevelSet circle = poly_ls(Poly2D{{0.5 - 0.16, -1.0, 1.0}, {-1.0}, {1.0}});
    const auto full = tessellate_leaf(circle, Box{{0.4, 0.4}, {0.6, 0.6}});
    CHECK(full.size() == 2);
    CHECK(tri_area(full) == doctest::Approx(0.04));
}

TEST_CASE("saddle resolved by the center sign")
{
    // phi = (x - 0.5)(y - 0.5) + 0.01: corners (1,0) and (0,1) active, center inactive.
    const LevelSet split = poly_ls(Poly2D{{0.26, -0.5}, {-0.5, 1.0}});
    const auto tris = tessellate_leaf(split, kUnit);
    CHECK(tris.size() == 2);
    CHECK(tri_area(tris) == doctest::Approx(2 * 0.5 * 0.48 * 0.48));
    // Center active: the two active corners connect into one hexagon.
    const LevelSet joined = poly_ls(Poly2D{{0.24, -0.5}, {-0.5, 1.0}});
    CHECK(tri_area(tessellate_leaf(joined, kUnit)) == doctest::Approx(1.0 - 2 * 0.5 * 0.48 * 0.48));
}

TEST_CASE("quadtree configuration validation")
{
    const LevelSet ls = poly_ls(Poly2D{{-0.5, 1.0}});
    CHECK_THROWS_AS(quadtree_rule(ls, kUnit, {0, 2}), ParameterError);
    CHECK_THROWS_AS(quadtree_rule(ls, kUnit, {2, -1}), ParameterError);
    CHECK_THROWS_AS(quadtree_rule(ls, kUnit, {2, kMaxQuadtreeDepth + 1}), ParameterError);
}

TEST_CASE("masked gauss converges toward the oracle")
{
    const TestCase& tc = find_case("case2");
    double prev = 1.0;
    for (int depth : {2, 4, 6}) {
        const double v = quadtree_rule(tc.level_set, tc.domain, {2, depth}).weight_sum();
        const double e = std::abs(v - 0.5);
        CHECK(e < prev);
        prev = e;
    }
}
