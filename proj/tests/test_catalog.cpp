#include "cutquad/catalog.hpp"
#include "cutquad/error.hpp"
#include "cutquad/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace cutquad;

namespace {

bool in_region(const RegionShape& region, Point2 p)
{
    if (const auto* g = std::get_if<GraphRegion>(&region)) {
        for (const auto& piece : g->pieces)
            if (p.x >= piece.x0 && p.x <= piece.x1)
                return p.y >= g->floor && p.y <= piece.top(p.x);
        return false;
    }
    if (const auto* d = std::get_if<DiskRegion>(&region))
        return norm(p - d->center) <= d->radius;
    const auto& l = std::get<LensRegion>(region);
    return p.x >= l.x0 && p.x <= l.x1 && p.y >= l.lower(p.x) && p.y <= l.upper(p.x);
}

bool on_box_boundary(const Box& b, Point2 p)
{
    const double tol = 1e-12;
    const bool inside = p.x >= b.lo.x - tol && p.x <= b.hi.x + tol && p.y >= b.lo.y - tol && p.y <= b.hi.y + tol;
    const bool edge = std::abs(p.x - b.lo.x) <= tol || std::abs(p.x - b.hi.x) <= tol ||
                      std::abs(p.y - b.lo.y) <= tol || std::abs(p.y - b.hi.y) <= tol;
    return inside && edge;
}

} // namespace

TEST_CASE("catalog reference values")
{
    CHECK(find_case("case1").reference_area() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(find_case("case2").reference_area() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(find_case("disk").reference_area() == doctest::Approx(0.5026548245743669).epsilon(1e-15));
    CHECK(oracle_integral(find_case("case1"), 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(find_case("case1").degree == 1);
    CHECK(find_case("case2").degree == 2);
    CHECK(find_case("case3").degree == 5);
    CHECK(case_ids().size() == 5);
    CHECK_THROWS_AS(find_case("case9999"), UnsupportedCaseError);
}

TEST_CASE("scaled monomial")
{
    const TestCase& tc = find_case("case2");
    const auto f0 = scaled_monomial(tc, 0);
    CHECK(f0({0.3, 0.4}) == 1.0);
    const auto f3 = scaled_monomial(tc, 3);
    CHECK(f3(tc.bbox.lo) == 0.0);
    CHECK(f3(tc.bbox.hi) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("implicit and parametric descriptions agree")
{
    for (const TestCase& tc : catalog()) {
        CAPTURE(tc.id);
        // Level-set sign against the region shape and the chain winding number,
        // skipping samples close to the interface.
        int mismatches = 0;
        const int m = 41;
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) {
                const Point2 p = tc.domain.at((i + 0.5) / m, (j + 0.5) / m);
                const double phi = tc.level_set(p);
                if (std::abs(phi) < 1e-3)
                    continue;
                const bool active = phi <= 0.0;
                if (active != in_region(tc.region, p))
                    ++mismatches;
                if (tc.chain && active != (tc.chain->winding_number(p) == 1))
                    ++mismatches;
            }
        CHECK(mismatches == 0);

        if (tc.chain) {
            // Every chain point is on the interface or on the domain boundary,
            // and never strictly outside.
            for (const auto& seg : tc.chain->segments())
                for (int k = 0; k <= 32; ++k) {
                    const Point2 p = bezier_eval(seg, k / 32.0).point;
                    const double phi = tc.level_set(p);
                    CHECK(phi <= 1e-12);
                    CHECK((std::abs(phi) <= 1e-12 || on_box_boundary(tc.domain, p)));
                }
            CHECK(tc.chain->sampled_signed_area(512) == doctest::Approx(tc.reference_area()).epsilon(1e-5));
        }
    }
}

TEST_CASE("oracle references agree with the extrapolated tessellation")
{
    for (const TestCase& tc : catalog()) {
        CAPTURE(tc.id);
        CHECK(cross_check_references(tc, {0, 1, 4, 8}) <= 1e-8);
    }
}

TEST_CASE("catalog text round trip")
{
    std::stringstream ss;
    write_catalog(ss, catalog());
    const auto back = read_catalog(ss);
    REQUIRE(back.size() == catalog().size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        const TestCase& a = catalog()[k];
        const TestCase& b = back[k];
        CHECK(a.id == b.id);
        CHECK(a.degree == b.degree);
        CHECK(a.bbox == b.bbox);
        CHECK(a.references == b.references);
        CHECK(a.chain.has_value() == b.chain.has_value());
        for (const Point2 p : {Point2{0.13, 0.37}, Point2{0.71, 0.52}, Point2{0.5, 0.95}})
            CHECK(a.level_set(p) == b.level_set(p));
    }
}

TEST_CASE("malformed catalog text is rejected")
{
    std::stringstream bad("cutquad-catalog 1\ncase case1\ndegree x\n");
    CHECK_THROWS_AS(read_catalog(bad), IoError);
    std::stringstream wrong_header("something else\n");
    CHECK_THROWS_AS(read_catalog(wrong_header), IoError);
}

TEST_CASE("parabolas case shifts")
{
    const TestCase a = parabolas_case(kParabolaShiftMin);
    const TestCase b = parabolas_case(kParabolaShiftMax);
    CHECK(a.reference_area() > 0.0);
    CHECK(b.reference_area() > 0.0);
    CHECK(a.bbox.lo.x < b.bbox.lo.x);
}
