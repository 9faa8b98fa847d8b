#pragma once

#include "cutquad/geometry.hpp"
#include "cutquad/level_set.hpp"
#include "cutquad/poly.hpp"
#include "cutquad/quad_core.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cutquad {

/// {x0 <= x <= x1, floor <= y <= top(x)} pieces.
struct GraphRegion
{
    struct Piece
    {
        double x0;
        double x1;
        Poly1D top;
    };
    double floor = 0.0;
    std::vector<Piece> pieces;
};

struct DiskRegion
{
    Point2 center;
    double radius = 0.0;
};

/// {x0 <= x <= x1, lower(x) <= y <= upper(x)}.
struct LensRegion
{
    double x0 = 0.0;
    double x1 = 0.0;
    Poly1D lower;
    Poly1D upper;
};

using RegionShape = std::variant<GraphRegion, DiskRegion, LensRegion>;

inline constexpr int kMaxReferenceDegree = 8;

struct TestCase
{
    std::string id;
    LevelSet level_set = LevelSet::polynomial(Poly2D::constant(1.0));
    std::optional<BoundaryChain> chain;
    Box domain;
    /// Boundary curve degree p.
    int degree = 1;
    /// Bounding box of the active region.
    Box bbox;
    RegionShape region;
    /// Integral of the scaled monomial of degree q, q = 0..kMaxReferenceDegree; q = 0 is the area.
    std::map<int, double> references;

    double reference_area() const { return references.at(0); }
    double reference(int q) const;
};

/// Built-in cases: case1, case2, case3, disk, parabolas (shift 0.10). Built once.
const std::vector<TestCase>& catalog();

/// Throws UnsupportedCaseError listing the valid ids.
const TestCase& find_case(std::string_view id);
std::vector<std::string> case_ids();

/// Two intersected parabolas shifted by s along x.
TestCase parabolas_case(double shift);

inline constexpr double kParabolaShiftMin = 0.10;
inline constexpr double kParabolaShiftMax = 0.47;

/// ((x - xmin)/(xmax - xmin))^q ((y - ymin)/(ymax - ymin))^q on the case bounding box.
ScalarField scaled_monomial(const TestCase& tc, int q);

/// Structured text export; see docs/catalog_format.md.
void write_catalog(std::ostream& os, const std::vector<TestCase>& cases);
std::vector<TestCase> read_catalog(std::istream& is);

} // namespace cutquad
