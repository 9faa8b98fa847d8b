#include "cutquad/catalog.hpp"

#include "cutquad/error.hpp"
#include "cutquad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace cutquad {

double TestCase::reference(int q) const
{
    const auto it = references.find(q);
    if (it == references.end())
        throw UnsupportedCaseError("no reference for q = " + std::to_string(q) + " in case " + id);
    return it->second;
}

namespace {

const Box kUnitBox{{0.0, 0.0}, {1.0, 1.0}};

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Power-basis coefficients on s in [0,1] -> Bernstein coefficients.
std::vector<double> to_bernstein(const std::vector<double>& a)
{
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<double> b(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k)
            b[i] += binomial(i, k) / binomial(n, k) * a[k];
    return b;
}

// Graph y = top(x), x in [x0, x1], as a polynomial Bezier traversed from x1 to x0.
RationalBezier graph_curve_reversed(const Poly1D& top, double x0, double x1)
{
    const int p = std::max(top.degree(), 1);
    // y(s) = top(x0 + s (x1 - x0)).
    const Poly1D ys = top.compose(Poly1D{x0, x1 - x0});
    std::vector<double> a(p + 1);
    for (int k = 0; k <= p; ++k)
        a[k] = ys.coeff(k);
    const std::vector<double> by = to_bernstein(a);
    std::vector<Point2> cps(p + 1);
    for (int i = 0; i <= p; ++i)
        cps[i] = {x0 + (x1 - x0) * static_cast<double>(i) / p, by[i]};
    return RationalBezier(std::move(cps)).reversed();
}

// Active region below a graph over the unit square: phi = y - top(x).
Poly2D below_graph(const Poly1D& top)
{
    return Poly2D::y_power(1) - Poly2D::from_1d(top);
}

void fill_references(TestCase& tc)
{
    for (int q = 0; q <= kMaxReferenceDegree; ++q)
        tc.references[q] = oracle_integral(tc.region, tc.bbox, q);
}

TestCase make_case1()
{
    const Poly1D top{0.2, 0.6};
    TestCase tc;
    tc.id = "case1";
    tc.degree = 1;
    tc.domain = kUnitBox;
    tc.level_set = LevelSet::polynomial(below_graph(top));
    tc.chain = BoundaryChain({
        RationalBezier::line({0.0, 0.0}, {1.0, 0.0}),
        RationalBezier::line({1.0, 0.0}, {1.0, 0.8}),
        RationalBezier::line({1.0, 0.8}, {0.0, 0.2}),
        RationalBezier::line({0.0, 0.2}, {0.0, 0.0}),
    });
    tc.bbox = {{0.0, 0.0}, {1.0, 0.8}};
    tc.region = GraphRegion{0.0, {{0.0, 1.0, top}}};
    fill_references(tc);
    return tc;
}

TestCase make_case2()
{
    const Poly1D top{0.15, 0.5, 0.3};
    TestCase tc;
    tc.id = "case2";
    tc.degree = 2;
    tc.domain = kUnitBox;
    tc.level_set = LevelSet::polynomial(below_graph(top));
    const RationalBezier curve = graph_curve_reversed(top, 0.0, 1.0);
    tc.chain = BoundaryChain({
        RationalBezier::line({0.0, 0.0}, {1.0, 0.0}),
        RationalBezier::line({1.0, 0.0}, curve.start()),
        curve,
        RationalBezier::line(curve.end(), {0.0, 0.0}),
    });
    tc.bbox = {{0.0, 0.0}, {1.0, 0.95}};
    tc.region = GraphRegion{0.0, {{0.0, 1.0, top}}};
    fill_references(tc);
    return tc;
}

// y = 0.6 - 0.5x - 0.5x^2 - 0.5x^3 + 1.5x^4 + (595/256)x^5: enters at (0, 0.6),
// dips, inflects, leaves through the top edge at (0.8, 1) and stays above 1 beyond.
TestCase make_case3()
{
    const Poly1D top{0.6, -0.5, -0.5, -0.5, 1.5, 595.0 / 256.0};
    TestCase tc;
    tc.id = "case3";
    tc.degree = 5;
    tc.domain = kUnitBox;
    tc.level_set = LevelSet::polynomial(below_graph(top));
    const RationalBezier curve = graph_curve_reversed(top, 0.0, 0.8);
    tc.chain = BoundaryChain({
        RationalBezier::line({0.0, 0.0}, {1.0, 0.0}),
        RationalBezier::line({1.0, 0.0}, {1.0, 1.0}),
        RationalBezier::line({1.0, 1.0}, curve.start()),
        curve,
        RationalBezier::line(curve.end(), {0.0, 0.0}),
    });
    tc.bbox = kUnitBox;
    tc.region = GraphRegion{0.0, {{0.0, 0.8, top}, {0.8, 1.0, Poly1D{1.0}}}};
    fill_references(tc);
    return tc;
}

TestCase make_disk()
{
    const Point2 c{0.5, 0.5};
    const double r = 0.4;
    TestCase tc;
    tc.id = "disk";
    tc.degree = 2;
    tc.domain = kUnitBox;
    // (x - cx)^2 + (y - cy)^2 - r^2
    tc.level_set = LevelSet::polynomial(Poly2D{{c.x * c.x + c.y * c.y - r * r, -2.0 * c.y, 1.0}, {-2.0 * c.x}, {1.0}});
    const double w = 1.0 / std::numbers::sqrt2;
    const Point2 e[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::vector<RationalBezier> arcs;
    for (int k = 0; k < 4; ++k) {
        const Point2 a = e[k];
        const Point2 b = e[(k + 1) % 4];
        arcs.emplace_back(std::vector<Point2>{c + r * a, c + r * (a + b), c + r * b}, std::vector<double>{1.0, w, 1.0});
    }
    tc.chain = BoundaryChain(std::move(arcs));
    tc.bbox = {{c.x - r, c.y - r}, {c.x + r, c.y + r}};
    tc.region = DiskRegion{c, r};
    fill_references(tc);
    return tc;
}

} // namespace

TestCase parabolas_case(double shift)
{
    const double s = shift;
    // lower(x) = 1.6 (x - s)^2 + 0.15, upper(x) = 0.85 - 1.6 (x - s - 0.1)^2
    const Poly1D lower{1.6 * s * s + 0.15, -3.2 * s, 1.6};
    const double t = s + 0.1;
    const Poly1D upper{0.85 - 1.6 * t * t, 3.2 * t, -1.6};

    const Poly2D phi_lower = Poly2D::from_1d(lower) - Poly2D::y_power(1);
    const Poly2D phi_upper = Poly2D::y_power(1) - Poly2D::from_1d(upper);

    // upper - lower = 0: -3.2 x^2 + b x + c
    const Poly1D gap = upper - lower;
    const double qa = gap.coeff(2), qb = gap.coeff(1), qc = gap.coeff(0);
    const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    double xa = (-qb + disc) / (2.0 * qa);
    double xb = (-qb - disc) / (2.0 * qa);
    if (xa > xb)
        std::swap(xa, xb);
    const double x0 = std::max(0.0, xa);
    const double x1 = std::min(1.0, xb);

    TestCase tc;
    tc.id = "parabolas";
    tc.degree = 2;
    tc.domain = kUnitBox;
    tc.level_set = LevelSet::max_of({LevelSet::polynomial(phi_lower), LevelSet::polynomial(phi_upper)});
    tc.region = LensRegion{x0, x1, lower, upper};

    auto clamp_to = [&](double x) { return std::clamp(x, x0, x1); };
    const double ymin = std::min({lower(clamp_to(s)), lower(x0), lower(x1)});
    const double ymax = std::max({upper(clamp_to(t)), upper(x0), upper(x1)});
    tc.bbox = {{x0, ymin}, {x1, ymax}};
    fill_references(tc);
    return tc;
}

const std::vector<TestCase>& catalog()
{
    static const std::vector<TestCase> cases = [] {
        std::vector<TestCase> v;
        v.push_back(make_case1());
        v.push_back(make_case2());
        v.push_back(make_case3());
        v.push_back(make_disk());
        v.push_back(parabolas_case(kParabolaShiftMin));
        return v;
    }();
    return cases;
}

std::vector<std::string> case_ids()
{
    std::vector<std::string> ids;
    for (const auto& tc : catalog())
        ids.push_back(tc.id);
    return ids;
}

const TestCase& find_case(std::string_view id)
{
    for (const auto& tc : catalog())
        if (tc.id == id)
            return tc;
    std::string msg = "unknown case '" + std::string(id) + "'; valid ids:";
    for (const auto& name : case_ids())
        msg += " " + name;
    throw UnsupportedCaseError(msg);
}

ScalarField scaled_monomial(const TestCase& tc, int q)
{
    const Box b = tc.bbox;
    if (!b.valid())
        throw ParameterError("scaled_monomial: bounding box of " + tc.id + " is degenerate");
    if (q == 0)
        return [](Point2) { return 1.0; };
    return [b, q](Point2 p) {
        const double u = (p.x - b.lo.x) / b.width();
        const double v = (p.y - b.lo.y) / b.height();
        return std::pow(u, q) * std::pow(v, q);
    };
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_poly2d(std::ostream& os, const Poly2D& p)
{
    os << p.rows() << ' ' << p.cols();
    for (double c : p.row_major())
        os << ' ' << num(c);
}

void write_poly1d(std::ostream& os, const Poly1D& p)
{
    os << p.coeffs().size();
    for (double c : p.coeffs())
        os << ' ' << num(c);
}

void write_level_set(std::ostream& os, const LevelSet& ls, const std::string& key)
{
    switch (ls.form()) {
    case LevelSet::Form::Polynomial:
        os << key << " polynomial ";
        write_poly2d(os, ls.poly());
        os << '\n';
        break;
    case LevelSet::Form::ComposedMax:
    case LevelSet::Form::ComposedMin:
        os << key << (ls.form() == LevelSet::Form::ComposedMax ? " max " : " min ") << ls.parts().size() << '\n';
        for (const auto& part : ls.parts())
            write_level_set(os, part, "component");
        break;
    case LevelSet::Form::Generic: throw UnsupportedCaseError("write_catalog: generic level sets cannot be exported");
    }
}

} // namespace

void write_catalog(std::ostream& os, const std::vector<TestCase>& cases)
{
    os << "cutquad-catalog 1\n";
    for (const auto& tc : cases) {
        os << "case " << tc.id << '\n';
        os << "degree " << tc.degree << '\n';
        os << "domain " << num(tc.domain.lo.x) << ' ' << num(tc.domain.lo.y) << ' ' << num(tc.domain.hi.x) << ' '
           << num(tc.domain.hi.y) << '\n';
        os << "bbox " << num(tc.bbox.lo.x) << ' ' << num(tc.bbox.lo.y) << ' ' << num(tc.bbox.hi.x) << ' '
           << num(tc.bbox.hi.y) << '\n';
        write_level_set(os, tc.level_set, "levelset");
        if (tc.chain) {
            os << "chain " << tc.chain->segments().size() << '\n';
            for (const auto& seg : tc.chain->segments()) {
                os << "segment " << seg.control().size();
                for (std::size_t i = 0; i < seg.control().size(); ++i)
                    os << ' ' << num(seg.control()[i].x) << ' ' << num(seg.control()[i].y) << ' '
                       << num(seg.weights()[i]);
                os << '\n';
            }
        } else {
            os << "chain 0\n";
        }
        std::visit(
            [&](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, GraphRegion>) {
                    os << "region graph " << num(r.floor) << ' ' << r.pieces.size() << '\n';
                    for (const auto& piece : r.pieces) {
                        os << "piece " << num(piece.x0) << ' ' << num(piece.x1) << ' ';
                        write_poly1d(os, piece.top);
                        os << '\n';
                    }
                } else if constexpr (std::is_same_v<T, DiskRegion>) {
                    os << "region disk " << num(r.center.x) << ' ' << num(r.center.y) << ' ' << num(r.radius) << '\n';
                } else {
                    os << "region lens " << num(r.x0) << ' ' << num(r.x1) << ' ';
                    write_poly1d(os, r.lower);
                    os << ' ';
                    write_poly1d(os, r.upper);
                    os << '\n';
                }
            },
            tc.region);
        for (const auto& [q, v] : tc.references)
            os << "reference " << q << ' ' << num(v) << '\n';
        os << "end\n";
    }
}

namespace {

class Reader
{
public:
    explicit Reader(std::istream& is) : is_(is) {}

    std::string word()
    {
        std::string w;
        if (!(is_ >> w))
            throw IoError("read_catalog: unexpected end of input");
        return w;
    }
    void expect(const std::string& w)
    {
        const std::string got = word();
        if (got != w)
            throw IoError("read_catalog: expected '" + w + "', got '" + got + "'");
    }
    double real()
    {
        const std::string w = word();
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(w, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != w.size())
            throw IoError("read_catalog: bad number '" + w + "'");
        return v;
    }
    int integer()
    {
        const double v = real();
        if (v != std::floor(v))
            throw IoError("read_catalog: expected an integer");
        return static_cast<int>(v);
    }
    Poly2D poly2d()
    {
        const int rows = integer();
        const int cols = integer();
        if (rows < 1 || cols < 1)
            throw IoError("read_catalog: bad polynomial extents");
        Poly2D p(rows - 1, cols - 1);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                p.at(i, j) = real();
        return p;
    }
    Poly1D poly1d()
    {
        const int n = integer();
        std::vector<double> c(n);
        for (double& v : c)
            v = real();
        return Poly1D(std::move(c));
    }
    LevelSet level_set()
    {
        const std::string kind = word();
        if (kind == "polynomial")
            return LevelSet::polynomial(poly2d());
        if (kind == "max" || kind == "min") {
            const int n = integer();
            std::vector<LevelSet> parts;
            for (int k = 0; k < n; ++k) {
                expect("component");
                parts.push_back(level_set());
            }
            return kind == "max" ? LevelSet::max_of(std::move(parts)) : LevelSet::min_of(std::move(parts));
        }
        throw IoError("read_catalog: unknown level set form '" + kind + "'");
    }

private:
    std::istream& is_;
};

} // namespace

std::vector<TestCase> read_catalog(std::istream& is)
{
    Reader r(is);
    r.expect("cutquad-catalog");
    if (r.integer() != 1)
        throw IoError("read_catalog: unsupported format version");
    std::vector<TestCase> cases;
    std::string w;
    while (is >> w) {
        if (w != "case")
            throw IoError("read_catalog: expected 'case', got '" + w + "'");
        TestCase tc;
        tc.id = r.word();
        r.expect("degree");
        tc.degree = r.integer();
        r.expect("domain");
        tc.domain.lo = {r.real(), r.real()};
        tc.domain.hi = {r.real(), r.real()};
        r.expect("bbox");
        tc.bbox.lo = {r.real(), r.real()};
        tc.bbox.hi = {r.real(), r.real()};
        r.expect("levelset");
        tc.level_set = r.level_set();
        r.expect("chain");
        const int nseg = r.integer();
        if (nseg > 0) {
            std::vector<RationalBezier> segs;
            for (int k = 0; k < nseg; ++k) {
                r.expect("segment");
                const int ncp = r.integer();
                std::vector<Point2> cps(ncp);
                std::vector<double> ws(ncp);
                for (int i = 0; i < ncp; ++i) {
                    cps[i] = {r.real(), r.real()};
                    ws[i] = r.real();
                }
                segs.emplace_back(std::move(cps), std::move(ws));
            }
            tc.chain = BoundaryChain(std::move(segs));
        }
        r.expect("region");
        const std::string kind = r.word();
        if (kind == "graph") {
            GraphRegion g;
            g.floor = r.real();
            const int n = r.integer();
            for (int k = 0; k < n; ++k) {
                r.expect("piece");
                const double x0 = r.real();
                const double x1 = r.real();
                g.pieces.push_back({x0, x1, r.poly1d()});
            }
            tc.region = std::move(g);
        } else if (kind == "disk") {
            DiskRegion d;
            d.center = {r.real(), r.real()};
            d.radius = r.real();
            tc.region = d;
        } else if (kind == "lens") {
            LensRegion l;
            l.x0 = r.real();
            l.x1 = r.real();
            l.lower = r.poly1d();
            l.upper = r.poly1d();
            tc.region = std::move(l);
        } else {
            throw IoError("read_catalog: unknown region kind '" + kind + "'");
        }
        for (std::string key = r.word(); key != "end"; key = r.word()) {
            if (key != "reference")
                throw IoError("read_catalog: expected 'reference' or 'end', got '" + key + "'");
            const int q = r.integer();
            tc.references[q] = r.real();
        }
        cases.push_back(std::move(tc));
    }
    return cases;
}

} // namespace cutquad
