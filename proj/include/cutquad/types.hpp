#pragma once

#include <array>
#include <cmath>
#include <string>

namespace cutquad {

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

using Vec2 = Point2;

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Axis-aligned rectangle [lo.x, hi.x] x [lo.y, hi.y].
struct Box
{
    Point2 lo;
    Point2 hi;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    Point2 center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
    bool valid() const { return width() > 0.0 && height() > 0.0 && std::isfinite(area()); }

    /// Point at local coordinates (u, v) in [0,1]^2.
    Point2 at(double u, double v) const { return {lo.x + u * width(), lo.y + v * height()}; }

    friend bool operator==(const Box&, const Box&) = default;
};

std::string to_string(Point2 p);
std::string to_string(const Box& b);

} // namespace cutquad
