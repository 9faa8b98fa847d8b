#pragma once

#include "cutquad/poly.hpp"
#include "cutquad/types.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace cutquad {

/// Implicit boundary descriptor. The active region is {x : phi(x) <= 0}.
///
/// Copies share the same immutable representation; evaluation is re-entrant.
class LevelSet
{
public:
    enum class Form
    {
        Polynomial,
        ComposedMin,
        ComposedMax,
        Generic,
    };

    using ValueFn = std::function<double(Point2)>;
    using GradientFn = std::function<Vec2(Point2)>;

    static LevelSet polynomial(Poly2D phi);
    /// Intersection of active regions (max of the components).
    static LevelSet max_of(std::vector<LevelSet> parts);
    /// Union of active regions (min of the components).
    static LevelSet min_of(std::vector<LevelSet> parts);
    static LevelSet generic(ValueFn value, GradientFn gradient);

    Form form() const;
    double operator()(Point2 p) const { return value(p); }
    double value(Point2 p) const;
    /// Gradient of the active branch for composed forms.
    Vec2 gradient(Point2 p) const;

    /// Valid only for Form::Polynomial.
    const Poly2D& poly() const;
    /// Valid only for composed forms.
    const std::vector<LevelSet>& parts() const;

private:
    struct Impl;
    explicit LevelSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace cutquad
