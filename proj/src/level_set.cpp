#include "cutquad/level_set.hpp"

#include "cutquad/error.hpp"

#include <algorithm>

namespace cutquad {

struct LevelSet::Impl
{
    Form form = Form::Generic;
    Poly2D phi;
    Poly2D phi_x;
    Poly2D phi_y;
    std::vector<LevelSet> parts;
    ValueFn value;
    GradientFn gradient;
};

LevelSet LevelSet::polynomial(Poly2D phi)
{
    auto impl = std::make_shared<Impl>();
    impl->form = Form::Polynomial;
    impl->phi_x = phi.dx();
    impl->phi_y = phi.dy();
    impl->phi = std::move(phi);
    return LevelSet(std::move(impl));
}

LevelSet LevelSet::max_of(std::vector<LevelSet> parts)
{
    if (parts.empty())
        throw ParameterError("LevelSet::max_of: no components");
    auto impl = std::make_shared<Impl>();
    impl->form = Form::ComposedMax;
    impl->parts = std::move(parts);
    return LevelSet(std::move(impl));
}

LevelSet LevelSet::min_of(std::vector<LevelSet> parts)
{
    if (parts.empty())
        throw ParameterError("LevelSet::min_of: no components");
    auto impl = std::make_shared<Impl>();
    impl->form = Form::ComposedMin;
    impl->parts = std::move(parts);
    return LevelSet(std::move(impl));
}

LevelSet LevelSet::generic(ValueFn value, GradientFn gradient)
{
    if (!value || !gradient)
        throw ParameterError("LevelSet::generic: value and gradient are required");
    auto impl = std::make_shared<Impl>();
    impl->form = Form::Generic;
    impl->value = std::move(value);
    impl->gradient = std::move(gradient);
    return LevelSet(std::move(impl));
}

LevelSet::Form LevelSet::form() const
{
    return impl_->form;
}

namespace {

// Index of the active branch: first maximal (or minimal) component.
std::size_t active_branch(const std::vector<LevelSet>& parts, Point2 p, bool take_max)
{
    std::size_t best = 0;
    double best_v = parts[0].value(p);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const double v = parts[i].value(p);
        if (take_max ? v > best_v : v < best_v) {
            best = i;
            best_v = v;
        }
    }
    return best;
}

} // namespace

double LevelSet::value(Point2 p) const
{
    switch (impl_->form) {
    case Form::Polynomial: return impl_->phi(p);
    case Form::ComposedMax:
    case Form::ComposedMin: {
        const bool take_max = impl_->form == Form::ComposedMax;
        double v = impl_->parts[0].value(p);
        for (std::size_t i = 1; i < impl_->parts.size(); ++i) {
            const double w = impl_->parts[i].value(p);
            v = take_max ? std::max(v, w) : std::min(v, w);
        }
        return v;
    }
    case Form::Generic: return impl_->value(p);
    }
    return 0.0;
}

Vec2 LevelSet::gradient(Point2 p) const
{
    switch (impl_->form) {
    case Form::Polynomial: return {impl_->phi_x(p), impl_->phi_y(p)};
    case Form::ComposedMax:
    case Form::ComposedMin:
        return impl_->parts[active_branch(impl_->parts, p, impl_->form == Form::ComposedMax)].gradient(p);
    case Form::Generic: return impl_->gradient(p);
    }
    return {};
}

const Poly2D& LevelSet::poly() const
{
    if (impl_->form != Form::Polynomial)
        throw ParameterError("LevelSet::poly: not a polynomial level set");
    return impl_->phi;
}

const std::vector<LevelSet>& LevelSet::parts() const
{
    if (impl_->form != Form::ComposedMax && impl_->form != Form::ComposedMin)
        throw ParameterError("LevelSet::parts: not a composed level set");
    return impl_->parts;
}

} // namespace cutquad
