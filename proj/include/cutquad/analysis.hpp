#pragma once

#include "cutquad/poly.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace cutquad {

enum class MappingClass
{
    General,
    OneCurvedGeneric,
    OneCurvedAxisAligned,
    Degenerate,
    Affine,
};

inline constexpr MappingClass kAllMappingClasses[] = {
    MappingClass::General,    MappingClass::OneCurvedGeneric, MappingClass::OneCurvedAxisAligned,
    MappingClass::Degenerate, MappingClass::Affine,
};

std::string_view to_string(MappingClass c);

/// Bi-degree of f o T * det(J) for f of bi-degree (q, q) and a mapping of class `cls`
/// built from degree-p boundary curves.
std::pair<int, int> predict_bidegree(MappingClass cls, int p, int q);

/// Gauss points per direction for exact integration: conservative p(q+1), or the
/// single-curved-edge count ceil((qp + q + p + 1) / 2).
int required_points(int p, int q, bool conservative);

/// Random integer-coefficient mapping (tx(u, v), ty(u, v)) of the given class.
///   General: tx, ty of bi-degree (p, p).
///   OneCurvedGeneric: tx, ty of bi-degree (1, p).
///   OneCurvedAxisAligned: (1 - u) A(v) + u B(v) with A(v) = (0, v), B(v) = (v, b(v)).
///   Degenerate: (1 - u) A0 + u B(v) with A0 = (0, a0), B(v) = (1, b(v)).
///   Affine: diagonal, tx = a u + b, ty = c v + d.
std::pair<Poly2D, Poly2D> random_mapping(MappingClass cls, int p, std::mt19937_64& rng);

/// Random polynomial of bi-degree (q, q) with nonzero integer coefficients.
Poly2D random_integrand(int q, std::mt19937_64& rng);

/// Measured bi-degree of f(tx, ty) * det(J).
std::pair<int, int> measured_bidegree(const Poly2D& f, const Poly2D& tx, const Poly2D& ty);

inline constexpr double kMachineFloor = 2.22e-15;

struct ConvergenceFit
{
    std::vector<double> log_h;
    std::vector<double> log_error;
    double slope = 0.0;
    double intercept = 0.0;
    /// Root-mean-square deviation of the fitted line.
    double residual = 0.0;
};

/// Least-squares slope of log(error) against log(1 / n_ele), after dropping errors at or
/// below the machine floor. Throws InsufficientDataError with fewer than 2 usable samples.
ConvergenceFit fit_rate(const std::vector<std::pair<int, double>>& samples);

} // namespace cutquad
