#pragma once

#include <functional>
#include <vector>

namespace cutquad {

inline constexpr int kDefaultRootSamples = 32;

/// All roots of f on [a, b] found by sign-change bracketing on `samples`
/// equispaced points and safeguarded secant/bisection refinement.
///
/// Roots closer together than the sample spacing can be missed. Even
/// multiplicity roots are reported only when a sample lands within 1e-13
/// (relative to the sample magnitude) of zero at a local minimum of |f|.
/// Throws EvaluationError on non-finite samples.
std::vector<double> find_roots_1d(const std::function<double(double)>& f, double a, double b,
                                  int samples = kDefaultRootSamples);

} // namespace cutquad
