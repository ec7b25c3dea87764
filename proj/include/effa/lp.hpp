#pragma once

#include "effa/matrix.hpp"

#include <optional>

namespace effa {

/// Exact feasibility for { x >= 0 : A x = b } by phase-one simplex with
/// Bland's rule. Returns a basic feasible solution, or nullopt.
std::optional<RVec> nonneg_solution(const Matrix& a, const RVec& b);

/// Convex coefficients c (c >= 0, sum c = 1) with sum_i c_i * points[i] = target.
std::optional<RVec> convex_coefficients(const std::vector<RVec>& points, const RVec& target);

} // namespace effa
