#pragma once

// Exact rational linear-programming feasibility. A single phase-1 simplex
// with Bland's rule backs every strict-sign and convex-hull decision; no
// floating point, no epsilons.

#include <optional>
#include <vector>

#include "projtv/linalg.hpp"

namespace projtv {

/// A nonnegative solution of A x = b, or nullopt when none exists.
std::optional<RatVec> lp_feasible_point(const RatMat& a, const RatVec& b);

/// A witness u with row_i . u >= 1 for every row, or nullopt. Strict systems
/// row_i . u > 0 reduce to this form by scaling. Rows of zero length are
/// rejected; with no rows any nonzero u works and e_1 is returned.
std::optional<RatVec> strict_ineq_witness(const RatMat& rows, size_t dim);

/// Exact convex-hull membership of an affine point among affine points.
bool hull_contains(const std::vector<RatVec>& hull_points, const RatVec& q);

/// A common point of conv(a) and conv(b), or nullopt when the hulls are
/// disjoint.
std::optional<RatVec> hulls_common_point(const std::vector<RatVec>& a,
                                         const std::vector<RatVec>& b);

}  // namespace projtv
