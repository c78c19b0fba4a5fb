#pragma once

// Open cells of central hyperplane arrangements, as sign vectors with exact
// interior witnesses. These are the combinatorial fingerprints behind every
// minimum-count certificate.

#include <cstdint>
#include <vector>

#include "projtv/linalg.hpp"

namespace projtv {

struct SignVector {
    std::vector<int> signs;            // entries in {-1, 0, +1}; 0 exactly on zero_support
    std::vector<size_t> zero_support;  // indices whose defining vector is identically zero

    bool operator==(const SignVector& o) const {
        return signs == o.signs && zero_support == o.zero_support;
    }
    bool operator<(const SignVector& o) const { return signs < o.signs; }
};

struct OpenCell {
    SignVector sv;
    RatVec witness;  // integer-normalized u with sign(a_i . u) == signs[i] for all i
};

/// All sign vectors sigma with no zeros outside the zero support such that
/// some u in R^k has sigma_i (a_i . u) > 0 for every nonzero a_i. Identically
/// zero vectors are carried in zero_support and excluded from the
/// arrangement. Output is sorted by sign vector; witnesses realize the open
/// cell. k >= 1 is required. Decided by incremental insertion with exact LP
/// feasibility (strictness via the >= 1 scaling); k <= 2 uses an exact
/// angular sweep that returns the same set.
std::vector<OpenCell> enumerate_open_cells(size_t k, const std::vector<RatVec>& vectors);

/// The LP-only path, exposed for cross-checking the k <= 2 fast path.
std::vector<OpenCell> enumerate_open_cells_lp(size_t k, const std::vector<RatVec>& vectors);

}  // namespace projtv
