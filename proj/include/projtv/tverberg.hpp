#pragma once

// Partition search and verification: the projective Tverberg statement (W
// plus a partition), its transversal form (one W against several point
// sets), the variant with both V and W free, classical Radon oracles, and
// the rainbow (colorful) constraint. Search is heuristic; certificates come
// from the exact piece engine only.

#include <optional>
#include <string>
#include <vector>

#include "projtv/centerpoint.hpp"
#include "projtv/pieces.hpp"
#include "projtv/topology.hpp"

namespace projtv {

struct RadonResult {
    PartitionWitness partition;  // two parts
    RatVec common_point;         // exact point of conv(X1) cap conv(X2)
    RatVec dependence;           // the affine dependence that was split
};

/// Radon partition of n >= d+2 affine points via the kernel of the lifted
/// (d+1) x n matrix, split by coefficient signs. With several dependencies
/// one canonical kernel vector is used.
RadonResult radon_partition(const std::vector<RatVec>& affine_points, size_t d);

struct TverbergOutcome {
    LinSubspace W;
    PartitionWitness partition;
    Certificate cert;
    bool found = false;
    size_t candidates_tried = 0;
    std::string notes;
};

/// Searches for W of projective dimension d-v-1 and an r-part partition
/// passing verify_tverberg_witness. Candidates: the Radon oracle in the
/// affine r=2 regime, spanned subspaces, Gram-map weights with disjoint
/// supports, then random subspaces; partitions by exhaustive enumeration up
/// to a cap, greedy + swap improvement beyond it.
TverbergOutcome search_projective_tverberg(const LinSubspace& v, const PointConfig& x, size_t r,
                                           const SearchConfig& cfg, bool rainbow = false);

struct TransversalInstance {
    size_t d = 0;
    long v = 0;
    long w = 0;      // target projective dimension of W
    uint64_t p = 2;  // the prime behind the part counts
    LinSubspace V;
    std::vector<PointConfig> configs;
    std::vector<size_t> rs;  // r_j per config
};

/// Warn-only shape checks: |X^j| = (D+1)(r_j - 1) + 1 with D = (d-v)(d-w),
/// r_j powers of p, w = m(d-v) - 1.
std::vector<std::string> transversal_shape_warnings(const TransversalInstance& inst);

struct TransversalOutcome {
    LinSubspace W;
    std::vector<PartitionWitness> partitions;
    Certificate cert;
    GateResult gate;
    bool found = false;
    size_t candidates_tried = 0;
    std::string notes;
};

/// One W of projective dimension w plus per-config partitions, all passing
/// verify_transversal_witness with the instance's V.
TransversalOutcome search_transversal(const TransversalInstance& inst, const SearchConfig& cfg,
                                      bool rainbow = false);

struct BothOutcome {
    LinSubspace V, W;
    std::vector<PartitionWitness> partitions;
    Certificate cert;
    GateResult gate;
    bool found = false;
    size_t candidates_tried = 0;
    std::string notes;
};

/// Outer search over V (spanned + random candidates) wrapping the
/// transversal inner search, for two point sets sharing one (V, W) pair.
/// w defaults to d-v-1; the matching arithmetic gate is evaluated and
/// reported but never blocks the search.
BothOutcome search_both_subspaces(const PointConfig& x1, const PointConfig& x2, size_t d, long v,
                                  size_t r1, size_t r2, uint64_t p, const SearchConfig& cfg,
                                  std::optional<long> w_target = std::nullopt);

/// Exact number of r-part partitions passing verify_tverberg_witness for
/// this fixed (V, W). Guarded by the enumeration cap. Note: this counts
/// partitions for one W, a conservative relative of the all-W lower bound.
Int count_valid_partitions(const LinSubspace& v, const LinSubspace& w, const PointConfig& x,
                           size_t r, size_t enum_cap = 2000000);

/// Stirling partition number S(n, r) for the enumeration guards.
Int stirling2(size_t n, size_t r);

}  // namespace projtv
