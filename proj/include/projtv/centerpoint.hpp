#pragma once

// Center point family: exact Tukey depth and the classical center point in
// the affine chart, the dual statement for hyperplane families (rays from a
// point), and the projective center-subspace search. Searches are heuristic;
// every returned subspace is re-verified exactly and the certificate is the
// only claim of success.

#include <cstdint>
#include <string>
#include <vector>

#include "projtv/pieces.hpp"

namespace projtv {

/// Min over closed half-spaces containing c of |X cap H|, computed on the
/// direction cells of the central arrangement {x_i - c}. Empty X gives 0.
size_t tukey_depth(const RatVec& c, const std::vector<RatVec>& points);

struct DepthPoint {
    RatVec point;
    size_t depth = 0;
};

/// A point of depth >= ceil(n/(d+1)), found by scanning arrangement vertices
/// of hyperplanes spanned by d-subsets of X plus X itself and pairwise
/// midpoints. The bound is asserted before returning.
DepthPoint classical_center_point(const std::vector<RatVec>& points, size_t d);

struct AffineHyperplane {
    RatVec normal;  // nonzero
    Rat offset;     // hyperplane {x : normal . x = offset}
};

/// Min over ray directions from c of the number of hyperplanes the closed
/// ray meets; exact on open direction cells (sharp under general position).
size_t min_ray_crossings(const RatVec& c, const std::vector<AffineHyperplane>& hs);

struct DualCenterResult {
    RatVec point;
    size_t min_crossings = 0;
};

/// Maximizes min_ray_crossings over arrangement vertices (plus feet and
/// centroid fallbacks). Under general position the value meets
/// ceil(n/(d+1)); that bound is asserted in that case.
DualCenterResult dual_center_point_search(const std::vector<AffineHyperplane>& hs, size_t d);

struct WeightVector {
    RatVec weights;  // nonnegative, summing to 1

    std::vector<size_t> support() const;
};

WeightVector make_weights(RatVec w);

/// Q = sum_i t_i lambda_i lambda_i^T + eps I; positive definite for eps > 0
/// (checked by exact LDL^T pivots).
RatMat gram_matrix(const WeightVector& p, const std::vector<RatVec>& lambdas, const Rat& eps);

/// The subspace {x : x^T Q v = 0 for all v in S}, i.e. the Q-orthogonal
/// complement of S. Q must be symmetric positive definite; the result meets
/// S trivially (asserted).
LinSubspace w_from_weights(const LinSubspace& s, const RatMat& q);

struct SearchConfig {
    std::vector<Rat> eps_schedule;  // strictly positive, decreasing
    size_t multistart = 6;
    size_t max_iterations = 60;  // per epsilon stage
    uint64_t denom_bound = 1000000;
    uint64_t seed = 0;
    size_t candidate_cap = 4000;
    size_t partition_enum_cap = 60000;
    size_t random_subspace_budget = 400;
    unsigned threads = 1;
    bool strict_disjoint = false;
};

SearchConfig default_search_config();
void validate_search_config(const SearchConfig& cfg);

struct SearchOutcome {
    LinSubspace W;
    Certificate cert;
    bool found = false;         // cert.pass
    size_t candidates_tried = 0;
    std::string notes;
};

/// Searches for W of projective dimension d-v-1 whose exact certificate has
/// min_piece_counts >= r. Combines combinatorial candidates (subspaces
/// spanned by point subsets and their pairwise sums), the weight-space Gram
/// construction with a decreasing epsilon schedule, and small grid/random
/// fallbacks. Returns the best candidate with its certificate; never claims
/// success without exact verification.
SearchOutcome search_center_subspace(const LinSubspace& v, const PointConfig& x, long r,
                                     const SearchConfig& cfg);

/// Shared candidate machinery (also used by the Tverberg searches).
std::vector<LinSubspace> spanned_candidates(const std::vector<ProjPoint>& pts, size_t target_rank,
                                            size_t cap);
std::vector<LinSubspace> random_subspace_candidates(size_t ambient, size_t target_rank,
                                                    size_t count, uint64_t seed);

/// Exact Gram-map candidate for rationalized weights: the annihilator of the
/// Q-orthogonal complement of annihilator(V).
LinSubspace gram_map_candidate(const LinSubspace& v, const PointConfig& x,
                               const WeightVector& p, const Rat& eps);

}  // namespace projtv
