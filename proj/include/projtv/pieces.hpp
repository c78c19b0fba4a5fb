#pragma once

// The two-hyperplane piece structure on RP^d and the exact minimum-count
// engine. A pair of hyperplanes H1 (containing V) and H2 (containing W) cuts
// RP^d into two closed pieces {fg >= 0} and {fg <= 0}; everything here
// quantifies over all admissible pairs at once by enumerating the open cells
// of the two induced central arrangements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projtv/cells.hpp"
#include "projtv/projective.hpp"

namespace projtv {

struct HyperplanePair {
    RatVec f;  // linear form of H1
    RatVec g;  // linear form of H2
};

/// sign(f(x) g(x)): +1 / -1 for the open sides, 0 when x lies on H1 or H2
/// (and hence in both closed pieces). Well-defined on RP^d. Throws on a zero
/// form.
int piece_sign(const HyperplanePair& pair, const ProjPoint& x);

struct CellCertificate {
    SignVector sigma;   // signs of f on X for the H1-cell
    SignVector tau;     // signs of g on X for the H2-cell
    RatVec witness_u;   // coefficients over a basis of annihilator(V-hat)
    RatVec witness_s;   // coefficients over a basis of annihilator(W-hat)
    size_t count_plus = 0;   // #{i : sigma_i tau_i >= 0}
    size_t count_minus = 0;  // #{i : sigma_i tau_i <= 0}
};

struct Certificate {
    bool pass = false;
    long min_count = 0;
    long r = 0;  // threshold the verdict was taken against
    CellCertificate witness;
    LinSubspace V, W;
    std::string explanation;
    std::optional<size_t> failing_part;
    std::optional<size_t> failing_config;
};

struct PartitionWitness {
    std::vector<std::vector<size_t>> parts;

    size_t r() const { return parts.size(); }
};

/// Throws unless parts are nonempty, pairwise disjoint and cover 0..n-1.
void validate_partition(const PartitionWitness& pw, size_t n);

struct EngineOptions {
    bool strict_disjoint = false;  // demand meet(V, W) = 0
};

/// Precomputed cell-pair data for one (V, W, X): the arrangements
/// {A-hat x_i} and {B-hat x_i}, their open cells, and per-pair piece
/// membership masks. Requires |X| <= 64 for the masks.
struct PairTable {
    RatMat a_basis, b_basis;  // bases of annihilator(V-hat), annihilator(W-hat)
    std::vector<OpenCell> cells_a, cells_b;
    struct Entry {
        size_t ia = 0, ib = 0;
        uint64_t geq = 0, leq = 0;  // {i : sigma_i tau_i >= 0}, {i : <= 0}
    };
    std::vector<Entry> entries;
    size_t n = 0;
};

/// Throws when V or W is the whole space (no admissible hyperplane), or when
/// |X| exceeds the mask width.
PairTable build_pair_table(const LinSubspace& v, const LinSubspace& w, const PointConfig& x);

struct MinCountResult {
    long min_count = 0;
    CellCertificate witness;  // lexicographically first minimizing cell pair
};

/// Minimum over all pairs (H1 containing V, H2 containing W) of
/// min(|P1 cap X|, |P2 cap X|) for the closed pieces P1, P2, with an exact
/// witness. Points on V or on W count into both pieces for every pair.
MinCountResult min_piece_counts(const LinSubspace& v, const LinSubspace& w, const PointConfig& x);

/// pass iff min_piece_counts >= r; the certificate carries the minimizing
/// witness either way. r >= 0.
Certificate verify_center_subspace(const LinSubspace& v, const LinSubspace& w,
                                   const PointConfig& x, long r,
                                   const EngineOptions& opts = {});

/// pass iff for every admissible pair and every part, the part meets both
/// closed pieces. With rainbow set, each part must also use every color at
/// most once (requires colors on X).
Certificate verify_tverberg_witness(const LinSubspace& v, const LinSubspace& w,
                                    const PointConfig& x, const PartitionWitness& partition,
                                    bool rainbow = false, const EngineOptions& opts = {});

/// Conjunction of verify_tverberg_witness over all configs with one (V, W).
Certificate verify_transversal_witness(
    const LinSubspace& v, const LinSubspace& w,
    const std::vector<std::pair<PointConfig, PartitionWitness>>& configs, bool rainbow = false,
    const EngineOptions& opts = {});

}  // namespace projtv
