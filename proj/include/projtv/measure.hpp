#pragma once

// Sampling demo for the measure statements: draw finite samples from a
// density, rationalize, run the discrete search, and report the achieved
// minimum piece fraction against the 1/(D+1) bound. This is explicitly a
// demonstration, not a certificate about the continuous measure.

#include <string>
#include <vector>

#include "projtv/tverberg.hpp"

namespace projtv {

struct DensityComponent {
    std::string kind;       // "uniform-box" | "gaussian" | "point"
    double weight = 1.0;    // mixture weight
    std::vector<double> a;  // box lower corner / mean / location
    std::vector<double> b;  // box upper corner / standard deviations
};

struct DensitySpec {
    size_t d = 0;
    std::vector<DensityComponent> components;  // one entry = plain density
};

struct MeasureDemoResult {
    std::vector<PointConfig> samples;
    LinSubspace V, W;
    std::vector<PartitionWitness> partitions;  // empty for the m = 1 path
    Certificate cert;
    std::vector<size_t> rs;
    Rat bound;                       // 1/(D+1)
    std::vector<Rat> min_fractions;  // achieved min piece fraction per measure
    bool discrete_pass = false;
    std::string notes;
};

/// Deterministic sampling (xorshift-free: mt19937_64 + fixed transforms),
/// coordinates rationalized with denominator 4096. For m == 1 the search is
/// the center-subspace search with r = ceil(N / (D+1)); for m >= 2 samples
/// are truncated to the tight transversal sizes with power-of-two part
/// counts. V is the hyperplane at infinity when v = d-1, else the span of
/// the first v+1 coordinate axes.
MeasureDemoResult demo_measure(const std::vector<DensitySpec>& densities, size_t d, long v,
                               size_t n_samples, uint64_t seed, const SearchConfig& cfg,
                               size_t sample_cap = 400);

}  // namespace projtv
