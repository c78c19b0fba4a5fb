#include "projtv/pieces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace projtv {

int piece_sign(const HyperplanePair& pair, const ProjPoint& x) {
    if (is_zero(pair.f) || is_zero(pair.g)) throw std::invalid_argument("piece_sign: zero form");
    return sgn(dot(pair.f, x.coords)) * sgn(dot(pair.g, x.coords));
}

void validate_partition(const PartitionWitness& pw, size_t n) {
    std::vector<int> seen(n, 0);
    for (const auto& part : pw.parts) {
        if (part.empty()) throw std::invalid_argument("partition: empty part");
        for (size_t i : part) {
            if (i >= n) throw std::invalid_argument("partition: index out of range");
            if (seen[i]++) throw std::invalid_argument("partition: overlapping parts");
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!seen[i]) throw std::invalid_argument("partition: uncovered index");
}

PairTable build_pair_table(const LinSubspace& v, const LinSubspace& w, const PointConfig& x) {
    if (v.ambient_dim != x.d + 1 || w.ambient_dim != x.d + 1)
        throw std::invalid_argument("pair table: ambient dimension mismatch");
    if (x.size() > 64) throw std::invalid_argument("pair table: more than 64 points");
    const LinSubspace va = annihilator(v);
    const LinSubspace wa = annihilator(w);
    if (va.rank() == 0) throw std::invalid_argument("pair table: V is all of RP^d");
    if (wa.rank() == 0) throw std::invalid_argument("pair table: W is all of RP^d");

    PairTable t;
    t.a_basis = va.basis;
    t.b_basis = wa.basis;
    t.n = x.size();
    std::vector<RatVec> avecs, bvecs;
    avecs.reserve(x.size());
    bvecs.reserve(x.size());
    for (const auto& p : x.points) {
        avecs.push_back(mat_vec(t.a_basis, p.coords));
        bvecs.push_back(mat_vec(t.b_basis, p.coords));
    }
    t.cells_a = enumerate_open_cells(va.rank(), avecs);
    t.cells_b = enumerate_open_cells(wa.rank(), bvecs);

    t.entries.reserve(t.cells_a.size() * t.cells_b.size());
    for (size_t ia = 0; ia < t.cells_a.size(); ++ia) {
        for (size_t ib = 0; ib < t.cells_b.size(); ++ib) {
            PairTable::Entry e;
            e.ia = ia;
            e.ib = ib;
            const auto& sa = t.cells_a[ia].sv.signs;
            const auto& sb = t.cells_b[ib].sv.signs;
            for (size_t i = 0; i < t.n; ++i) {
                const int prod = sa[i] * sb[i];
                if (prod >= 0) e.geq |= uint64_t(1) << i;
                if (prod <= 0) e.leq |= uint64_t(1) << i;
            }
            t.entries.push_back(e);
        }
    }
    return t;
}

namespace {

int popcount64(uint64_t v) {
#if defined(__GNUC__)
    return __builtin_popcountll(v);
#else
    int c = 0;
    while (v) { v &= v - 1; ++c; }
    return c;
#endif
}

CellCertificate make_witness(const PairTable& t, const PairTable::Entry& e) {
    CellCertificate c;
    c.sigma = t.cells_a[e.ia].sv;
    c.tau = t.cells_b[e.ib].sv;
    c.witness_u = t.cells_a[e.ia].witness;
    c.witness_s = t.cells_b[e.ib].witness;
    c.count_plus = static_cast<size_t>(popcount64(e.geq));
    c.count_minus = static_cast<size_t>(popcount64(e.leq));
    return c;
}

bool strictness_violated(const LinSubspace& v, const LinSubspace& w, const EngineOptions& opts) {
    return opts.strict_disjoint && meet(v, w).rank() > 0;
}

Certificate strictness_failure(const LinSubspace& v, const LinSubspace& w, long r) {
    Certificate c;
    c.pass = false;
    c.min_count = 0;
    c.r = r;
    c.V = v;
    c.W = w;
    c.explanation = "strict-disjoint requested but meet(V, W) is nontrivial";
    return c;
}

}  // namespace

MinCountResult min_piece_counts(const LinSubspace& v, const LinSubspace& w, const PointConfig& x) {
    const PairTable t = build_pair_table(v, w, x);
    MinCountResult best;
    bool first = true;
    for (const auto& e : t.entries) {
        const long value = std::min(popcount64(e.geq), popcount64(e.leq));
        if (first || value < best.min_count) {
            first = false;
            best.min_count = value;
            best.witness = make_witness(t, e);
        }
    }
    return best;
}

Certificate verify_center_subspace(const LinSubspace& v, const LinSubspace& w,
                                   const PointConfig& x, long r, const EngineOptions& opts) {
    if (r < 0) throw std::invalid_argument("verify_center_subspace: r must be >= 0");
    if (strictness_violated(v, w, opts)) return strictness_failure(v, w, r);
    const MinCountResult m = min_piece_counts(v, w, x);
    Certificate c;
    c.pass = m.min_count >= r;
    c.min_count = m.min_count;
    c.r = r;
    c.witness = m.witness;
    c.V = v;
    c.W = w;
    c.explanation = c.pass ? "every admissible hyperplane pair leaves at least r points in each piece"
                            : "witness pair realizes a piece with fewer than r points";
    return c;
}

Certificate verify_tverberg_witness(const LinSubspace& v, const LinSubspace& w,
                                    const PointConfig& x, const PartitionWitness& partition,
                                    bool rainbow, const EngineOptions& opts) {
    validate_partition(partition, x.size());
    if (rainbow && !x.colors)
        throw std::invalid_argument("verify_tverberg_witness: rainbow requested without colors");
    Certificate c;
    c.V = v;
    c.W = w;
    c.r = 1;
    if (rainbow) {
        for (size_t pi = 0; pi < partition.parts.size(); ++pi) {
            std::map<std::string, int> uses;
            for (size_t i : partition.parts[pi])
                if (++uses[(*x.colors)[i]] > 1) {
                    c.pass = false;
                    c.min_count = 0;
                    c.failing_part = pi;
                    c.explanation = "part " + std::to_string(pi) + " repeats color '" +
                                    (*x.colors)[i] + "'";
                    return c;
                }
        }
    }
    if (strictness_violated(v, w, opts)) return strictness_failure(v, w, 1);

    const PairTable t = build_pair_table(v, w, x);
    std::vector<uint64_t> part_masks;
    for (const auto& part : partition.parts) {
        uint64_t m = 0;
        for (size_t i : part) m |= uint64_t(1) << i;
        part_masks.push_back(m);
    }

    // min over (pair, part) of min(#part-in-geq-piece, #part-in-leq-piece);
    // the partition passes iff this is >= 1.
    bool first = true;
    long best = 0;
    for (const auto& e : t.entries) {
        for (size_t pi = 0; pi < part_masks.size(); ++pi) {
            const long value =
                std::min(popcount64(e.geq & part_masks[pi]), popcount64(e.leq & part_masks[pi]));
            if (first || value < best) {
                first = false;
                best = value;
                c.witness = make_witness(t, e);
                c.failing_part = pi;
            }
        }
    }
    c.min_count = best;
    c.pass = best >= 1;
    if (c.pass) {
        c.failing_part.reset();
        c.explanation = "every part meets both closed pieces of every admissible pair";
    } else {
        c.explanation = "part " + std::to_string(*c.failing_part) +
                        " misses one closed piece of the witness pair";
    }
    return c;
}

Certificate verify_transversal_witness(
    const LinSubspace& v, const LinSubspace& w,
    const std::vector<std::pair<PointConfig, PartitionWitness>>& configs, bool rainbow,
    const EngineOptions& opts) {
    if (configs.empty()) throw std::invalid_argument("verify_transversal_witness: no configs");
    for (const auto& [cfg, pw] : configs)
        if (cfg.d != configs[0].first.d)
            throw std::invalid_argument("verify_transversal_witness: mixed ambient dimensions");
    Certificate combined;
    combined.V = v;
    combined.W = w;
    combined.r = 1;
    combined.pass = true;
    bool first = true;
    for (size_t j = 0; j < configs.size(); ++j) {
        Certificate cj =
            verify_tverberg_witness(v, w, configs[j].first, configs[j].second, rainbow, opts);
        if (first || cj.min_count < combined.min_count) {
            first = false;
            combined.min_count = cj.min_count;
            combined.witness = cj.witness;
            combined.failing_part = cj.failing_part;
            combined.failing_config = j;
        }
        if (!cj.pass) {
            combined.pass = false;
            combined.explanation =
                "config " + std::to_string(j) + " fails: " + cj.explanation;
        }
    }
    if (combined.pass) {
        combined.failing_part.reset();
        combined.failing_config.reset();
        combined.explanation = "all configs pass with the same subspace pair";
    }
    return combined;
}

}  // namespace projtv
