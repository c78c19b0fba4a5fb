#include "projtv/tverberg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace projtv {

RadonResult radon_partition(const std::vector<RatVec>& affine_points, size_t d) {
    const size_t n = affine_points.size();
    if (n < d + 2) throw std::invalid_argument("radon_partition: need at least d+2 points");
    RatMat lifted(d + 1, RatVec(n));
    for (size_t j = 0; j < n; ++j) {
        if (affine_points[j].size() != d)
            throw std::invalid_argument("radon_partition: dimension mismatch");
        for (size_t i = 0; i < d; ++i) lifted[i][j] = affine_points[j][i];
        lifted[d][j] = 1;
    }
    const RatMat kb = kernel_basis(lifted, n);
    if (kb.empty()) throw std::logic_error("radon_partition: lifted matrix has full column rank");
    const RatVec& c = kb[0];

    std::vector<size_t> plus, rest;
    for (size_t i = 0; i < n; ++i)
        (c[i] > 0 ? plus : rest).push_back(i);
    if (plus.empty() || rest.empty())
        throw std::logic_error("radon_partition: one-sided dependence");

    Rat total = 0;
    RatVec common(d, Rat(0));
    for (size_t i : plus) {
        total += c[i];
        common = add(common, scale(affine_points[i], c[i]));
    }
    common = scale(common, Rat(1) / total);
    return RadonResult{PartitionWitness{{plus, rest}}, common, c};
}

Int stirling2(size_t n, size_t r) {
    if (r > n) return 0;
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(r + 1, 0));
    s[0][0] = 1;
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= std::min(i, r); ++j)
            s[i][j] = s[i - 1][j - 1] + Int(j) * s[i - 1][j];
    return s[n][r];
}

namespace {

// Restricted-growth-string enumeration of set partitions into exactly r
// blocks; visit returns true to stop early.
template <typename Visit>
void enumerate_partitions(size_t n, size_t r, const Visit& visit) {
    if (r == 0 || r > n) return;
    std::vector<size_t> a(n, 0);
    bool stop = false;
    // Restricted growth strings: a_0 = 0, a_i <= max(a_0..a_{i-1}) + 1.
    auto rec = [&](auto&& self, size_t i, size_t used) -> void {
        if (stop) return;
        if (i == n) {
            if (used == r) stop = visit(a);
            return;
        }
        const size_t limit = std::min(used, r - 1);
        // Prune: the remaining positions must still be able to open r blocks.
        for (size_t b = 0; b <= limit; ++b) {
            const size_t new_used = std::max(used, b + 1);
            if (new_used + (n - i - 1) < r) continue;
            a[i] = b;
            self(self, i + 1, new_used);
            if (stop) return;
        }
    };
    rec(rec, 0, 0);
}

PartitionWitness rgs_to_partition(const std::vector<size_t>& a, size_t r) {
    PartitionWitness pw;
    pw.parts.assign(r, {});
    for (size_t i = 0; i < a.size(); ++i) pw.parts[a[i]].push_back(i);
    return pw;
}

std::vector<uint64_t> color_masks(const PointConfig& x) {
    std::vector<uint64_t> masks;
    if (!x.colors) return masks;
    std::map<std::string, uint64_t> by_color;
    for (size_t i = 0; i < x.size(); ++i) by_color[(*x.colors)[i]] |= uint64_t(1) << i;
    for (auto& [name, m] : by_color) masks.push_back(m);
    return masks;
}

int popcount64(uint64_t v) { return __builtin_popcountll(v); }

bool partition_passes(const PairTable& t, const std::vector<uint64_t>& part_masks,
                      const std::vector<uint64_t>& colors, bool rainbow) {
    if (rainbow) {
        for (uint64_t pm : part_masks)
            for (uint64_t cm : colors)
                if (popcount64(pm & cm) > 1) return false;
    }
    for (const auto& e : t.entries)
        for (uint64_t pm : part_masks) {
            if ((e.geq & pm) == 0) return false;
            if ((e.leq & pm) == 0) return false;
        }
    return true;
}

std::vector<uint64_t> masks_of(const PartitionWitness& pw) {
    std::vector<uint64_t> masks;
    for (const auto& part : pw.parts) {
        uint64_t m = 0;
        for (size_t i : part) m |= uint64_t(1) << i;
        masks.push_back(m);
    }
    return masks;
}

// Find a passing partition for a fixed pair table: exhaustive up to the cap,
// then greedy seeding with pairwise-move local improvement.
std::optional<PartitionWitness> find_passing_partition(const PairTable& t, size_t r,
                                                       const std::vector<uint64_t>& colors,
                                                       bool rainbow, const SearchConfig& cfg,
                                                       uint64_t seed) {
    const size_t n = t.n;
    if (r == 0 || r > n) return std::nullopt;
    if (stirling2(n, r) <= Int(cfg.partition_enum_cap)) {
        std::optional<PartitionWitness> hit;
        enumerate_partitions(n, r, [&](const std::vector<size_t>& a) {
            PartitionWitness pw = rgs_to_partition(a, r);
            if (partition_passes(t, masks_of(pw), colors, rainbow)) {
                hit = std::move(pw);
                return true;
            }
            return false;
        });
        return hit;
    }

    // Greedy + local search: minimize the number of (pair, part) violations.
    std::mt19937_64 rng(seed);
    auto violations = [&](const std::vector<size_t>& assign) {
        std::vector<uint64_t> masks(r, 0);
        for (size_t i = 0; i < n; ++i) masks[assign[i]] |= uint64_t(1) << i;
        long bad = 0;
        for (uint64_t pm : masks)
            if (pm == 0) bad += 1000;
        if (rainbow)
            for (uint64_t pm : masks)
                for (uint64_t cm : colors) bad += std::max(0, popcount64(pm & cm) - 1);
        for (const auto& e : t.entries)
            for (uint64_t pm : masks) {
                if ((e.geq & pm) == 0) ++bad;
                if ((e.leq & pm) == 0) ++bad;
            }
        return bad;
    };
    for (size_t attempt = 0; attempt < 12; ++attempt) {
        std::vector<size_t> assign(n);
        for (size_t i = 0; i < n; ++i) assign[i] = attempt == 0 ? i % r : rng() % r;
        long cur = violations(assign);
        bool improved = true;
        size_t rounds = 0;
        while (improved && cur > 0 && rounds++ < 200) {
            improved = false;
            for (size_t i = 0; i < n && !improved; ++i) {
                const size_t old = assign[i];
                for (size_t b = 0; b < r && !improved; ++b) {
                    if (b == old) continue;
                    assign[i] = b;
                    const long score = violations(assign);
                    if (score < cur) {
                        cur = score;
                        improved = true;
                    } else {
                        assign[i] = old;
                    }
                }
            }
        }
        if (cur == 0) {
            PartitionWitness pw;
            pw.parts.assign(r, {});
            for (size_t i = 0; i < n; ++i) pw.parts[assign[i]].push_back(i);
            std::erase_if(pw.parts, [](const auto& part) { return part.empty(); });
            if (pw.parts.size() == r) return pw;
        }
    }
    return std::nullopt;
}

std::vector<LinSubspace> pooled_candidates(const std::vector<const PointConfig*>& configs,
                                           size_t target_rank, const SearchConfig& cfg,
                                           uint64_t extra_seed) {
    std::vector<ProjPoint> pool;
    for (const auto* c : configs)
        pool.insert(pool.end(), c->points.begin(), c->points.end());
    std::vector<LinSubspace> cands = spanned_candidates(pool, target_rank, cfg.candidate_cap);
    auto rnd = random_subspace_candidates(configs[0]->d + 1, target_rank,
                                          cfg.random_subspace_budget, cfg.seed + extra_seed);
    cands.insert(cands.end(), rnd.begin(), rnd.end());
    return cands;
}

}  // namespace

TverbergOutcome search_projective_tverberg(const LinSubspace& v, const PointConfig& x, size_t r,
                                           const SearchConfig& cfg, bool rainbow) {
    validate_search_config(cfg);
    if (r == 0) throw std::invalid_argument("search_projective_tverberg: r must be >= 1");
    TverbergOutcome out;
    if (r == 1) {
        SearchOutcome c = search_center_subspace(v, x, 1, cfg);
        out.W = c.W;
        out.partition.parts = {std::vector<size_t>(x.size())};
        for (size_t i = 0; i < x.size(); ++i) out.partition.parts[0][i] = i;
        out.cert = verify_tverberg_witness(v, out.W, x, out.partition, rainbow,
                                           EngineOptions{cfg.strict_disjoint});
        out.found = out.cert.pass;
        out.candidates_tried = c.candidates_tried;
        return out;
    }

    const size_t target_rank = x.d - v.proj_dim();
    if (v.rank() == 0 || target_rank == 0)
        throw std::invalid_argument("search_projective_tverberg: inconsistent dimensions");
    const auto colors = color_masks(x);
    const EngineOptions opts{cfg.strict_disjoint};
    size_t tried = 0;
    std::set<RatMat> seen;

    auto try_candidate = [&](const LinSubspace& w) -> bool {
        if (w.rank() != target_rank || !seen.insert(w.basis).second) return false;
        ++tried;
        PairTable t;
        try {
            t = build_pair_table(v, w, x);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (cfg.strict_disjoint && meet(v, w).rank() > 0) return false;
        auto pw = find_passing_partition(t, r, colors, rainbow, cfg, cfg.seed + tried);
        if (!pw) return false;
        Certificate cert = verify_tverberg_witness(v, w, x, *pw, rainbow, opts);
        if (!cert.pass) return false;
        out.W = w;
        out.partition = *pw;
        out.cert = std::move(cert);
        out.found = true;
        out.candidates_tried = tried;
        return true;
    };

    // Classical oracle first: the affine Radon regime.
    if (r == 2 && v == hyperplane_at_infinity(x.d)) {
        std::vector<RatVec> affine;
        bool all_affine = true;
        for (const auto& p : x.points) {
            auto a = to_affine(p);
            if (!a) { all_affine = false; break; }
            affine.push_back(std::move(*a));
        }
        if (all_affine && affine.size() >= x.d + 2) {
            const RadonResult rr = radon_partition(affine, x.d);
            const LinSubspace w = span_of_point(point_from_affine(rr.common_point));
            if (try_candidate(w)) {
                out.notes = "radon oracle candidate";
                return out;
            }
        }
    }

    for (const auto& w : spanned_candidates(x.points, target_rank, cfg.candidate_cap))
        if (try_candidate(w)) return out;

    // Gram candidates: per-part uniform weights for seeded balanced splits.
    std::mt19937_64 rng(cfg.seed);
    for (size_t attempt = 0; attempt < cfg.multistart; ++attempt) {
        std::vector<size_t> assign(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            assign[i] = attempt == 0 ? i % r : rng() % r;
        for (size_t part = 0; part < r; ++part) {
            RatVec weights(x.size(), Rat(0));
            size_t cnt = 0;
            for (size_t i = 0; i < x.size(); ++i)
                if (assign[i] == part) ++cnt;
            if (cnt == 0) continue;
            for (size_t i = 0; i < x.size(); ++i)
                if (assign[i] == part) weights[i] = Rat(1, Int(cnt));
            for (const Rat& eps : cfg.eps_schedule) {
                const LinSubspace w = gram_map_candidate(v, x, WeightVector{weights}, eps);
                if (try_candidate(w)) return out;
            }
        }
    }

    for (const auto& w : random_subspace_candidates(x.d + 1, target_rank,
                                                    cfg.random_subspace_budget, cfg.seed + 7))
        if (try_candidate(w)) return out;

    // Best effort: report the best center-style candidate with a failing
    // certificate so callers see how close the search came.
    SearchOutcome fallback = search_center_subspace(v, x, 1, cfg);
    out.W = fallback.W;
    out.partition.parts = {std::vector<size_t>(x.size())};
    for (size_t i = 0; i < x.size(); ++i) out.partition.parts[0][i] = i;
    out.cert = verify_tverberg_witness(v, out.W, x, out.partition, false, opts);
    out.cert.pass = false;
    out.found = false;
    out.candidates_tried = tried;
    out.notes = "no passing (W, partition) found within budgets";
    return out;
}

std::vector<std::string> transversal_shape_warnings(const TransversalInstance& inst) {
    std::vector<std::string> warnings;
    const long D = static_cast<long>(inst.d - inst.v) * static_cast<long>(inst.d - inst.w);
    const long m = static_cast<long>(inst.configs.size());
    if (inst.w != m * (static_cast<long>(inst.d) - inst.v) - 1)
        warnings.push_back("w != m(d-v)-1: outside the transversal dimension regime");
    for (size_t j = 0; j < inst.configs.size(); ++j) {
        const Int expect = required_points(Int(D), Int(inst.rs[j]));
        if (Int(inst.configs[j].size()) != expect)
            warnings.push_back("config " + std::to_string(j) + " has " +
                               std::to_string(inst.configs[j].size()) + " points, tight size is " +
                               expect.str());
        uint64_t rj = inst.rs[j];
        while (rj > 1 && rj % inst.p == 0) rj /= inst.p;
        if (rj != 1)
            warnings.push_back("r_" + std::to_string(j) + " = " + std::to_string(inst.rs[j]) +
                               " is not a power of p = " + std::to_string(inst.p));
    }
    return warnings;
}

TransversalOutcome search_transversal(const TransversalInstance& inst, const SearchConfig& cfg,
                                      bool rainbow) {
    validate_search_config(cfg);
    if (inst.configs.empty() || inst.configs.size() != inst.rs.size())
        throw std::invalid_argument("search_transversal: configs/rs mismatch");
    for (const auto& c : inst.configs)
        if (c.d != inst.d) throw std::invalid_argument("search_transversal: ambient mismatch");
    TransversalOutcome out;
    out.gate = thm4_condition(static_cast<long>(inst.d), inst.v, inst.w,
                              static_cast<long>(inst.configs.size()), inst.p);

    const size_t m = inst.configs.size();
    if (m == 1) {
        TverbergOutcome one =
            search_projective_tverberg(inst.V, inst.configs[0], inst.rs[0], cfg, rainbow);
        out.W = one.W;
        out.partitions = {one.partition};
        out.cert = one.cert;
        out.found = one.found;
        out.candidates_tried = one.candidates_tried;
        out.notes = one.notes;
        return out;
    }

    const size_t target_rank = static_cast<size_t>(inst.w + 1);
    const EngineOptions opts{cfg.strict_disjoint};
    size_t tried = 0;
    std::set<RatMat> seen;
    std::vector<std::vector<uint64_t>> colors;
    for (const auto& c : inst.configs) colors.push_back(color_masks(c));

    auto try_candidate = [&](const LinSubspace& w) -> bool {
        if (w.rank() != target_rank || !seen.insert(w.basis).second) return false;
        if (cfg.strict_disjoint && meet(inst.V, w).rank() > 0) return false;
        ++tried;
        std::vector<PartitionWitness> parts;
        for (size_t j = 0; j < m; ++j) {
            PairTable t;
            try {
                t = build_pair_table(inst.V, w, inst.configs[j]);
            } catch (const std::invalid_argument&) {
                return false;
            }
            auto pw = find_passing_partition(t, inst.rs[j], colors[j], rainbow, cfg,
                                             cfg.seed + tried + j);
            if (!pw) return false;
            parts.push_back(std::move(*pw));
        }
        std::vector<std::pair<PointConfig, PartitionWitness>> pairs;
        for (size_t j = 0; j < m; ++j) pairs.emplace_back(inst.configs[j], parts[j]);
        Certificate cert = verify_transversal_witness(inst.V, w, pairs, rainbow, opts);
        if (!cert.pass) return false;
        out.W = w;
        out.partitions = std::move(parts);
        out.cert = std::move(cert);
        out.found = true;
        out.candidates_tried = tried;
        return true;
    };

    // Classical seed: a W through one Radon point per config, so that the
    // quotient by W-hat sends a common hull point of each config to zero.
    std::vector<ProjPoint> radon_pts;
    for (size_t j = 0; j < m; ++j) {
        if (inst.rs[j] != 2 || inst.configs[j].size() < inst.d + 2) continue;
        std::vector<RatVec> aff;
        bool ok = true;
        for (const auto& p : inst.configs[j].points) {
            auto a = to_affine(p);
            if (!a) { ok = false; break; }
            aff.push_back(std::move(*a));
        }
        if (!ok) continue;
        radon_pts.push_back(point_from_affine(radon_partition(aff, inst.d).common_point));
    }
    if (!radon_pts.empty()) {
        RatMat rows;
        for (const auto& p : radon_pts) rows.push_back(p.coords);
        LinSubspace seed = canonicalize(rows, inst.d + 1);
        if (seed.rank() <= target_rank) {
            // Pad with point spans until the rank fits, then test.
            std::vector<LinSubspace> padded{seed};
            for (size_t j = 0; j < m; ++j)
                for (const auto& pt : inst.configs[j].points) {
                    std::vector<LinSubspace> next;
                    for (const auto& s : padded) {
                        if (s.rank() == target_rank) { next.push_back(s); continue; }
                        next.push_back(s);
                        next.push_back(join(s, span_of_point(pt)));
                    }
                    padded = std::move(next);
                    if (padded.size() > 64) break;
                }
            for (const auto& s : padded)
                if (s.rank() == target_rank && try_candidate(s)) return out;
        }
    }

    std::vector<const PointConfig*> refs;
    for (const auto& c : inst.configs) refs.push_back(&c);
    for (const auto& w : pooled_candidates(refs, target_rank, cfg, 11))
        if (try_candidate(w)) return out;

    // Gram candidates from per-config uniform weights.
    for (size_t j = 0; j < m; ++j) {
        const size_t nj = inst.configs[j].size();
        RatVec weights(nj, Rat(1, Int(nj)));
        for (const Rat& eps : cfg.eps_schedule) {
            LinSubspace cand = gram_map_candidate(inst.V, inst.configs[j], WeightVector{weights},
                                                  eps);
            // The Gram map yields rank d-v; adjust by joining with point
            // spans when the transversal target is larger.
            if (cand.rank() < target_rank) {
                for (const auto& pt : inst.configs[j].points) {
                    if (cand.rank() >= target_rank) break;
                    cand = join(cand, span_of_point(pt));
                }
            }
            if (cand.rank() == target_rank && try_candidate(cand)) return out;
        }
    }

    out.candidates_tried = tried;
    out.notes = "no passing transversal candidate found within budgets";
    return out;
}

BothOutcome search_both_subspaces(const PointConfig& x1, const PointConfig& x2, size_t d, long v,
                                  size_t r1, size_t r2, uint64_t p, const SearchConfig& cfg,
                                  std::optional<long> w_target) {
    validate_search_config(cfg);
    if (x1.d != d || x2.d != d)
        throw std::invalid_argument("search_both_subspaces: ambient mismatch");
    if (v < 0 || v >= static_cast<long>(d))
        throw std::invalid_argument("search_both_subspaces: need 0 <= v < d");
    const long w = w_target.value_or(static_cast<long>(d) - v - 1);
    BothOutcome out;
    out.gate = (w == static_cast<long>(d) - v - 1)
                   ? thm6_condition(static_cast<long>(d), v, p)
                   : flag_condition(static_cast<long>(d), v, w, 2);
    if (!out.gate.value)
        out.notes = "hypothesis gate failed (existence not promised); searching anyway. ";

    std::vector<ProjPoint> pool = x1.points;
    pool.insert(pool.end(), x2.points.begin(), x2.points.end());
    std::vector<LinSubspace> v_cands =
        spanned_candidates(pool, static_cast<size_t>(v + 1), cfg.candidate_cap / 4 + 8);
    auto rnd = random_subspace_candidates(d + 1, static_cast<size_t>(v + 1),
                                          cfg.random_subspace_budget / 4 + 8, cfg.seed + 23);
    v_cands.insert(v_cands.end(), rnd.begin(), rnd.end());

    size_t tried_total = 0;
    SearchConfig inner = cfg;
    inner.candidate_cap = std::min<size_t>(cfg.candidate_cap, 800);
    inner.random_subspace_budget = std::min<size_t>(cfg.random_subspace_budget, 100);
    for (const auto& vc : v_cands) {
        TransversalInstance inst;
        inst.d = d;
        inst.v = v;
        inst.w = w;
        inst.p = p;
        inst.V = vc;
        inst.configs = {x1, x2};
        inst.rs = {r1, r2};
        TransversalOutcome t = search_transversal(inst, inner);
        tried_total += t.candidates_tried;
        if (t.found) {
            out.V = vc;
            out.W = t.W;
            out.partitions = t.partitions;
            out.cert = t.cert;
            out.found = true;
            out.candidates_tried = tried_total;
            return out;
        }
    }
    out.candidates_tried = tried_total;
    out.notes += "no passing (V, W, partitions) found within budgets";
    return out;
}

Int count_valid_partitions(const LinSubspace& v, const LinSubspace& w, const PointConfig& x,
                           size_t r, size_t enum_cap) {
    if (r == 0 || r > x.size())
        throw std::invalid_argument("count_valid_partitions: r out of range");
    if (stirling2(x.size(), r) > Int(enum_cap))
        throw std::invalid_argument("count_valid_partitions: enumeration cap exceeded");
    const PairTable t = build_pair_table(v, w, x);
    const auto colors = color_masks(x);
    Int count = 0;
    enumerate_partitions(x.size(), r, [&](const std::vector<size_t>& a) {
        PartitionWitness pw = rgs_to_partition(a, r);
        if (partition_passes(t, masks_of(pw), colors, false)) ++count;
        return false;
    });
    return count;
}

}  // namespace projtv
