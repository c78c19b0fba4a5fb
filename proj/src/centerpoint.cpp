#include "projtv/centerpoint.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "projtv/cells.hpp"

namespace projtv {

size_t tukey_depth(const RatVec& c, const std::vector<RatVec>& points) {
    if (points.empty()) return 0;
    const size_t d = c.size();
    if (d < 1) throw std::invalid_argument("tukey_depth: dimension must be >= 1");
    std::vector<RatVec> vecs;
    vecs.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != d) throw std::invalid_argument("tukey_depth: dimension mismatch");
        vecs.push_back(sub(p, c));
    }
    const auto cells = enumerate_open_cells(d, vecs);
    size_t best = points.size();
    for (const auto& cell : cells) {
        size_t count = cell.sv.zero_support.size();  // points equal to c lie in every half-space
        for (int s : cell.sv.signs)
            if (s > 0) ++count;
        best = std::min(best, count);
    }
    return best;
}

namespace {

bool next_subset(std::vector<size_t>& idx, size_t n) {
    const size_t r = idx.size();
    size_t i = r;
    while (i-- > 0) {
        if (idx[i] != i + n - r) {
            ++idx[i];
            for (size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Hyperplane through the d affinely independent points, if any.
std::optional<AffineHyperplane> spanned_hyperplane(const std::vector<RatVec>& pts,
                                                   const std::vector<size_t>& idx) {
    const size_t d = pts[idx[0]].size();
    RatMat diffs;
    for (size_t j = 1; j < idx.size(); ++j) diffs.push_back(sub(pts[idx[j]], pts[idx[0]]));
    const RatMat kb = kernel_basis(diffs, d);
    if (kb.size() != 1) return std::nullopt;
    return AffineHyperplane{kb[0], dot(kb[0], pts[idx[0]])};
}

}  // namespace

DepthPoint classical_center_point(const std::vector<RatVec>& points, size_t d) {
    if (points.empty()) throw std::invalid_argument("classical_center_point: empty X");
    const size_t n = points.size();
    const Int bound = ceil_div(Int(n), Int(d + 1));

    std::set<RatVec> candidates(points.begin(), points.end());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            candidates.insert(scale(add(points[i], points[j]), Rat(1, 2)));

    // Vertices of the arrangement of hyperplanes spanned by d-subsets.
    std::vector<AffineHyperplane> spanned;
    if (n >= d) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        do {
            if (auto h = spanned_hyperplane(points, idx)) spanned.push_back(std::move(*h));
        } while (next_subset(idx, n));
    }
    if (d >= 1 && spanned.size() >= d && spanned.size() <= 64) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        do {
            RatMat a;
            RatVec b;
            for (size_t i : idx) {
                a.push_back(spanned[i].normal);
                b.push_back(spanned[i].offset);
            }
            if (auto x = solve_square(std::move(a), std::move(b))) candidates.insert(*x);
        } while (next_subset(idx, spanned.size()));
    }

    DepthPoint best;
    bool first = true;
    for (const auto& c : candidates) {
        const size_t depth = tukey_depth(c, points);
        if (first || depth > best.depth || (depth == best.depth && lex_less(c, best.point))) {
            first = false;
            best = DepthPoint{c, depth};
        }
    }
    if (Int(best.depth) < bound)
        throw std::logic_error("classical_center_point: candidate scan missed the depth bound");
    return best;
}

size_t min_ray_crossings(const RatVec& c, const std::vector<AffineHyperplane>& hs) {
    const size_t d = c.size();
    if (d < 1) throw std::invalid_argument("min_ray_crossings: dimension must be >= 1");
    std::vector<RatVec> normals;
    std::vector<int> delta_sign;
    for (const auto& h : hs) {
        if (h.normal.size() != d || is_zero(h.normal))
            throw std::invalid_argument("min_ray_crossings: zero normal");
        normals.push_back(h.normal);
        delta_sign.push_back(sgn(h.offset - dot(h.normal, c)));
    }
    if (hs.empty()) return 0;

    // The ray from c in direction u meets H_i iff delta_i = 0 (at t = 0) or
    // sign(normal_i . u) = sign(delta_i). On open cells every sign is fixed.
    const auto cells = enumerate_open_cells(d, normals);
    size_t best = hs.size();
    for (const auto& cell : cells) {
        size_t count = 0;
        for (size_t i = 0; i < hs.size(); ++i) {
            if (delta_sign[i] == 0)
                ++count;
            else if (cell.sv.signs[i] == delta_sign[i])
                ++count;
        }
        best = std::min(best, count);
    }
    return best;
}

DualCenterResult dual_center_point_search(const std::vector<AffineHyperplane>& hs, size_t d) {
    if (d < 1) throw std::invalid_argument("dual_center_point_search: dimension must be >= 1");
    std::set<RatVec> candidates;
    const size_t n = hs.size();
    std::vector<RatVec> vertices;
    if (n >= d) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        do {
            RatMat a;
            RatVec b;
            for (size_t i : idx) {
                a.push_back(hs[i].normal);
                b.push_back(hs[i].offset);
            }
            if (auto x = solve_square(std::move(a), std::move(b))) {
                vertices.push_back(*x);
                candidates.insert(*x);
            }
        } while (next_subset(idx, n));
    }
    for (const auto& h : hs) {
        const Rat nn = dot(h.normal, h.normal);
        candidates.insert(scale(h.normal, h.offset / nn));  // foot of the hyperplane
    }
    if (!vertices.empty()) {
        RatVec centroid(d, Rat(0));
        for (const auto& v : vertices) centroid = add(centroid, v);
        candidates.insert(scale(centroid, Rat(1, Int(vertices.size()))));
        for (size_t i = 0; i < vertices.size() && i < 40; ++i)
            for (size_t j = i + 1; j < vertices.size() && j < 40; ++j)
                candidates.insert(scale(add(vertices[i], vertices[j]), Rat(1, 2)));
    }
    if (candidates.empty()) candidates.insert(RatVec(d, Rat(0)));

    DualCenterResult best;
    bool first = true;
    for (const auto& c : candidates) {
        const size_t value = min_ray_crossings(c, hs);
        if (first || value > best.min_crossings ||
            (value == best.min_crossings && lex_less(c, best.point))) {
            first = false;
            best = DualCenterResult{c, value};
        }
    }

    // General position: every d-subset of normals independent, no d+1
    // hyperplanes through a common point. The classical bound is exact then.
    bool gp = n >= 1;
    if (n >= d) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        do {
            RatMat m;
            for (size_t i : idx) m.push_back(hs[i].normal);
            if (rank(std::move(m)) < d) { gp = false; break; }
        } while (next_subset(idx, n));
    }
    if (gp && n >= d + 1) {
        std::vector<size_t> idx(d + 1);
        for (size_t i = 0; i <= d; ++i) idx[i] = i;
        do {
            RatMat m;
            for (size_t i : idx) {
                RatVec row = hs[i].normal;
                row.push_back(hs[i].offset);
                m.push_back(std::move(row));
            }
            RatMat lhs;
            for (size_t i : idx) lhs.push_back(hs[i].normal);
            if (rank(std::move(m)) == rank(std::move(lhs))) { gp = false; break; }
        } while (next_subset(idx, n));
    }
    if (gp && n >= 1 && Int(best.min_crossings) < ceil_div(Int(n), Int(d + 1)))
        throw std::logic_error("dual_center_point_search: bound missed under general position");
    return best;
}

std::vector<size_t> WeightVector::support() const {
    std::vector<size_t> s;
    for (size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0) s.push_back(i);
    return s;
}

WeightVector make_weights(RatVec w) {
    Rat sum = 0;
    for (const auto& t : w) {
        if (t < 0) throw std::invalid_argument("make_weights: negative weight");
        sum += t;
    }
    if (sum != 1) throw std::invalid_argument("make_weights: weights must sum to 1");
    return WeightVector{std::move(w)};
}

RatMat gram_matrix(const WeightVector& p, const std::vector<RatVec>& lambdas, const Rat& eps) {
    if (eps <= 0) throw std::invalid_argument("gram_matrix: eps must be positive");
    if (p.weights.size() != lambdas.size())
        throw std::invalid_argument("gram_matrix: weight/form count mismatch");
    if (lambdas.empty()) throw std::invalid_argument("gram_matrix: no forms");
    const size_t k = lambdas[0].size();
    RatMat q(k, RatVec(k, Rat(0)));
    for (size_t t = 0; t < lambdas.size(); ++t) {
        if (lambdas[t].size() != k) throw std::invalid_argument("gram_matrix: form size mismatch");
        if (is_zero(lambdas[t])) throw std::invalid_argument("gram_matrix: zero form");
        if (p.weights[t] == 0) continue;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) q[i][j] += p.weights[t] * lambdas[t][i] * lambdas[t][j];
    }
    for (size_t i = 0; i < k; ++i) q[i][i] += eps;
    if (!is_positive_definite(q)) throw std::logic_error("gram_matrix: not positive definite");
    return q;
}

LinSubspace w_from_weights(const LinSubspace& s, const RatMat& q) {
    if (q.size() != s.ambient_dim) throw std::invalid_argument("w_from_weights: shape mismatch");
    const auto piv = ldlt_pivots(q);
    bool pd = piv.has_value();
    if (pd)
        for (const auto& pvt : *piv)
            if (pvt <= 0) { pd = false; break; }
    if (!pd) throw std::invalid_argument("w_from_weights: Q must be positive definite");
    const RatMat rows = mat_mul(s.basis, q);
    const LinSubspace w = annihilator(canonicalize(rows, s.ambient_dim));
    RatMat stacked = w.basis;
    stacked.insert(stacked.end(), s.basis.begin(), s.basis.end());
    if (rank(std::move(stacked)) != w.rank() + s.rank())
        throw std::logic_error("w_from_weights: result meets S nontrivially");
    return w;
}

SearchConfig default_search_config() {
    SearchConfig cfg;
    for (int k = 1; k <= 6; ++k) cfg.eps_schedule.push_back(Rat(1, int_pow(Int(10), k)));
    return cfg;
}

void validate_search_config(const SearchConfig& cfg) {
    if (cfg.eps_schedule.empty()) throw std::invalid_argument("search config: empty eps schedule");
    for (size_t i = 0; i < cfg.eps_schedule.size(); ++i) {
        if (cfg.eps_schedule[i] <= 0)
            throw std::invalid_argument("search config: eps must be positive");
        if (i > 0 && cfg.eps_schedule[i] >= cfg.eps_schedule[i - 1])
            throw std::invalid_argument("search config: eps schedule must decrease");
    }
    if (cfg.denom_bound == 0) throw std::invalid_argument("search config: zero denominator bound");
}

std::vector<LinSubspace> spanned_candidates(const std::vector<ProjPoint>& pts, size_t target_rank,
                                            size_t cap) {
    if (pts.empty() || target_rank == 0) return {};
    const size_t ambient = pts[0].ambient();
    std::vector<RatVec> pool;
    for (const auto& p : pts) pool.push_back(p.coords);
    // Pairwise sums and differences of canonical representatives: the
    // midpoint span of a point pair lands in one of the two, depending on
    // the representatives' signs.
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            pool.push_back(normalize_integer_vector(add(pts[i].coords, pts[j].coords)));
            RatVec diff = sub(pts[i].coords, pts[j].coords);
            if (!is_zero(diff)) pool.push_back(normalize_integer_vector(std::move(diff)));
        }

    std::vector<LinSubspace> out;
    std::set<RatMat> seen;
    if (pool.size() < target_rank) return out;
    std::vector<size_t> idx(target_rank);
    for (size_t i = 0; i < target_rank; ++i) idx[i] = i;
    do {
        RatMat rows;
        for (size_t i : idx) rows.push_back(pool[i]);
        LinSubspace s = canonicalize(rows, ambient);
        if (s.rank() != target_rank) continue;
        if (!seen.insert(s.basis).second) continue;
        out.push_back(std::move(s));
        if (out.size() >= cap) break;
    } while (next_subset(idx, pool.size()));
    return out;
}

std::vector<LinSubspace> random_subspace_candidates(size_t ambient, size_t target_rank,
                                                    size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<LinSubspace> out;
    std::set<RatMat> seen;
    size_t guard = 0;
    while (out.size() < count && guard++ < count * 20) {
        RatMat rows(target_rank, RatVec(ambient));
        for (auto& row : rows)
            for (auto& e : row) e = Rat(static_cast<long>(rng() % 13) - 6);
        LinSubspace s = canonicalize(rows, ambient);
        if (s.rank() != target_rank) continue;
        if (seen.insert(s.basis).second) out.push_back(std::move(s));
    }
    return out;
}

LinSubspace gram_map_candidate(const LinSubspace& v, const PointConfig& x,
                               const WeightVector& p, const Rat& eps) {
    std::vector<RatVec> lambdas;
    for (const auto& pt : x.points) lambdas.push_back(pt.coords);
    const RatMat q = gram_matrix(p, lambdas, eps);
    // The points act as forms on the dual space; the candidate is the
    // annihilator of the Q-orthogonal complement of annihilator(V).
    const LinSubspace dual_v = annihilator(v);
    return annihilator(w_from_weights(dual_v, q));
}

namespace {

struct BestTracker {
    SearchOutcome outcome;
    bool has = false;

    // Higher min_count wins; ties go to the lexicographically smaller basis.
    void offer(const LinSubspace& w, const Certificate& cert, size_t tried) {
        outcome.candidates_tried = tried;
        if (!has || cert.min_count > outcome.cert.min_count ||
            (cert.min_count == outcome.cert.min_count && lex_less(w.basis, outcome.W.basis))) {
            has = true;
            outcome.W = w;
            outcome.cert = cert;
            outcome.found = cert.pass;
        }
    }
};

WeightVector rationalized_weights(const std::vector<double>& p, uint64_t denom_bound) {
    RatVec w(p.size());
    Rat sum = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        const double v = p[i] < 0 ? 0.0 : p[i];
        w[i] = rationalize(v, std::min<uint64_t>(denom_bound, 100000));
        if (w[i] < 0) w[i] = 0;
        sum += w[i];
    }
    if (sum == 0) {
        for (auto& t : w) t = Rat(1, Int(w.size()));
    } else {
        for (auto& t : w) t /= sum;
    }
    return WeightVector{std::move(w)};
}

// Exact affine-chart candidates for the V = hyperplane-at-infinity case,
// where W is a point and min_piece_counts is the Tukey depth.
std::vector<LinSubspace> affine_point_candidates(const PointConfig& x, long r) {
    std::vector<RatVec> affine;
    for (const auto& p : x.points) {
        if (auto a = to_affine(p)) affine.push_back(std::move(*a));
    }
    std::vector<LinSubspace> out;
    if (affine.empty()) return out;
    const size_t d = x.d;

    auto push_point = [&](const RatVec& a) {
        out.push_back(span_of_point(point_from_affine(a)));
    };

    RatVec median(d), mean(d, Rat(0));
    for (size_t k = 0; k < d; ++k) {
        std::vector<Rat> col;
        for (const auto& a : affine) col.push_back(a[k]);
        std::sort(col.begin(), col.end());
        median[k] = col[(col.size() - 1) / 2];
    }
    for (const auto& a : affine) mean = add(mean, a);
    mean = scale(mean, Rat(1, Int(affine.size())));

    // Exact hill climb on depth from the better of median and mean.
    RatVec cur = tukey_depth(median, affine) >= tukey_depth(mean, affine) ? median : mean;
    push_point(median);
    push_point(mean);
    size_t cur_depth = tukey_depth(cur, affine);
    bool improved = true;
    size_t rounds = 0;
    while (improved && rounds++ < 40 && Int(cur_depth) < ceil_div(Int(affine.size()), Int(d + 1))) {
        improved = false;
        for (int k = 0; k < static_cast<int>(d) && !improved; ++k) {
            for (int expo = 0; expo <= 8 && !improved; ++expo) {
                for (int s : {+1, -1}) {
                    RatVec probe = cur;
                    probe[k] += Rat(s, int_pow(Int(2), expo));
                    const size_t dd = tukey_depth(probe, affine);
                    if (dd > cur_depth) {
                        cur = probe;
                        cur_depth = dd;
                        push_point(cur);
                        improved = true;
                        break;
                    }
                }
            }
        }
    }
    push_point(cur);
    (void)r;
    return out;
}

std::vector<LinSubspace> grid_hyperplane_candidates(size_t ambient) {
    // All projective normals with entries in [-2, 2].
    std::vector<LinSubspace> out;
    std::set<RatMat> seen;
    std::vector<long> e(ambient, -2);
    while (true) {
        RatVec v(ambient);
        bool nonzero = false;
        for (size_t i = 0; i < ambient; ++i) {
            v[i] = Rat(e[i]);
            nonzero |= e[i] != 0;
        }
        if (nonzero) {
            LinSubspace s = annihilator(canonicalize({v}, ambient));
            if (seen.insert(s.basis).second) out.push_back(std::move(s));
        }
        size_t k = 0;
        while (k < ambient && e[k] == 2) e[k++] = -2;
        if (k == ambient) break;
        ++e[k];
    }
    return out;
}

}  // namespace

SearchOutcome search_center_subspace(const LinSubspace& v, const PointConfig& x, long r,
                                     const SearchConfig& cfg) {
    validate_search_config(cfg);
    if (v.ambient_dim != x.d + 1)
        throw std::invalid_argument("search_center_subspace: ambient mismatch");
    const size_t target_rank = x.d - v.proj_dim();  // rank of W-hat, dim d-v
    if (target_rank == 0 || v.rank() == 0)
        throw std::invalid_argument("search_center_subspace: inconsistent dimensions");

    EngineOptions opts{cfg.strict_disjoint};
    BestTracker best;
    size_t tried = 0;
    std::set<RatMat> seen;

    auto consider = [&](const LinSubspace& w) -> bool {
        if (w.rank() != target_rank) return false;
        if (!seen.insert(w.basis).second) return false;
        ++tried;
        const Certificate cert = verify_center_subspace(v, w, x, r, opts);
        best.offer(w, cert, tried);
        return cert.pass;
    };
    // Candidates are generated in a fixed order, so taking the first pass is
    // reproducible.
    auto scan_stage = [&](const std::vector<LinSubspace>& stage) -> bool {
        for (const auto& w : stage)
            if (consider(w)) return true;
        return false;
    };

    // Stage 0: exact affine-chart candidates when V is the hyperplane at
    // infinity (the classical center point regime).
    if (v == hyperplane_at_infinity(x.d) && scan_stage(affine_point_candidates(x, r)))
        return best.outcome;

    // Stage 1: subspaces spanned by point subsets and pairwise sums.
    if (scan_stage(spanned_candidates(x.points, target_rank, cfg.candidate_cap)))
        return best.outcome;

    // Stage 2: weight-space Gram candidates with the epsilon schedule.
    std::mt19937_64 rng(cfg.seed);
    const size_t n = x.size();
    for (size_t start = 0; start < cfg.multistart; ++start) {
        std::vector<double> p(n, 1.0 / static_cast<double>(n));
        if (start > 0) {
            double sum = 0;
            for (auto& t : p) {
                t = -std::log(std::max(1e-12, (rng() >> 11) * 0x1.0p-53));
                sum += t;
            }
            for (auto& t : p) t /= sum;
        }
        for (const Rat& eps : cfg.eps_schedule) {
            auto eval = [&](const std::vector<double>& weights) -> long {
                const WeightVector wv = rationalized_weights(weights, cfg.denom_bound);
                const LinSubspace w = gram_map_candidate(v, x, wv, eps);
                if (w.rank() != target_rank) return -1;
                if (!seen.insert(w.basis).second) return -1;
                ++tried;
                const Certificate cert = verify_center_subspace(v, w, x, r, opts);
                best.offer(w, cert, tried);
                return cert.min_count;
            };
            long cur = eval(p);
            if (best.outcome.found) return best.outcome;
            for (size_t it = 0; it < cfg.max_iterations; ++it) {
                const size_t i = rng() % n, j = rng() % n;
                if (i == j || p[i] <= 1e-9) continue;
                const double frac = 1.0 / static_cast<double>(2 + (it % 3));
                std::vector<double> q = p;
                const double delta = q[i] * frac;
                q[i] -= delta;
                q[j] += delta;
                const long score = eval(q);
                if (best.outcome.found) return best.outcome;
                if (score > cur) {
                    cur = score;
                    p = std::move(q);
                }
            }
        }
    }

    // Stage 3: small grid over hyperplane normals (when W is a hyperplane),
    // then seeded random subspaces.
    if (target_rank == x.d && scan_stage(grid_hyperplane_candidates(x.d + 1)))
        return best.outcome;
    if (scan_stage(random_subspace_candidates(x.d + 1, target_rank, cfg.random_subspace_budget,
                                              cfg.seed + 1)))
        return best.outcome;

    best.outcome.notes = "no passing candidate found; best certificate attached";
    return best.outcome;
}

}  // namespace projtv
