#pragma once

// Independent test oracles. These deliberately avoid the library's cell
// enumeration and reduction machinery: the planar Tukey oracle works on
// boundary directions and their adjacent arcs directly, the binomial oracle
// is a Pascal table, the q-binomial oracle is the closed form.

#include <random>
#include <vector>

#include "projtv/linalg.hpp"
#include "projtv/projective.hpp"

namespace oracles {

using namespace projtv;

// Exact planar Tukey depth: every closed half-plane normal is one of the
// boundary directions rot90(x_i - c) (up to sign) or lies in an arc adjacent
// to one; all of those are evaluated exactly.
inline size_t brute_tukey_depth_2d(const RatVec& c, const std::vector<RatVec>& pts) {
    std::vector<RatVec> nonzero;
    size_t zeros = 0;
    for (const auto& p : pts) {
        RatVec v = sub(p, c);
        if (is_zero(v))
            ++zeros;
        else
            nonzero.push_back(std::move(v));
    }
    if (nonzero.empty()) return pts.size();
    size_t best = pts.size();
    auto count_at = [&](const RatVec& a) {
        size_t cnt = zeros;
        for (const auto& u : nonzero)
            if (dot(u, a) >= 0) ++cnt;
        return cnt;
    };
    auto count_arc = [&](const RatVec& a, const RatVec& v, int delta) {
        // Normals just delta-side of a (rotated toward delta * v).
        size_t cnt = zeros;
        for (const auto& u : nonzero) {
            const Rat t = dot(u, a);
            if (t > 0)
                ++cnt;
            else if (t == 0 && sgn(dot(u, v)) * delta > 0)
                ++cnt;
        }
        return cnt;
    };
    for (const auto& v : nonzero) {
        const RatVec a0{-v[1], v[0]};
        const RatVec a1{v[1], -v[0]};
        best = std::min(best, count_at(a0));
        best = std::min(best, count_at(a1));
        for (int delta : {+1, -1}) {
            best = std::min(best, count_arc(a0, v, delta));
            best = std::min(best, count_arc(a1, v, delta));
        }
    }
    return best;
}

inline unsigned direct_binom_mod_p(unsigned n, unsigned k, unsigned p) {
    std::vector<std::vector<unsigned>> row(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        row[i].assign(i + 1, 1u);
        for (unsigned j = 1; j < i; ++j) row[i][j] = (row[i - 1][j - 1] + row[i - 1][j]) % p;
    }
    return k <= n ? row[n][k] : 0u;
}

inline Int closed_form_qbinom_minus1(unsigned n, unsigned k) {
    if ((static_cast<unsigned long long>(k) * (n - k)) % 2 == 1) return 0;
    return binomial(Int(n / 2), Int(k / 2));
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline RatVec rand_affine_point(std::mt19937_64& rng, size_t d, long lo = -10, long hi = 10) {
    RatVec v(d);
    for (auto& x : v) x = Rat(rand_int(rng, lo, hi));
    return v;
}

inline bool planar_general_position(const std::vector<RatVec>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) return false;
            for (size_t k = j + 1; k < pts.size(); ++k) {
                const Rat det = (pts[j][0] - pts[i][0]) * (pts[k][1] - pts[i][1]) -
                                (pts[j][1] - pts[i][1]) * (pts[k][0] - pts[i][0]);
                if (det == 0) return false;
            }
        }
    return true;
}

}  // namespace oracles
