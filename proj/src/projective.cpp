#include "projtv/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace projtv {

ProjPoint make_point(RatVec homogeneous) {
    if (homogeneous.empty()) throw std::invalid_argument("make_point: empty coordinates");
    if (is_zero(homogeneous)) throw std::invalid_argument("make_point: zero vector");
    return ProjPoint{normalize_integer_vector(std::move(homogeneous))};
}

ProjPoint point_from_affine(const RatVec& affine) {
    RatVec h = affine;
    h.push_back(Rat(1));
    return make_point(std::move(h));
}

std::optional<RatVec> to_affine(const ProjPoint& p) {
    const Rat z = p.coords.back();
    if (z == 0) return std::nullopt;
    RatVec a(p.coords.begin(), p.coords.end() - 1);
    for (auto& c : a) c /= z;
    return a;
}

LinSubspace canonicalize(const RatMat& spanning, size_t ambient_dim) {
    if (ambient_dim == 0) throw std::invalid_argument("canonicalize: empty ambient dimension");
    RatMat m;
    for (const auto& row : spanning) {
        if (row.size() != ambient_dim)
            throw std::invalid_argument("canonicalize: row length mismatch");
        if (!is_zero(row)) m.push_back(row);
    }
    rref(m);
    return LinSubspace{ambient_dim, std::move(m)};
}

LinSubspace zero_subspace(size_t ambient_dim) { return LinSubspace{ambient_dim, {}}; }

LinSubspace full_space(size_t ambient_dim) {
    return LinSubspace{ambient_dim, identity(ambient_dim)};
}

LinSubspace span_of_point(const ProjPoint& p) {
    return canonicalize({p.coords}, p.coords.size());
}

LinSubspace annihilator(const LinSubspace& s) {
    if (s.rank() == 0) return full_space(s.ambient_dim);
    RatMat kb = kernel_basis(s.basis, s.ambient_dim);
    return canonicalize(kb, s.ambient_dim);
}

LinSubspace join(const LinSubspace& a, const LinSubspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("join: ambient mismatch");
    RatMat rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return canonicalize(rows, a.ambient_dim);
}

LinSubspace meet(const LinSubspace& a, const LinSubspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("meet: ambient mismatch");
    return annihilator(join(annihilator(a), annihilator(b)));
}

LinSubspace hyperplane_at_infinity(size_t d) {
    RatMat rows;
    for (size_t i = 0; i < d; ++i) {
        RatVec r(d + 1, Rat(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return canonicalize(rows, d + 1);
}

PointConfig make_config(size_t d, std::vector<ProjPoint> pts,
                        std::optional<std::vector<std::string>> colors) {
    for (const auto& p : pts)
        if (p.ambient() != d + 1)
            throw std::invalid_argument("make_config: point has wrong coordinate count");
    if (colors && colors->size() != pts.size())
        throw std::invalid_argument("make_config: colors length mismatch");
    return PointConfig{d, std::move(pts), std::move(colors)};
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

}  // namespace

GeneralPositionResult general_position(const PointConfig& x, const LinSubspace& v, size_t r) {
    if (r < 1) throw std::invalid_argument("general_position: r must be >= 1");
    if (r > x.size()) throw std::invalid_argument("general_position: r exceeds |X|");
    const size_t n = x.size();
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    do {
        RatMat rows = v.basis;
        for (size_t i : idx) rows.push_back(x.points[i].coords);
        if (rank(std::move(rows)) < x.d + 1) return {false, idx};
    } while (next_subset(idx, n));
    return {true, {}};
}

}  // namespace projtv
