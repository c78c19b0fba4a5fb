#include "projtv/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include "projtv/lp.hpp"

namespace projtv {

namespace {

void check_input(size_t k, const std::vector<RatVec>& vectors) {
    if (k == 0) throw std::invalid_argument("enumerate_open_cells: k must be >= 1");
    for (const auto& v : vectors)
        if (v.size() != k) throw std::invalid_argument("enumerate_open_cells: vector size mismatch");
}

std::vector<size_t> find_zero_support(const std::vector<RatVec>& vectors) {
    std::vector<size_t> zs;
    for (size_t i = 0; i < vectors.size(); ++i)
        if (is_zero(vectors[i])) zs.push_back(i);
    return zs;
}

SignVector signs_at(const std::vector<RatVec>& vectors, const RatVec& u,
                    const std::vector<size_t>& zs) {
    SignVector sv;
    sv.signs.resize(vectors.size());
    for (size_t i = 0; i < vectors.size(); ++i) sv.signs[i] = sgn(dot(vectors[i], u));
    sv.zero_support = zs;
    return sv;
}

std::vector<OpenCell> finalize(std::vector<OpenCell> cells) {
    std::sort(cells.begin(), cells.end(),
              [](const OpenCell& a, const OpenCell& b) { return a.sv < b.sv; });
    return cells;
}

RatVec unit(size_t k, size_t j) {
    RatVec u(k, Rat(0));
    u[j] = 1;
    return u;
}

// k == 2: the open cells are the angular sectors between consecutive
// boundary directions. Exact angle order: half-plane split, then cross sign.
std::vector<OpenCell> cells_planar(const std::vector<RatVec>& vectors,
                                   const std::vector<size_t>& zs) {
    std::vector<RatVec> dirs;  // boundary directions of all lines a_i . u = 0
    for (const auto& a : vectors) {
        if (is_zero(a)) continue;
        RatVec w{-a[1], a[0]};
        dirs.push_back(integer_direction(w));
        dirs.push_back(integer_direction(RatVec{a[1], -a[0]}));
    }
    auto upper = [](const RatVec& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    auto cross = [](const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; };
    std::sort(dirs.begin(), dirs.end(), [&](const RatVec& a, const RatVec& b) {
        const bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        const Rat c = cross(a, b);
        if (c != 0) return c > 0;
        return false;
    });
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    std::vector<OpenCell> cells;
    if (dirs.empty()) return cells;
    if (dirs.size() == 2) {
        // One distinct line: the two open half-planes; a_i itself is interior.
        RatVec a;
        for (const auto& v : vectors)
            if (!is_zero(v)) { a = v; break; }
        for (const RatVec& u : {a, scale(a, Rat(-1))})
            cells.push_back({signs_at(vectors, u, zs), integer_direction(u)});
        return cells;
    }
    for (size_t j = 0; j < dirs.size(); ++j) {
        const RatVec& d1 = dirs[j];
        const RatVec& d2 = dirs[(j + 1) % dirs.size()];
        const RatVec u = integer_direction(add(d1, d2));  // interior: sectors are < pi
        cells.push_back({signs_at(vectors, u, zs), u});
    }
    return cells;
}

std::vector<OpenCell> cells_lp(size_t k, const std::vector<RatVec>& vectors,
                               const std::vector<size_t>& zs) {
    std::vector<size_t> nz;
    for (size_t i = 0; i < vectors.size(); ++i)
        if (!is_zero(vectors[i])) nz.push_back(i);

    struct Partial {
        std::vector<int> signs;  // over nz prefix
        RatVec witness;
    };
    std::vector<Partial> partial{{{}, unit(k, 0)}};
    RatMat constraint_rows;  // reused buffer

    for (size_t step = 0; step < nz.size(); ++step) {
        const RatVec& a = vectors[nz[step]];
        std::vector<Partial> next;
        for (const auto& cell : partial) {
            const Rat t = dot(a, cell.witness);
            const int free_sign = sgn(t);
            for (int s : {+1, -1}) {
                if (s == free_sign) {
                    Partial p = cell;
                    p.signs.push_back(s);
                    next.push_back(std::move(p));
                    continue;
                }
                constraint_rows.clear();
                for (size_t j = 0; j <= step; ++j) {
                    const int sj = j < step ? cell.signs[j] : s;
                    constraint_rows.push_back(scale(vectors[nz[j]], Rat(sj)));
                }
                auto u = strict_ineq_witness(constraint_rows, k);
                if (!u) continue;
                Partial p;
                p.signs = cell.signs;
                p.signs.push_back(s);
                p.witness = std::move(*u);
                next.push_back(std::move(p));
            }
        }
        partial = std::move(next);
    }

    std::vector<OpenCell> cells;
    cells.reserve(partial.size());
    for (auto& p : partial) {
        SignVector sv;
        sv.signs.assign(vectors.size(), 0);
        for (size_t j = 0; j < nz.size(); ++j) sv.signs[nz[j]] = p.signs[j];
        sv.zero_support = zs;
        cells.push_back({std::move(sv), integer_direction(std::move(p.witness))});
    }
    return cells;
}

}  // namespace

std::vector<OpenCell> enumerate_open_cells(size_t k, const std::vector<RatVec>& vectors) {
    check_input(k, vectors);
    const auto zs = find_zero_support(vectors);
    if (zs.size() == vectors.size()) {
        // Empty arrangement: one all-zero sign vector, any nonzero direction.
        return {{SignVector{std::vector<int>(vectors.size(), 0), zs}, unit(k, 0)}};
    }
    if (k == 1) {
        std::vector<OpenCell> cells;
        for (const Rat& u1 : {Rat(1), Rat(-1)})
            cells.push_back({signs_at(vectors, {u1}, zs), {u1}});
        return finalize(std::move(cells));
    }
    if (k == 2) return finalize(cells_planar(vectors, zs));
    return finalize(cells_lp(k, vectors, zs));
}

std::vector<OpenCell> enumerate_open_cells_lp(size_t k, const std::vector<RatVec>& vectors) {
    check_input(k, vectors);
    const auto zs = find_zero_support(vectors);
    if (zs.size() == vectors.size())
        return {{SignVector{std::vector<int>(vectors.size(), 0), zs}, unit(k, 0)}};
    return finalize(cells_lp(k, vectors, zs));
}

}  // namespace projtv
