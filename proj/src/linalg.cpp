#include "projtv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace projtv {

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec scale(const RatVec& v, const Rat& c) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatMat identity(size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat transpose(const RatMat& m) {
    if (m.empty()) return {};
    RatMat t(m[0].size(), RatVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMat r(n, RatVec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

std::vector<size_t> rref(RatMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pr = row;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        const Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size(), RatVec(cols, Rat(0)));
    return pivots;
}

size_t rank(RatMat m) { return rref(m).size(); }

RatMat kernel_basis(const RatMat& m, size_t cols) {
    RatMat red = m;
    for (const auto& r : red)
        if (r.size() != cols) throw std::invalid_argument("kernel_basis: column mismatch");
    const std::vector<size_t> pivots = rref(red);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;

    RatMat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][free];
        basis.push_back(normalize_integer_vector(std::move(v)));
    }
    return basis;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n || b.size() != n)
            throw std::invalid_argument("solve_square: shape mismatch");
        a[i].push_back(b[i]);
    }
    const auto pivots = rref(a);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

namespace {

RatVec clear_to_integers(RatVec v, bool force_positive_lead) {
    Int den_lcm = 1;
    for (const auto& x : v) {
        const Int d = rat_den(x);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    Int g = 0;
    bool any = false;
    int first_sign = 0;
    std::vector<Int> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = rat_num(v[i]) * (den_lcm / rat_den(v[i]));
        if (ints[i] != 0) {
            if (!any) first_sign = ints[i].sign();
            any = true;
            g = gcd(g, abs(ints[i]));
        }
    }
    if (!any) return v;
    if (force_positive_lead && first_sign < 0) g = -g;
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(ints[i] / g);
    return v;
}

}  // namespace

RatVec normalize_integer_vector(RatVec v) { return clear_to_integers(std::move(v), true); }

RatVec integer_direction(RatVec v) { return clear_to_integers(std::move(v), false); }

bool lex_less(const RatVec& a, const RatVec& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

bool lex_less(const RatMat& a, const RatMat& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (lex_less(a[i], b[i])) return true;
        if (lex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

std::optional<std::vector<Rat>> ldlt_pivots(RatMat m) {
    const size_t n = m.size();
    std::vector<Rat> pivots;
    pivots.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        if (m[k].size() != n) throw std::invalid_argument("ldlt_pivots: not square");
        const Rat piv = m[k][k];
        if (piv == 0) {
            // A zero diagonal with a nonzero off-diagonal residual blocks the
            // (unpivoted) factorization; an all-zero residual row just appends
            // zero pivots.
            bool residual = false;
            for (size_t j = k; j < n && !residual; ++j)
                for (size_t i = k; i < n; ++i)
                    if (m[j][i] != 0) { residual = true; break; }
            if (residual) return std::nullopt;
            for (size_t j = k; j < n; ++j) pivots.push_back(Rat(0));
            return pivots;
        }
        pivots.push_back(piv);
        for (size_t i = k + 1; i < n; ++i) {
            const Rat f = m[i][k] / piv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return pivots;
}

bool is_positive_definite(const RatMat& m) {
    const auto piv = ldlt_pivots(m);
    if (!piv) return false;
    for (const auto& p : *piv)
        if (p <= 0) return false;
    return true;
}

}  // namespace projtv
