#include "projtv/lp.hpp"

#include <stdexcept>

namespace projtv {

namespace {

// Phase-1 tableau simplex: minimize the sum of artificial variables for
// {x >= 0 : A x = b}. Bland's rule guarantees termination. Returns the
// feasible x (artificials stripped) or nullopt.
std::optional<RatVec> phase1(RatMat a, RatVec b) {
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();
    for (size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("phase1: ragged matrix");
        if (b[i] < 0) {
            for (auto& c : a[i]) c = -c;
            b[i] = -b[i];
        }
    }
    if (m == 0) return RatVec(n, Rat(0));

    // Columns: n structural + m artificial, then the rhs.
    const size_t cols = n + m;
    RatMat t(m + 1, RatVec(cols + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = b[i];
    }
    // Objective row: z - sum(artificials); expressed in the artificial basis.
    for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    Rat obj = 0;
    for (size_t i = 0; i < m; ++i) obj += b[i];
    t[m][cols] = -obj;

    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](size_t pr, size_t pc) {
        const Rat inv = Rat(1) / t[pr][pc];
        for (size_t j = 0; j <= cols; ++j) t[pr][j] *= inv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rat f = t[i][pc];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j) {
            if (t[m][j] < 0) { enter = j; break; }  // Bland: smallest index
        }
        if (enter == cols) break;
        size_t leave = m;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rat cur = t[i][cols] / t[i][enter];
            const Rat best = t[leave][cols] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) throw std::logic_error("phase1: unbounded objective");
        pivot(leave, enter);
    }

    if (t[m][cols] != 0) return std::nullopt;  // optimum -sum(artificials) < 0

    RatVec x(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][cols];
    return x;
}

}  // namespace

std::optional<RatVec> lp_feasible_point(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lp_feasible_point: shape mismatch");
    return phase1(a, b);
}

std::optional<RatVec> strict_ineq_witness(const RatMat& rows, size_t dim) {
    if (dim == 0) throw std::invalid_argument("strict_ineq_witness: zero dimension");
    for (const auto& r : rows)
        if (r.size() != dim) throw std::invalid_argument("strict_ineq_witness: row size mismatch");
    if (rows.empty()) {
        RatVec u(dim, Rat(0));
        u[0] = 1;
        return u;
    }
    // u = p - q, p,q >= 0; row.u - s = 1 with slack s >= 0.
    const size_t m = rows.size();
    RatMat a(m, RatVec(2 * dim + m, Rat(0)));
    RatVec b(m, Rat(1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            a[i][j] = rows[i][j];
            a[i][dim + j] = -rows[i][j];
        }
        a[i][2 * dim + i] = -1;
    }
    const auto x = phase1(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    RatVec u(dim);
    for (size_t j = 0; j < dim; ++j) u[j] = (*x)[j] - (*x)[dim + j];
    return u;
}

bool hull_contains(const std::vector<RatVec>& hull_points, const RatVec& q) {
    if (hull_points.empty()) return false;
    const size_t d = q.size();
    const size_t m = hull_points.size();
    RatMat a(d + 1, RatVec(m));
    RatVec b(d + 1);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (hull_points[j].size() != d)
                throw std::invalid_argument("hull_contains: dimension mismatch");
            a[i][j] = hull_points[j][i];
        }
        b[i] = q[i];
    }
    for (size_t j = 0; j < m; ++j) a[d][j] = 1;
    b[d] = 1;
    return lp_feasible_point(a, b).has_value();
}

std::optional<RatVec> hulls_common_point(const std::vector<RatVec>& pa,
                                         const std::vector<RatVec>& pb) {
    if (pa.empty() || pb.empty()) return std::nullopt;
    const size_t d = pa[0].size();
    const size_t na = pa.size(), nb = pb.size();
    // sum lambda_i a_i - sum mu_j b_j = 0, sum lambda = 1, sum mu = 1.
    RatMat a(d + 2, RatVec(na + nb, Rat(0)));
    RatVec b(d + 2, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < na; ++j) a[i][j] = pa[j][i];
        for (size_t j = 0; j < nb; ++j) a[i][na + j] = -pb[j][i];
    }
    for (size_t j = 0; j < na; ++j) a[d][j] = 1;
    b[d] = 1;
    for (size_t j = 0; j < nb; ++j) a[d + 1][na + j] = 1;
    b[d + 1] = 1;
    const auto x = lp_feasible_point(a, b);
    if (!x) return std::nullopt;
    RatVec point(d, Rat(0));
    for (size_t j = 0; j < na; ++j)
        for (size_t i = 0; i < d; ++i) point[i] += (*x)[j] * pa[j][i];
    return point;
}

}  // namespace projtv
