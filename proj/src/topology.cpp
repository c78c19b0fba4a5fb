#include "projtv/topology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace projtv {

F2Poly f2_zero(size_t nvars) { return F2Poly{nvars, {}}; }

F2Poly f2_one(size_t nvars) {
    F2Poly p{nvars, {}};
    p.monomials.insert(F2Poly::Monomial(nvars, 0));
    return p;
}

F2Poly f2_var(size_t nvars, size_t i) {
    if (i >= nvars) throw std::invalid_argument("f2_var: index out of range");
    F2Poly p{nvars, {}};
    F2Poly::Monomial m(nvars, 0);
    m[i] = 1;
    p.monomials.insert(std::move(m));
    return p;
}

namespace {

void toggle(std::set<F2Poly::Monomial>& s, F2Poly::Monomial m) {
    auto it = s.find(m);
    if (it == s.end())
        s.insert(std::move(m));
    else
        s.erase(it);
}

}  // namespace

F2Poly f2_add(const F2Poly& a, const F2Poly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("f2_add: variable-count mismatch");
    F2Poly r = a;
    for (const auto& m : b.monomials) toggle(r.monomials, m);
    return r;
}

F2Poly f2_mul(const F2Poly& a, const F2Poly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("f2_mul: variable-count mismatch");
    F2Poly r = f2_zero(a.nvars);
    for (const auto& ma : a.monomials) {
        for (const auto& mb : b.monomials) {
            F2Poly::Monomial m(a.nvars);
            for (size_t i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
            toggle(r.monomials, std::move(m));
        }
    }
    return r;
}

F2Poly f2_pow(const F2Poly& a, unsigned e) {
    F2Poly r = f2_one(a.nvars);
    F2Poly b = a;
    while (e) {
        if (e & 1u) r = f2_mul(r, b);
        b = f2_mul(b, b);
        e >>= 1u;
    }
    return r;
}

std::string f2_str(const F2Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& m : p.monomials) {
        if (!out.empty()) out += " + ";
        std::string term;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!term.empty()) term += "*";
            term += "e" + std::to_string(i + 1);
            if (m[i] > 1) term += "^" + std::to_string(m[i]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

F2Poly elementary_symmetric(size_t n, size_t k) {
    if (k > n) return f2_zero(n);
    F2Poly p = f2_zero(n);
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return f2_one(n);
    while (true) {
        F2Poly::Monomial m(n, 0);
        for (size_t i : idx) m[i] = 1;
        p.monomials.insert(std::move(m));
        size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return p;
}

F2Poly complete_homogeneous_tail(size_t n, size_t first, size_t k) {
    if (first >= n) throw std::invalid_argument("complete_homogeneous_tail: no variables");
    // h_k(x_first..x_{n-1}): all monomials of total degree k.
    F2Poly p = f2_zero(n);
    F2Poly::Monomial m(n, 0);
    // Recursive enumeration of compositions of k over the tail variables.
    auto rec = [&](auto&& self, size_t var, size_t remaining) -> void {
        if (var == n - 1) {
            m[var] = static_cast<unsigned>(remaining);
            toggle(p.monomials, m);
            m[var] = 0;
            return;
        }
        for (size_t e = 0; e <= remaining; ++e) {
            m[var] = static_cast<unsigned>(e);
            self(self, var + 1, remaining - e);
        }
        m[var] = 0;
    };
    rec(rec, first, k);
    return p;
}

CoinvariantRing make_coinvariant_ring(size_t n) {
    if (n == 0) throw std::invalid_argument("make_coinvariant_ring: n must be >= 1");
    CoinvariantRing ring;
    ring.n = n;
    for (size_t i = 1; i <= n; ++i)
        ring.reduction_basis.push_back(complete_homogeneous_tail(n, i - 1, i));
    return ring;
}

namespace {

// Leading monomial of h_i(e_i..e_n) under lex e_1 > ... > e_n is e_i^i, so a
// monomial is reducible iff exp(e_i) >= i for some i. Divide by the smallest
// such i.
bool reduction_step(std::set<F2Poly::Monomial>& monos, const CoinvariantRing& ring) {
    // Pick the lex-largest reducible monomial to keep the loop monotone.
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
        const auto& m = *it;
        for (size_t i = 1; i <= ring.n; ++i) {
            if (m[i - 1] < i) continue;
            // m = (m / e_i^i) * LM(g_i); replace by (m / e_i^i) * (g_i - LM).
            F2Poly::Monomial q = m;
            q[i - 1] -= static_cast<unsigned>(i);
            const F2Poly& g = ring.reduction_basis[i - 1];
            F2Poly::Monomial lead(ring.n, 0);
            lead[i - 1] = static_cast<unsigned>(i);
            monos.erase(std::next(it).base());
            for (const auto& gm : g.monomials) {
                if (gm == lead) continue;
                F2Poly::Monomial prod(ring.n);
                for (size_t t = 0; t < ring.n; ++t) prod[t] = q[t] + gm[t];
                toggle(monos, std::move(prod));
            }
            return true;
        }
    }
    return false;
}

}  // namespace

F2Poly coinvariant_reduce(const F2Poly& poly, const CoinvariantRing& ring) {
    if (poly.nvars != ring.n)
        throw std::invalid_argument("coinvariant_reduce: variable-count mismatch");
    F2Poly r = poly;
    while (reduction_step(r.monomials, ring)) {
    }
    return r;
}

std::vector<Int> coinvariant_graded_dims(const CoinvariantRing& ring) {
    // Generating polynomial prod_i (1 + q + ... + q^{i-1}).
    std::vector<Int> dims{1};
    for (size_t i = 1; i <= ring.n; ++i) {
        std::vector<Int> next(dims.size() + i - 1, 0);
        for (size_t a = 0; a < dims.size(); ++a)
            for (size_t b = 0; b < i; ++b) next[a + b] += dims[a];
        dims = std::move(next);
    }
    return dims;
}

Int tverberg_r(const Int& n, long d, long v) {
    if (v < 0 || v >= d) throw std::invalid_argument("tverberg_r: need 0 <= v < d");
    if (n < 1) throw std::invalid_argument("tverberg_r: need n >= 1");
    const Int denom = Int(d - v) * Int(v + 1) + 1;
    return ceil_div(n, denom);
}

Int required_points(const Int& D, const Int& r) { return (D + 1) * (r - 1) + 1; }

Rat partition_count_lower_bound(uint64_t p, unsigned l, long d) {
    if (!is_prime(p)) throw std::invalid_argument("partition_count_lower_bound: p not prime");
    if (l < 1 || d < 1)
        throw std::invalid_argument("partition_count_lower_bound: need l >= 1, d >= 1");
    const Int r = int_pow(Int(p), l);
    const Int e_num = (r - 1) * Int(d + 1);
    const Int e = ceil_div(e_num, Int(2));
    const unsigned exp = e.convert_to<unsigned>();
    const Int rm1 = r - 1;
    const Rat base = Rat(r, Int(l + 1));
    Rat pw = 1;
    for (unsigned i = 0; i < exp; ++i) pw *= base;
    Int fact = 1;
    for (Int i = 2; i <= rm1; ++i) fact *= i;
    return pw / Rat(fact);
}

Int q_binomial_minus1(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("q_binomial_minus1: k out of range");
    std::vector<std::vector<Int>> b(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        b[i].assign(i + 1, 0);
        b[i][0] = 1;
        b[i][i] = 1;
        for (unsigned j = 1; j < i; ++j)
            b[i][j] = b[i - 1][j - 1] + (j % 2 == 0 ? b[i - 1][j] : -b[i - 1][j]);
    }
    return b[n][k];
}

Int euler_char_grassmannian(unsigned nplus1, unsigned kplus1) {
    return q_binomial_minus1(nplus1, kplus1);
}

bool kummer_nonzero_mod_p(const Int& n, const Int& k, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("kummer_nonzero_mod_p: p not prime");
    if (k < 0 || k > n) throw std::invalid_argument("kummer_nonzero_mod_p: k out of range");
    Int nn = n, kk = k;
    while (kk > 0) {
        if (kk % p > nn % p) return false;
        nn /= p;
        kk /= p;
    }
    return true;
}

GateResult thm6_condition(long d, long v, uint64_t p) {
    if (v < 0 || v >= d) throw std::invalid_argument("thm6_condition: need 0 <= v < d");
    GateResult g;
    const long D = (v + 1) * (d - v);
    const Int top = Int((d + 1) / 2), bot = Int((v + 1) / 2);
    if (D % 2 != 0) {
        g.value = false;
        g.method = "parity";
        g.explanation = "D = (v+1)(d-v) = " + std::to_string(D) + " is odd";
        return g;
    }
    const bool kum = kummer_nonzero_mod_p(top, bot, p);
    g.value = kum;
    g.method = "kummer";
    g.explanation = "D = " + std::to_string(D) + " even; C(" + top.str() + "," + bot.str() +
                    ") is " + (kum ? "nonzero" : "zero") + " mod " + std::to_string(p);
    return g;
}

GateResult flag_condition(long d, long v, long w, long m) {
    if (d < 1 || v < 0 || v >= d || w < 0 || w >= d || m < 1)
        throw std::invalid_argument("flag_condition: parameters out of range");
    const long vh = d - v, wh = d - w;
    if (vh + wh > d + 1)
        throw std::invalid_argument(
            "flag_condition: (d-v) + (d-w) exceeds d+1; no such flag of subspaces");
    GateResult g;
    const long D = vh * wh;
    const size_t n = static_cast<size_t>(d + 1);
    if (m == 1) {
        g.value = true;
        g.method = "trivial";
        g.explanation = "m = 1: the empty power is the unit class";
        g.reduced_class = "1";
        return g;
    }
    const long degree = D * (m - 1);
    const long top_degree = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
    if (degree > top_degree) {
        g.value = false;
        g.method = "degree";
        g.explanation = "class degree " + std::to_string(degree) + " exceeds top degree " +
                        std::to_string(top_degree);
        g.reduced_class = "0";
        return g;
    }
    F2Poly prod = f2_one(n);
    for (long i = 1; i <= vh; ++i)
        for (long j = vh + 1; j <= vh + wh; ++j)
            prod = f2_mul(prod, f2_add(f2_var(n, static_cast<size_t>(i - 1)),
                                       f2_var(n, static_cast<size_t>(j - 1))));
    const CoinvariantRing ring = make_coinvariant_ring(n);
    const F2Poly reduced = coinvariant_reduce(f2_pow(prod, static_cast<unsigned>(m - 1)), ring);
    g.value = !reduced.is_zero();
    g.method = "cohomology computation";
    g.reduced_class = f2_str(reduced);
    g.explanation = "reduced class of the pair product to the power m-1 is " + g.reduced_class;
    return g;
}

GateResult thm4_condition(long d, long v, long w, long m, uint64_t p) {
    if (d < 1 || v < 0 || v >= d || w < 0 || w >= d || m < 1)
        throw std::invalid_argument("thm4_condition: parameters out of range");
    GateResult g;
    const bool regime = (w == m * (d - v) - 1);
    std::string note = regime ? "" : " [outside the w = m(d-v)-1 regime]";
    if (m == 1) {
        g.value = true;
        g.method = "closed-form gate";
        g.explanation = "m = 1: condition holds trivially" + note;
        return g;
    }
    const bool gate = (p == 2) || ((d - w) % 2 == 0);
    if (!gate) {
        g.value = false;
        g.method = "unverified";
        g.explanation = "outside the proven cases (p != 2, m > 1, d-w odd)" + note;
        return g;
    }
    if (p != 2) {
        g.value = true;
        g.method = "closed-form gate";
        g.explanation = "d-w = " + std::to_string(d - w) + " is even" + note;
        return g;
    }
    // p = 2: confirm by reducing (e_1...e_k)^{(d-v)(m-1)} with k = d-w in the
    // coinvariant algebra on v+1 variables, when the subspace model fits.
    g.value = true;
    g.method = "closed-form gate";
    g.explanation = "p = 2" + note;
    const long k = d - w;
    if (k >= 1 && k <= v + 1) {
        const size_t n = static_cast<size_t>(v + 1);
        F2Poly cls = f2_one(n);
        for (long i = 0; i < k; ++i) cls = f2_mul(cls, f2_var(n, static_cast<size_t>(i)));
        const unsigned e = static_cast<unsigned>((d - v) * (m - 1));
        const CoinvariantRing ring = make_coinvariant_ring(n);
        const F2Poly reduced = coinvariant_reduce(f2_pow(cls, e), ring);
        g.value = !reduced.is_zero();
        g.method = "cohomology computation";
        g.reduced_class = f2_str(reduced);
        g.explanation = "p = 2; top class power reduces to " + g.reduced_class + note;
    }
    return g;
}

}  // namespace projtv
