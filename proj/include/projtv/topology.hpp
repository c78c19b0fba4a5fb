#pragma once

// Arithmetic and mod-2 cohomological hypothesis gates: the r and point-count
// formulas, the partition-count lower bound, q-binomials at q = -1, Kummer's
// digit criterion, and nonvanishing checks in the coinvariant algebra
// F2[e_1..e_n] / (symmetric polynomials of positive degree).

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "projtv/rat.hpp"

namespace projtv {

/// Sparse multivariate polynomial over the two-element field: the monomial
/// set, addition being symmetric difference.
struct F2Poly {
    using Monomial = std::vector<unsigned>;  // exponent vector, one entry per variable
    size_t nvars = 0;
    std::set<Monomial> monomials;

    bool is_zero() const { return monomials.empty(); }
    bool operator==(const F2Poly& o) const {
        return nvars == o.nvars && monomials == o.monomials;
    }
};

F2Poly f2_zero(size_t nvars);
F2Poly f2_one(size_t nvars);
F2Poly f2_var(size_t nvars, size_t i);
F2Poly f2_add(const F2Poly& a, const F2Poly& b);
F2Poly f2_mul(const F2Poly& a, const F2Poly& b);
F2Poly f2_pow(const F2Poly& a, unsigned e);
std::string f2_str(const F2Poly& p);

/// Elementary symmetric polynomial e-combination sigma_k(x_1..x_n) over F2.
F2Poly elementary_symmetric(size_t n, size_t k);
/// Complete homogeneous symmetric polynomial of degree k in the trailing
/// variables x_{first}..x_{n-1} (0-based), inside n variables.
F2Poly complete_homogeneous_tail(size_t n, size_t first, size_t k);

/// The coinvariant algebra F2[e_1..e_n]/(sigma_1..sigma_n) with the division
/// basis {h_i(e_i..e_n)}: leading monomials e_i^i under lex e_1 > ... > e_n,
/// standard monomials exp(e_i) <= i-1, n! of them in total.
struct CoinvariantRing {
    size_t n = 0;
    std::vector<F2Poly> reduction_basis;  // reduction_basis[i-1] = h_i(e_i..e_n)
};

CoinvariantRing make_coinvariant_ring(size_t n);

/// Normal form modulo the symmetric ideal via multivariate division against
/// the reduction basis. Zero exactly on ideal members.
F2Poly coinvariant_reduce(const F2Poly& poly, const CoinvariantRing& ring);

/// Number of standard monomials of each degree (the graded dimensions).
std::vector<Int> coinvariant_graded_dims(const CoinvariantRing& ring);

/// r = ceil(n / ((d-v)(v+1) + 1)). Requires 0 <= v < d, n >= 1.
Int tverberg_r(const Int& n, long d, long v);

/// (D+1)(r-1) + 1.
Int required_points(const Int& D, const Int& r);

/// (1/(r-1)!) * (r/(l+1))^ceil((r-1)(d+1)/2) with r = p^l. p must be prime.
Rat partition_count_lower_bound(uint64_t p, unsigned l, long d);

/// Gaussian binomial coefficient evaluated at q = -1, by the recursion
/// b(n,k) = b(n-1,k-1) + (-1)^k b(n-1,k), b(n,0) = b(n,n) = 1.
Int q_binomial_minus1(unsigned n, unsigned k);

/// Euler characteristic of the real Grassmannian G(nplus1, kplus1).
Int euler_char_grassmannian(unsigned nplus1, unsigned kplus1);

/// C(n,k) != 0 mod p iff every base-p digit of k is <= the digit of n.
bool kummer_nonzero_mod_p(const Int& n, const Int& k, uint64_t p);

struct GateResult {
    bool value = false;
    std::string method;       // which clause decided
    std::string explanation;  // human-readable trace
    std::string reduced_class;  // for cohomology computations
};

/// D = (v+1)(d-v) even AND C(floor((d+1)/2), floor((v+1)/2)) nonzero mod p.
GateResult thm6_condition(long d, long v, uint64_t p);

/// Nonvanishing of (prod_{i<=d-v < j<=(d-v)+(d-w)} (e_i+e_j))^(m-1) in the
/// coinvariant algebra on d+1 variables. Requires (d-v)+(d-w) <= d+1.
GateResult flag_condition(long d, long v, long w, long m);

/// The transversal hypothesis gate: true via the closed form when p = 2,
/// m = 1, or d-w is even; for p = 2 additionally confirmed by reducing
/// (e_1...e_{d-w})^{(d-v)(m-1)} in the coinvariant algebra on v+1 variables.
GateResult thm4_condition(long d, long v, long w, long m, uint64_t p);

}  // namespace projtv
