#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "projtv/topology.hpp"

using namespace projtv;

TEST_CASE("tverberg_r formula") {
    CHECK(tverberg_r(Int(9), 2, 1) == 3);
    CHECK(tverberg_r(Int(4), 2, 0) == 2);
    // v = d-1 recovers the classical ceil(n/(d+1)).
    for (long d = 1; d <= 5; ++d)
        for (long n = 1; n <= 30; ++n)
            CHECK(tverberg_r(Int(n), d, d - 1) == ceil_div(Int(n), Int(d + 1)));
    CHECK_THROWS_AS(tverberg_r(Int(5), 2, 2), std::invalid_argument);
}

TEST_CASE("required_points") {
    CHECK(required_points(Int(2), Int(2)) == 4);
    CHECK(required_points(Int(7), Int(1)) == 1);
    CHECK(required_points(Int(4), Int(3)) == 11);
}

TEST_CASE("partition count lower bound") {
    CHECK(partition_count_lower_bound(2, 1, 2) == Rat(1));
    CHECK(partition_count_lower_bound(3, 1, 1) == Rat(9, 8));
    CHECK(partition_count_lower_bound(2, 2, 1) == Rat(32, 81));
    CHECK_THROWS_AS(partition_count_lower_bound(4, 1, 2), std::invalid_argument);
}

TEST_CASE("q-binomial at -1: recursion vs closed form") {
    CHECK(q_binomial_minus1(4, 2) == 2);
    CHECK(q_binomial_minus1(3, 1) == 1);
    CHECK(q_binomial_minus1(2, 1) == 0);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(q_binomial_minus1(n, k) == oracles::closed_form_qbinom_minus1(n, k));
    CHECK(euler_char_grassmannian(4, 2) == 2);
    CHECK(euler_char_grassmannian(5, 0) == 1);
    CHECK_THROWS_AS(q_binomial_minus1(3, 4), std::invalid_argument);
}

TEST_CASE("kummer criterion vs direct binomials") {
    CHECK_FALSE(kummer_nonzero_mod_p(Int(5), Int(2), 5));
    CHECK_FALSE(kummer_nonzero_mod_p(Int(4), Int(2), 3));
    CHECK(kummer_nonzero_mod_p(Int(17), Int(0), 3));
    for (unsigned n = 0; n <= 60; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned p : {2u, 3u, 5u, 7u})
                CHECK(kummer_nonzero_mod_p(Int(n), Int(k), p) ==
                      (oracles::direct_binom_mod_p(n, k, p) != 0));
    CHECK_THROWS_AS(kummer_nonzero_mod_p(Int(4), Int(2), 6), std::invalid_argument);
}

TEST_CASE("thm6 gate") {
    CHECK(thm6_condition(2, 0, 2).value);
    CHECK(thm6_condition(2, 1, 2).value);
    CHECK_FALSE(thm6_condition(1, 0, 2).value);
    const GateResult odd = thm6_condition(1, 0, 2);
    CHECK(odd.explanation.find("odd") != std::string::npos);
}

TEST_CASE("F2 polynomial arithmetic") {
    const F2Poly e1 = f2_var(2, 0), e2 = f2_var(2, 1);
    CHECK(f2_add(e1, e1).is_zero());
    const F2Poly s = f2_add(e1, e2);
    const F2Poly sq = f2_mul(s, s);
    // (e1+e2)^2 = e1^2 + e2^2 over the two-element field.
    CHECK(sq == f2_add(f2_mul(e1, e1), f2_mul(e2, e2)));
    CHECK(f2_pow(s, 2) == sq);
    CHECK(f2_pow(s, 0) == f2_one(2));
    CHECK(f2_str(f2_zero(3)) == "0");
}

TEST_CASE("coinvariant reduction basics") {
    const CoinvariantRing r2 = make_coinvariant_ring(2);
    // e1 + e2 is the first ideal generator.
    CHECK(coinvariant_reduce(elementary_symmetric(2, 1), r2).is_zero());
    // e1^2 reduces to 0: e1 = e2 modulo the ideal and e2^2 = h_2(e2) = 0.
    CHECK(coinvariant_reduce(f2_pow(f2_var(2, 0), 2), r2).is_zero());
    // e1 itself reduces to e2, nonzero.
    const F2Poly red = coinvariant_reduce(f2_var(2, 0), r2);
    CHECK(red == f2_var(2, 1));

    const CoinvariantRing r3 = make_coinvariant_ring(3);
    CHECK(coinvariant_reduce(elementary_symmetric(3, 3), r3).is_zero());
    // e1^2 e2 has a nonzero normal form (top-degree class survives).
    const F2Poly top = f2_mul(f2_pow(f2_var(3, 0), 2), f2_var(3, 1));
    CHECK_FALSE(coinvariant_reduce(top, r3).is_zero());
    CHECK_THROWS_AS(coinvariant_reduce(f2_var(2, 0), r3), std::invalid_argument);
}

TEST_CASE("coinvariant ring dimensions are n! with the factorial grading") {
    for (size_t n = 1; n <= 6; ++n) {
        const CoinvariantRing ring = make_coinvariant_ring(n);
        const auto dims = coinvariant_graded_dims(ring);
        Int total = 0;
        for (const auto& d : dims) total += d;
        CHECK(total == factorial(static_cast<unsigned>(n)));
        // Standard monomials exp(e_i) <= i-1 counted by degree agree.
        std::vector<Int> hist(dims.size(), 0);
        std::vector<unsigned> expv(n, 0);
        auto rec = [&](auto&& self, size_t i, unsigned deg) -> void {
            if (i == n) {
                ++hist[deg];
                return;
            }
            for (unsigned e = 0; e < i + 1; ++e) self(self, i + 1, deg + e);
        };
        rec(rec, 0, 0);
        CHECK(hist == dims);
    }
}

TEST_CASE("symmetric polynomials and the defining relation reduce to zero") {
    for (size_t n = 1; n <= 6; ++n) {
        const CoinvariantRing ring = make_coinvariant_ring(n);
        F2Poly rel = f2_one(n);  // prod (1 + e_i) - 1
        for (size_t i = 0; i < n; ++i) rel = f2_mul(rel, f2_add(f2_one(n), f2_var(n, i)));
        rel = f2_add(rel, f2_one(n));
        CHECK(coinvariant_reduce(rel, ring).is_zero());
        for (size_t k = 1; k <= n; ++k)
            CHECK(coinvariant_reduce(elementary_symmetric(n, k), ring).is_zero());
    }
}

TEST_CASE("flag condition worked cases") {
    CHECK(flag_condition(3, 1, 1, 1).value);  // m = 1 is the unit class
    const GateResult zero = flag_condition(1, 0, 0, 2);
    CHECK_FALSE(zero.value);  // e1 + e2 = 0 in the two-variable ring
    const GateResult e3 = flag_condition(2, 1, 1, 2);
    CHECK(e3.value);
    CHECK(e3.reduced_class == "e3");
    CHECK_THROWS_AS(flag_condition(2, 0, 0, 2), std::invalid_argument);  // no such flag
}

TEST_CASE("flag condition is monotone non-increasing in m") {
    for (long d = 1; d <= 4; ++d)
        for (long v = 0; v < d; ++v)
            for (long w = 0; w < d; ++w) {
                if ((d - v) + (d - w) > d + 1) continue;
                bool prev = true;
                for (long m = 1; m <= 4; ++m) {
                    const bool cur = flag_condition(d, v, w, m).value;
                    if (!prev) CHECK_FALSE(cur);
                    prev = cur;
                }
            }
}

TEST_CASE("thm4 gate") {
    CHECK(thm4_condition(2, 1, 1, 1, 3).value);  // m = 1 trivially true
    const GateResult g = thm4_condition(2, 1, 1, 2, 2);
    CHECK(g.value);
    CHECK(g.method == "cohomology computation");
    const GateResult u = thm4_condition(4, 2, 1, 2, 3);  // d-w = 3 odd, p = 3
    CHECK_FALSE(u.value);
    CHECK(u.method == "unverified");
    // p > 2 with even d-w: closed-form gate.
    const GateResult e = thm4_condition(5, 2, 3, 2, 3);
    CHECK(e.value);
    CHECK(e.method == "closed-form gate");
}
