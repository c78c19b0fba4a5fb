#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "projtv/centerpoint.hpp"

using namespace projtv;

namespace {

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("tukey depth on a line and in the plane") {
    CHECK(tukey_depth({Rat(1)}, {rv({0}), rv({1}), rv({2})}) == 2);
    CHECK(tukey_depth({Rat(0)}, {rv({0}), rv({1}), rv({2})}) == 1);

    // Triangle vertices, centroid has depth 1.
    const std::vector<RatVec> tri{rv({0, 0}), rv({3, 0}), rv({0, 3})};
    CHECK(tukey_depth({Rat(1), Rat(1)}, tri) == 1);

    // 3x3 integer grid: every closed half-plane through the center holds the
    // center itself plus one point of each antipodal pair, so the depth is 5
    // (frozen from the independent arc oracle).
    std::vector<RatVec> grid;
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 2; ++j) grid.push_back(rv({i, j}));
    CHECK(tukey_depth({Rat(1), Rat(1)}, grid) == 5);
    CHECK(oracles::brute_tukey_depth_2d({Rat(1), Rat(1)}, grid) == 5);

    CHECK(tukey_depth({Rat(5), Rat(5)}, {}) == 0);
    CHECK(tukey_depth({Rat(1), Rat(2)}, {rv({1, 2}), rv({1, 2})}) == 2);
}

TEST_CASE("tukey depth agrees with the planar arc oracle") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        const size_t n = 1 + rng() % 9;
        std::vector<RatVec> pts;
        for (size_t i = 0; i < n; ++i) pts.push_back(oracles::rand_affine_point(rng, 2, -6, 6));
        const RatVec c = oracles::rand_affine_point(rng, 2, -6, 6);
        CHECK(tukey_depth(c, pts) == oracles::brute_tukey_depth_2d(c, pts));
    }
}

TEST_CASE("classical center point") {
    const DepthPoint median = classical_center_point({rv({0}), rv({1}), rv({2})}, 1);
    CHECK(median.point == rv({1}));
    CHECK(median.depth == 2);

    const DepthPoint square =
        classical_center_point({rv({1, 1}), rv({-1, 1}), rv({1, -1}), rv({-1, -1})}, 2);
    CHECK(square.depth >= 2);
    CHECK(tukey_depth(square.point, {rv({1, 1}), rv({-1, 1}), rv({1, -1}), rv({-1, -1})}) ==
          square.depth);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 25; ++t) {
        const size_t n = 4 + rng() % 5;
        std::vector<RatVec> pts;
        for (size_t i = 0; i < n; ++i) pts.push_back(oracles::rand_affine_point(rng, 2, -8, 8));
        const DepthPoint c = classical_center_point(pts, 2);
        // The postcondition is asserted internally; re-check via the oracle.
        CHECK(Int(oracles::brute_tukey_depth_2d(c.point, pts)) >=
              ceil_div(Int(n), Int(3)));
    }
    // A 7-point generic configuration has a point of depth >= 3.
    std::vector<RatVec> seven{rv({0, 0}),  rv({5, 1}),  rv({2, 7}), rv({-3, 4}),
                              rv({-5, -2}), rv({1, -6}), rv({4, -3})};
    CHECK(classical_center_point(seven, 2).depth >= 3);
}

TEST_CASE("min ray crossings") {
    // Two points on a line around c: either ray crosses exactly one.
    CHECK(min_ray_crossings({Rat(1)}, {{rv({1}), Rat(0)}, {rv({1}), Rat(2)}}) == 1);

    // Triangle lines x=0, y=0, x+y=2 with c strictly inside.
    const std::vector<AffineHyperplane> tri{
        {rv({1, 0}), Rat(0)}, {rv({0, 1}), Rat(0)}, {rv({1, 1}), Rat(2)}};
    CHECK(min_ray_crossings({Rat(1, 2), Rat(1, 2)}, tri) == 1);

    // c on one hyperplane: that one counts for every direction.
    CHECK(min_ray_crossings({Rat(0), Rat(5)}, {{rv({1, 0}), Rat(0)}}) == 1);

    // All hyperplanes through c: every ray crosses all of them at t = 0.
    const std::vector<AffineHyperplane> pencil{
        {rv({1, 0}), Rat(1)}, {rv({0, 1}), Rat(2)}, {rv({1, 1}), Rat(3)}};
    CHECK(min_ray_crossings({Rat(1), Rat(2)}, pencil) == 3);

    CHECK_THROWS_AS(min_ray_crossings({Rat(0), Rat(0)}, {{rv({0, 0}), Rat(1)}}),
                    std::invalid_argument);
}

TEST_CASE("dual center point search") {
    // Three generic lines: some point attains at least ceil(3/3) = 1.
    const std::vector<AffineHyperplane> tri{
        {rv({1, 0}), Rat(0)}, {rv({0, 1}), Rat(0)}, {rv({1, 1}), Rat(2)}};
    const DualCenterResult r = dual_center_point_search(tri, 2);
    CHECK(r.min_crossings >= 1);
    CHECK(min_ray_crossings(r.point, tri) == r.min_crossings);

    // Single hyperplane in the plane: value 1 on it, 0 off it.
    const DualCenterResult s = dual_center_point_search({{rv({2, 1}), Rat(3)}}, 2);
    CHECK(s.min_crossings == 1);

    // d+1 generic hyperplanes: simplex barycenter reaches the bound.
    const std::vector<AffineHyperplane> simplex{
        {rv({1, 0}), Rat(0)}, {rv({0, 1}), Rat(0)}, {rv({1, 1}), Rat(6)}};
    CHECK(dual_center_point_search(simplex, 2).min_crossings >= 1);

    std::mt19937_64 rng(71);
    for (int t = 0; t < 15; ++t) {
        std::vector<AffineHyperplane> hs;
        const size_t n = 3 + rng() % 3;
        for (size_t i = 0; i < n; ++i) {
            RatVec normal = oracles::rand_affine_point(rng, 2, -5, 5);
            if (is_zero(normal)) normal = rv({1, 0});
            hs.push_back({normal, Rat(oracles::rand_int(rng, -5, 5))});
        }
        // The search asserts the classical bound internally under general
        // position; just confirm the reported value re-verifies.
        const DualCenterResult dr = dual_center_point_search(hs, 2);
        CHECK(min_ray_crossings(dr.point, hs) == dr.min_crossings);
    }
}

TEST_CASE("gram matrix examples") {
    const WeightVector one = make_weights({Rat(1)});
    const RatMat q = gram_matrix(one, {rv({0, 1, 0})}, Rat(1));
    CHECK(q == RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});

    // Weight concentrated on one form.
    const WeightVector conc = make_weights({Rat(1), Rat(0)});
    const RatMat q2 = gram_matrix(conc, {rv({1, 0, 0}), rv({0, 0, 1})}, Rat(2));
    CHECK(q2[0][0] == 3);
    CHECK(q2[1][1] == 2);
    CHECK(q2[2][2] == 2);

    // Two orthonormal forms with weights 1/2 each and eps = 1: eigenvalues
    // 3/2 on their span and 1 on the complement.
    const WeightVector half = make_weights({Rat(1, 2), Rat(1, 2)});
    const RatMat q3 = gram_matrix(half, {rv({1, 0, 0}), rv({0, 1, 0})}, Rat(1));
    CHECK(mat_vec(q3, rv({1, 0, 0})) == scale(rv({1, 0, 0}), Rat(3, 2)));
    CHECK(mat_vec(q3, rv({0, 0, 1})) == rv({0, 0, 1}));

    CHECK_THROWS_AS(gram_matrix(one, {rv({0, 1, 0})}, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(gram_matrix(one, {rv({0, 0, 0})}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_weights({Rat(1, 2), Rat(1, 3)}), std::invalid_argument);
}

TEST_CASE("w_from_weights") {
    const LinSubspace v1 = canonicalize({{Rat(1), Rat(0), Rat(0)}}, 3);
    CHECK(w_from_weights(v1, identity(3)) == annihilator(v1));

    RatMat diag{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    CHECK(w_from_weights(v1, diag) ==
          canonicalize({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3));

    const LinSubspace v2 = canonicalize({{Rat(1), Rat(1), Rat(0)}}, 3);
    const LinSubspace w2 = w_from_weights(v2, diag);
    CHECK(w2 == canonicalize({{Rat(2), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3));

    RatMat singular{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    CHECK_THROWS_AS(w_from_weights(v1, singular), std::invalid_argument);

    // Trivial intersection with the argument for random positive definite Q.
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        RatMat b(2, RatVec(4));
        for (auto& row : b)
            for (auto& e : row) e = Rat(oracles::rand_int(rng, -3, 3));
        const LinSubspace s = canonicalize(b, 4);
        if (s.rank() == 0) continue;
        // Q = M^T M + I is positive definite.
        RatMat m(4, RatVec(4));
        for (auto& row : m)
            for (auto& e : row) e = Rat(oracles::rand_int(rng, -2, 2));
        RatMat q = mat_mul(transpose(m), m);
        for (size_t i = 0; i < 4; ++i) q[i][i] += 1;
        const LinSubspace w = w_from_weights(s, q);
        CHECK(w.rank() == 4 - s.rank());
        CHECK(meet(w, s).rank() == 0);
    }
}

TEST_CASE("search: square with V at infinity finds the center") {
    const PointConfig square = make_config(
        2, {make_point({Rat(1), Rat(1), Rat(1)}), make_point({Rat(-1), Rat(1), Rat(1)}),
            make_point({Rat(1), Rat(-1), Rat(1)}), make_point({Rat(-1), Rat(-1), Rat(1)})});
    const SearchOutcome out =
        search_center_subspace(hyperplane_at_infinity(2), square, 2, default_search_config());
    CHECK(out.found);
    CHECK(out.cert.pass);
    CHECK(out.cert.min_count >= 2);
    CHECK(out.W.rank() == 1);
}

TEST_CASE("search: three points on a line find the median") {
    const PointConfig x = make_config(1, {point_from_affine({Rat(0)}), point_from_affine({Rat(1)}),
                                          point_from_affine({Rat(2)})});
    const LinSubspace v = hyperplane_at_infinity(1);
    const SearchOutcome out = search_center_subspace(v, x, 2, default_search_config());
    CHECK(out.found);
    CHECK(out.W == span_of_point(point_from_affine({Rat(1)})));
}

TEST_CASE("search: V a point in the plane, W a line") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 6; ++t) {
        std::vector<ProjPoint> pts;
        for (int i = 0; i < 9; ++i)
            pts.push_back(point_from_affine(oracles::rand_affine_point(rng, 2, -9, 9)));
        const PointConfig x = make_config(2, std::move(pts));
        const LinSubspace v = span_of_point(point_from_affine(oracles::rand_affine_point(rng, 2)));
        SearchConfig cfg = default_search_config();
        cfg.seed = 100 + t;
        const SearchOutcome out = search_center_subspace(v, x, 3, cfg);
        CHECK(out.found);
        CHECK(out.cert.min_count >= 3);
        CHECK(out.W.rank() == 2);
        // Exact re-verification from scratch.
        CHECK(verify_center_subspace(v, out.W, x, 3).pass);
    }
}

TEST_CASE("search config validation") {
    SearchConfig bad = default_search_config();
    bad.eps_schedule = {Rat(1, 10), Rat(1, 10)};
    CHECK_THROWS_AS(validate_search_config(bad), std::invalid_argument);
    bad.eps_schedule = {Rat(0)};
    CHECK_THROWS_AS(validate_search_config(bad), std::invalid_argument);
    bad.eps_schedule.clear();
    CHECK_THROWS_AS(validate_search_config(bad), std::invalid_argument);
}
