#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "projtv/lp.hpp"
#include "projtv/tverberg.hpp"

using namespace projtv;

namespace {

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

PointConfig square_config() {
    return make_config(2, {make_point({Rat(1), Rat(1), Rat(1)}),
                           make_point({Rat(-1), Rat(1), Rat(1)}),
                           make_point({Rat(1), Rat(-1), Rat(1)}),
                           make_point({Rat(-1), Rat(-1), Rat(1)})});
}

}  // namespace

TEST_CASE("radon partition of the square splits the diagonals") {
    const std::vector<RatVec> square{rv({1, 1}), rv({-1, -1}), rv({1, -1}), rv({-1, 1})};
    const RadonResult r = radon_partition(square, 2);
    CHECK(r.common_point == rv({0, 0}));
    // The positive class is one diagonal.
    std::set<std::set<size_t>> parts;
    for (const auto& p : r.partition.parts) parts.insert(std::set<size_t>(p.begin(), p.end()));
    CHECK(parts == std::set<std::set<size_t>>{{0, 1}, {2, 3}});
}

TEST_CASE("radon partition: triangle plus interior point") {
    const std::vector<RatVec> pts{rv({0, 0}), rv({6, 0}), rv({0, 6}), rv({1, 1})};
    const RadonResult r = radon_partition(pts, 2);
    // One part is the interior point alone.
    bool seen_singleton = false;
    for (const auto& p : r.partition.parts)
        if (p == std::vector<size_t>{3}) seen_singleton = true;
    CHECK(seen_singleton);
    CHECK(r.common_point == rv({1, 1}));
}

TEST_CASE("radon partition on a line with four points") {
    const std::vector<RatVec> pts{rv({0}), rv({1}), rv({2}), rv({3})};
    const RadonResult r = radon_partition(pts, 1);
    validate_partition(r.partition, 4);
    // Both hulls contain the common point, which lies in [1, 2].
    for (const auto& part : r.partition.parts) {
        std::vector<RatVec> hull;
        for (size_t i : part) hull.push_back(pts[i]);
        CHECK(hull_contains(hull, r.common_point));
    }
    CHECK(r.common_point[0] >= 1);
    CHECK(r.common_point[0] <= 2);
    CHECK_THROWS_AS(radon_partition({rv({0}), rv({1})}, 1), std::invalid_argument);
}

TEST_CASE("radon partitions of random planar 4-point sets pass the hull oracle") {
    std::mt19937_64 rng(83);
    int done = 0;
    while (done < 100) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(oracles::rand_affine_point(rng, 2));
        if (!oracles::planar_general_position(pts)) continue;
        const RadonResult r = radon_partition(pts, 2);
        validate_partition(r.partition, 4);
        for (const auto& part : r.partition.parts) {
            std::vector<RatVec> hull;
            for (size_t i : part) hull.push_back(pts[i]);
            CHECK(hull_contains(hull, r.common_point));
        }
        ++done;
    }
}

TEST_CASE("stirling2 sanity") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(3, 4) == 0);
    CHECK(stirling2(12, 2) == 2047);
}

TEST_CASE("search_projective_tverberg on the square agrees with the radon oracle") {
    const PointConfig x = square_config();
    const TverbergOutcome out = search_projective_tverberg(hyperplane_at_infinity(2), x, 2,
                                                           default_search_config());
    REQUIRE(out.found);
    CHECK(out.cert.pass);
    // W must be the exact common point (0:0:1) for the square.
    CHECK(out.W == span_of_point(make_point({Rat(0), Rat(0), Rat(1)})));
    std::set<std::set<size_t>> parts;
    for (const auto& p : out.partition.parts) parts.insert(std::set<size_t>(p.begin(), p.end()));
    CHECK(parts == std::set<std::set<size_t>>{{0, 3}, {1, 2}});
}

TEST_CASE("search_projective_tverberg r=1 reduces to a center search") {
    const PointConfig x = square_config();
    const TverbergOutcome out =
        search_projective_tverberg(hyperplane_at_infinity(2), x, 1, default_search_config());
    CHECK(out.found);
    CHECK(out.partition.parts.size() == 1);
}

TEST_CASE("search_projective_tverberg with V a point and W a line") {
    // d = 2, v = 0: D = (d-v)(v+1) = 2, so r = 2 wants (2+1)(1)+1 = 4 points.
    std::mt19937_64 rng(89);
    for (int t = 0; t < 5; ++t) {
        std::vector<ProjPoint> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(point_from_affine(oracles::rand_affine_point(rng, 2, -7, 7)));
        const PointConfig x = make_config(2, std::move(pts));
        const LinSubspace v = span_of_point(point_from_affine(oracles::rand_affine_point(rng, 2)));
        SearchConfig cfg = default_search_config();
        cfg.seed = t;
        const TverbergOutcome out = search_projective_tverberg(v, x, 2, cfg);
        CHECK(out.found);
        CHECK(verify_tverberg_witness(v, out.W, x, out.partition).pass);
        CHECK(out.W.rank() == 2);
    }
}

TEST_CASE("radon equivalence: witness passes iff the common point is in both hulls") {
    std::mt19937_64 rng(97);
    const LinSubspace v = hyperplane_at_infinity(2);
    int done = 0;
    while (done < 200) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(oracles::rand_affine_point(rng, 2));
        if (!oracles::planar_general_position(pts)) continue;
        std::vector<ProjPoint> ppts;
        for (const auto& p : pts) ppts.push_back(point_from_affine(p));
        const PointConfig x = make_config(2, ppts);

        // A candidate split and candidate point c.
        PartitionWitness pw{{{0, static_cast<size_t>(1 + rng() % 3)}, {}}};
        for (size_t i = 1; i < 4; ++i)
            if (i != pw.parts[0][1]) pw.parts[1].push_back(i);
        const RatVec c = oracles::rand_affine_point(rng, 2, -3, 3);
        const LinSubspace w = span_of_point(point_from_affine(c));

        std::vector<RatVec> h1, h2;
        for (size_t i : pw.parts[0]) h1.push_back(pts[i]);
        for (size_t i : pw.parts[1]) h2.push_back(pts[i]);
        const bool lp_verdict = hull_contains(h1, c) && hull_contains(h2, c);
        const bool engine_verdict = verify_tverberg_witness(v, w, x, pw).pass;
        CHECK(lp_verdict == engine_verdict);
        ++done;
    }
}

TEST_CASE("count_valid_partitions on the square") {
    const PointConfig x = square_config();
    const LinSubspace v = hyperplane_at_infinity(2);
    const LinSubspace w = span_of_point(make_point({Rat(0), Rat(0), Rat(1)}));
    // Of the 7 two-part partitions only the diagonal one passes.
    CHECK(count_valid_partitions(v, w, x, 2) == 1);
    // r = 1: the single partition passes iff min count >= 1.
    CHECK(count_valid_partitions(v, w, x, 1) == 1);
    // r = n with separable singletons: none.
    CHECK(count_valid_partitions(v, w, x, 4) == 0);
    CHECK_THROWS_AS(count_valid_partitions(v, w, x, 2, 3), std::invalid_argument);
}

TEST_CASE("transversal shape warnings") {
    TransversalInstance inst;
    inst.d = 3;
    inst.v = 2;
    inst.w = 1;
    inst.p = 2;
    inst.V = canonicalize({{Rat(1), Rat(0), Rat(0), Rat(0)},
                           {Rat(0), Rat(1), Rat(0), Rat(0)},
                           {Rat(0), Rat(0), Rat(1), Rat(0)}},
                          4);
    std::mt19937_64 rng(101);
    for (int j = 0; j < 2; ++j) {
        std::vector<ProjPoint> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(point_from_affine(oracles::rand_affine_point(rng, 3, -5, 5)));
        inst.configs.push_back(make_config(3, std::move(pts)));
        inst.rs.push_back(2);
    }
    CHECK(transversal_shape_warnings(inst).empty());
    inst.rs[0] = 3;  // not a power of 2, and the size is off
    CHECK(transversal_shape_warnings(inst).size() == 2);
}

TEST_CASE("search_transversal m=2 in RP^3 on planted instances") {
    // d = 3, v = 2 (V a plane), w = 1 (W a line), r_j = 2, |X^j| = 4. At the
    // tight sizes a passing W must meet every part hull exactly, so the
    // instances are planted around a rational line: each part is a point
    // pair whose midpoint lies on that line.
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 5; ++trial) {
        TransversalInstance inst;
        inst.d = 3;
        inst.v = 2;
        inst.w = 1;
        inst.p = 2;
        inst.V = canonicalize({{Rat(1), Rat(0), Rat(0), Rat(0)},
                               {Rat(0), Rat(1), Rat(0), Rat(0)},
                               {Rat(0), Rat(0), Rat(1), Rat(0)}},
                              4);
        // The planted line: x = 1, y = 1 (direction e3).
        long z = -3;
        for (int j = 0; j < 2; ++j) {
            std::vector<ProjPoint> pts;
            for (int part = 0; part < 2; ++part) {
                RatVec delta{Rat(oracles::rand_int(rng, 1, 4)), Rat(oracles::rand_int(rng, -4, 4)),
                             Rat(oracles::rand_int(rng, -2, 2))};
                const RatVec center{Rat(1), Rat(1), Rat(z++)};
                pts.push_back(point_from_affine(add(center, delta)));
                pts.push_back(point_from_affine(sub(center, delta)));
            }
            inst.configs.push_back(make_config(3, std::move(pts)));
            inst.rs.push_back(2);
        }
        SearchConfig cfg = default_search_config();
        cfg.seed = trial;
        const TransversalOutcome out = search_transversal(inst, cfg);
        CHECK(out.gate.value);  // p = 2 regime
        REQUIRE(out.found);
        CHECK(out.W.rank() == 2);
        std::vector<std::pair<PointConfig, PartitionWitness>> pairs;
        for (size_t j = 0; j < 2; ++j) pairs.emplace_back(inst.configs[j], out.partitions[j]);
        CHECK(verify_transversal_witness(inst.V, out.W, pairs).pass);
    }
}

TEST_CASE("search_transversal m=1 delegates") {
    TransversalInstance inst;
    inst.d = 2;
    inst.v = 1;
    inst.w = 0;
    inst.p = 2;
    inst.V = hyperplane_at_infinity(2);
    inst.configs = {square_config()};
    inst.rs = {2};
    const TransversalOutcome out = search_transversal(inst, default_search_config());
    CHECK(out.found);
    CHECK(out.partitions.size() == 1);
    const TverbergOutcome direct =
        search_projective_tverberg(inst.V, inst.configs[0], 2, default_search_config());
    CHECK(out.W == direct.W);
}

TEST_CASE("rainbow transversal keeps colors separated") {
    std::mt19937_64 rng(107);
    PointConfig x = square_config();
    x.colors = std::vector<std::string>{"a", "a", "b", "b"};  // each color r-1 = 1.. twice
    // Colors appear at most r_j - 1 = 1 times per... here twice, so use the
    // relaxed check: returned parts never repeat a color.
    const TverbergOutcome out =
        search_projective_tverberg(hyperplane_at_infinity(2), x, 2, default_search_config(), true);
    if (out.found) {
        for (const auto& part : out.partition.parts) {
            std::set<std::string> used;
            for (size_t i : part) CHECK(used.insert((*x.colors)[i]).second);
        }
        CHECK(verify_tverberg_witness(hyperplane_at_infinity(2), out.W, x, out.partition, true)
                  .pass);
    }
}

TEST_CASE("search_both_subspaces in the plane") {
    // d = 2, v = 0: gate D = 2 even, C(1, 0) = 1 odd.
    std::mt19937_64 rng(109);
    std::vector<ProjPoint> p1, p2;
    for (int i = 0; i < 4; ++i) {
        p1.push_back(point_from_affine(oracles::rand_affine_point(rng, 2, -6, 6)));
        p2.push_back(point_from_affine(oracles::rand_affine_point(rng, 2, -6, 6)));
    }
    const PointConfig x1 = make_config(2, p1), x2 = make_config(2, p2);
    SearchConfig cfg = default_search_config();
    const BothOutcome out = search_both_subspaces(x1, x2, 2, 0, 2, 2, 2, cfg);
    CHECK(out.gate.value);
    REQUIRE(out.found);
    std::vector<std::pair<PointConfig, PartitionWitness>> pairs{{x1, out.partitions[0]},
                                                                {x2, out.partitions[1]}};
    CHECK(verify_transversal_witness(out.V, out.W, pairs).pass);
}

TEST_CASE("search_both_subspaces r=1 is trivial") {
    const PointConfig one1 = make_config(2, {make_point({Rat(1), Rat(0), Rat(1)})});
    const PointConfig one2 = make_config(2, {make_point({Rat(0), Rat(1), Rat(1)})});
    const BothOutcome out =
        search_both_subspaces(one1, one2, 2, 0, 1, 1, 2, default_search_config());
    CHECK(out.found);
}
