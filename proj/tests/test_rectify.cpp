#include <stdexcept>
#include <random>

#include "cyc/addcomb.hpp"
#include "cyc/rectify.hpp"
#include "doctest.h"

using namespace cyc;

namespace {
CyclicSet mk(u64 n, std::vector<u64> e) { return CyclicSet(n, std::move(e)); }
} // namespace

TEST_SUITE_BEGIN("rectify");

TEST_CASE("sum pattern classes") {
    SumPattern p1 = sum_pattern(mk(5, {0, 1, 2}));
    CHECK(p1.base_size == 3);
    CHECK(p1.classes.size() == 5); // one doubleton, four singletons
    CHECK(p1.same_relation(sum_pattern_integers({0, 1, 2})));

    SumPattern p2 = sum_pattern(mk(9, {0}));
    CHECK(p2.classes.size() == 1);

    SumPattern p3 = sum_pattern(mk(4, {0, 1, 2}));
    CHECK(p3.classes.size() == 4); // (0,0)~(2,2), (0,2)~(1,1), two singles
    CHECK_FALSE(p3.same_relation(sum_pattern_integers({0, 1, 2})));
}

TEST_CASE("exact rectifiability decisions") {
    RectifyVerdict r1 = is_rectifiable(mk(5, {0, 1, 2}));
    CHECK(r1.rectifiable);
    REQUIRE(r1.integer_model);
    CHECK(sum_pattern_integers(*r1.integer_model)
              .same_relation(sum_pattern(mk(5, {0, 1, 2}))));

    RectifyVerdict r2 = is_rectifiable(mk(4, {0, 1, 2}));
    CHECK_FALSE(r2.rectifiable);
    CHECK(r2.obstruction.has_value());

    RectifyVerdict r3 = is_rectifiable(mk(2, {0, 1}));
    CHECK_FALSE(r3.rectifiable);

    CHECK(is_rectifiable(mk(97, {5})).rectifiable);
    CHECK_THROWS_AS(is_rectifiable(mk(30, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                                           11, 12, 13}),
                                   12),
                    std::invalid_argument);
}

TEST_CASE("interval rectification") {
    auto i1 = interval_rectify(mk(5, {0, 1, 2}));
    REQUIRE(i1);
    // u*S + c lies in [0, L-1], L = floor((n+1)/2) = 3.
    CyclicSet placed = translate(dilate(mk(5, {0, 1, 2}), i1->unit), i1->shift);
    for (u64 e : placed.elements()) CHECK(e <= 2);

    CHECK_FALSE(interval_rectify(mk(4, {0, 1, 2})));

    auto i3 = interval_rectify(mk(25, {0, 5, 10}));
    REQUIRE(i3);
    CyclicSet placed3 =
        translate(dilate(mk(25, {0, 5, 10}), i3->unit), i3->shift);
    for (u64 e : placed3.elements()) CHECK(e <= 12);
}

TEST_CASE("interval rectification implies exact rectifiability, small n") {
    for (u64 n = 1; n <= 10; ++n) {
        for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
            CyclicSet s = CyclicSet::from_mask(n, mask);
            if (s.size() > 5) continue;
            if (interval_rectify(s)) CHECK(is_rectifiable(s).rectifiable);
        }
    }
}

TEST_CASE("pattern invariance under affine maps") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        u64 n = 2 + rng() % 14;
        std::vector<u64> e;
        for (u64 x = 0; x < n; ++x)
            if (rng() % 3 == 0) e.push_back(x);
        if (e.empty()) e.push_back(0);
        CyclicSet s(n, e);
        if (s.size() > 8) continue;
        auto us = units(n);
        u64 u = us[rng() % us.size()];
        u64 c = rng() % n;
        CyclicSet moved = translate(dilate(s, u), c);

        // The pair-sum coincidence relation is preserved elementwise by
        // x -> u*x + c (sums pick up a common affine offset).
        const auto& se = s.elements();
        bool relation_preserved = true;
        u64 sz = se.size();
        for (u64 i = 0; i < sz && relation_preserved; ++i)
            for (u64 j = i; j < sz; ++j)
                for (u64 k = 0; k < sz; ++k)
                    for (u64 l = k; l < sz; ++l) {
                        bool before =
                            (se[i] + se[j]) % n == (se[k] + se[l]) % n;
                        bool after = (u * (se[i] + se[j]) + 2 * c) % n ==
                                     (u * (se[k] + se[l]) + 2 * c) % n;
                        if (before != after) relation_preserved = false;
                    }
        CHECK(relation_preserved);
        CHECK(is_rectifiable(s).rectifiable ==
              is_rectifiable(moved).rectifiable);
    }
}

TEST_CASE("coset bound for rectifiable sets") {
    auto run = [](const CyclicSet& s) {
        return rect_coset_bound_verdict(s, is_rectifiable(s).rectifiable);
    };
    LemmaVerdict v1 = run(mk(7, {0, 1, 2}));
    CHECK(v1.hypothesis_holds);
    CHECK_FALSE(v1.violated());

    LemmaVerdict v2 = run(mk(6, {0, 1}));
    CHECK(v2.hypothesis_holds);
    CHECK_FALSE(v2.violated());

    LemmaVerdict v3 = run(mk(9, {0, 1, 2, 3}));
    CHECK(v3.hypothesis_holds);
    CHECK_FALSE(v3.violated());

    // Non-rectifiable input: hypothesis false.
    CHECK_FALSE(run(mk(4, {0, 1, 2})).hypothesis_holds);
}

TEST_CASE("dense sets in small groups are obstructed quickly") {
    // A VSDS with at least 2 elements can never be rectifiable.
    for (u64 n = 2; n <= 12; ++n) {
        for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
            CyclicSet s = CyclicSet::from_mask(n, mask);
            if (s.size() < 2 || !vsds_condition(s)) continue;
            CHECK_FALSE(is_rectifiable(s).rectifiable);
        }
    }
}

TEST_SUITE_END();
