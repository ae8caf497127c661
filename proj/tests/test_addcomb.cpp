#include <stdexcept>
#include "cyc/addcomb.hpp"
#include "doctest.h"

using namespace cyc;

namespace {
CyclicSet mk(u64 n, std::vector<u64> e) { return CyclicSet(n, std::move(e)); }
} // namespace

TEST_SUITE_BEGIN("addcomb");

TEST_CASE("very-small-doubling recognition") {
    LemmaVerdict v1 = is_vsds(mk(10, {0, 2, 4, 6, 8}));
    CHECK(v1.hypothesis_holds);
    CHECK(v1.conclusion_holds);
    CHECK(v1.witness["H_order"] == 5);

    LemmaVerdict v2 = is_vsds(mk(5, {0, 1}));
    CHECK_FALSE(v2.hypothesis_holds); // |2A| = 3 >= 3

    LemmaVerdict v3 = is_vsds(mk(5, {0, 1, 2, 3}));
    CHECK(v3.hypothesis_holds); // |2A| = 5 < 6
    CHECK(v3.conclusion_holds);
    CHECK(v3.witness["H_order"] == 5);

    CHECK(vsds_condition(mk(5, {0, 1, 2, 3})));
    CHECK_FALSE(vsds_condition(mk(5, {0, 1})));
}

TEST_CASE("sumset size bound with stabilizer") {
    LemmaVerdict v1 = kneser_verdict(mk(12, {0, 6}), mk(12, {0, 6}));
    CHECK_FALSE(v1.violated());
    CHECK(v1.witness["H_order"] == 2);
    CHECK(v1.witness["sum_size"] == 2);

    CyclicSet full(5, {0, 1, 2, 3, 4});
    CHECK_FALSE(kneser_verdict(full, full).violated());

    LemmaVerdict v3 = kneser_verdict(mk(12, {0, 1, 5}), mk(12, {0, 1, 5}));
    CHECK_FALSE(v3.violated());
    CHECK(v3.witness["sum_size"] == 6);
    CHECK(v3.witness["H_order"] == 1);
}

TEST_CASE("half-size sum bound or coset confinement") {
    CHECK_FALSE(olson_verdict(mk(7, {0}), mk(7, {0, 1})).violated());
    CHECK_FALSE(
        olson_verdict(mk(8, {0, 1, 2, 3}), mk(8, {0, 2, 4, 6})).violated());
    CHECK_FALSE(olson_verdict(mk(12, {0, 4, 8}), mk(12, {0, 4, 8})).violated());
}

TEST_CASE("consolidation lemma and corollaries") {
    CyclicSet s10(10, {0, 2, 4, 6, 8});
    LemmaVerdict v1 = consol_verdict(s10, s10);
    CHECK(v1.hypothesis_holds);
    CHECK(v1.witness["main_hyp"] == true);
    CHECK_FALSE(v1.violated());

    CyclicSet s5(5, {0, 1, 2, 3});
    LemmaVerdict v2 = consol_verdict(s5, s5);
    CHECK(v2.witness["main_hyp"] == true);
    CHECK_FALSE(v2.violated());

    CyclicSet s2(10, {0, 1});
    LemmaVerdict v3 = consol_verdict(s2, s2);
    CHECK(v3.witness["main_hyp"] == false); // 3 >= 2 min{2, 3/2}
    CHECK_FALSE(v3.violated());
}

TEST_CASE("coset sum bounds") {
    Subgroup k4(4, 4);
    LemmaVerdict v1 = coset_sum_bounds(mk(4, {0, 1, 2}), mk(4, {0, 1}), k4);
    CHECK(v1.hypothesis_holds);
    CHECK_FALSE(v1.violated());
    CHECK(v1.witness["sum_size"] == 4);

    // A = the whole coset: A+B stays a union of K-cosets of size >= |K|.
    LemmaVerdict v2 =
        coset_sum_bounds(mk(4, {0, 1, 2, 3}), mk(4, {2}), k4);
    CHECK(v2.hypothesis_holds);
    CHECK_FALSE(v2.violated());

    LemmaVerdict v3 = coset_sum_bounds(mk(4, {0, 1}), mk(4, {0, 1, 3}), k4);
    CHECK(v3.hypothesis_holds);
    CHECK_FALSE(v3.violated());

    // Precondition failure: A spans two cosets of a proper K.
    LemmaVerdict v4 =
        coset_sum_bounds(mk(8, {0, 1}), mk(8, {0}), Subgroup(8, 4));
    CHECK_FALSE(v4.hypothesis_holds);
}

TEST_CASE("unique differences and the doubling bound") {
    CHECK(unique_differences(mk(100, {0, 1, 2, 3})) == 2); // {3, 97}
    LemmaVerdict v1 = mantel_verdict(mk(100, {0, 1, 2, 3}));
    CHECK(v1.hypothesis_holds); // 7 <= 8
    CHECK_FALSE(v1.violated());
    CHECK(v1.witness["unique_diffs"] == 2);

    LemmaVerdict v2 = mantel_verdict(mk(8, {0, 2, 4, 6}));
    CHECK(v2.hypothesis_holds);
    CHECK(v2.witness["unique_diffs"] == 0);
    CHECK_FALSE(v2.violated());

    CHECK_FALSE(mantel_verdict(mk(10, {0, 1})).hypothesis_holds);
}

TEST_CASE("integer doubling lower bound") {
    LemmaVerdict v1 = freiman_3n3_verdict({0, 1, 3}, 3);
    CHECK(v1.hypothesis_holds);
    CHECK(v1.witness["doubling"] == 6);
    CHECK_FALSE(v1.violated());

    CHECK_FALSE(freiman_3n3_verdict({0, 1, 2}, 3).hypothesis_holds);

    // {0,1,3} sits inside the 4-term progression {0,1,2,3}: vacuous at l=4.
    LemmaVerdict v3 = freiman_3n3_verdict({0, 1, 3}, 4);
    CHECK_FALSE(v3.hypothesis_holds);
    CHECK_FALSE(v3.violated());

    CHECK(integer_doubling({0, 1, 3}) == 6);
    CHECK(min_integer_ap_len({0, 2, 6}) == 4);
    CHECK_THROWS_AS(freiman_3n3_verdict({i64{1} << 31}, 2),
                    std::invalid_argument);
}

TEST_CASE("three-element classification") {
    TripleClass t1 = classify_triple(mk(12, {0, 4, 8}));
    CHECK(t1.tag == TripleClass::Case::i);
    CHECK(t1.predicted_doubling == 3);

    TripleClass t2 = classify_triple(mk(4, {0, 1, 2}));
    CHECK(t2.tag == TripleClass::Case::ii);
    CHECK(t2.predicted_doubling == 4);

    TripleClass t3 = classify_triple(mk(12, {0, 6, 1}));
    CHECK(t3.tag == TripleClass::Case::iii);
    CHECK(t3.predicted_doubling == 5);
    CHECK(double_set(mk(12, {0, 6, 1})).size() == 5);

    CHECK_THROWS_AS(classify_triple(mk(12, {0, 1})), std::invalid_argument);
}

TEST_CASE("shifted-sum relation forces progression or coset") {
    // beta = 4 satisfies only the alpha_1 relation, not the alpha_2 one:
    // hypothesis is vacuous and never violated.
    CHECK_FALSE(alpha_verdict(mk(100, {0, 1, 3}), 4).violated());

    // Precondition fails: 0+2 = 1+1.
    CHECK_FALSE(alpha_verdict(mk(100, {0, 1, 2}), 50).hypothesis_holds);

    for (u64 beta = 0; beta < 12; ++beta)
        CHECK_FALSE(alpha_verdict(mk(12, {0, 1, 5}), beta).violated());
}

TEST_CASE("structural pair types") {
    CHECK(elementary_type(mk(12, {5}), mk(12, {0, 1, 7})).tag ==
          ElementaryType::Tag::I);

    ElementaryType e2 = elementary_type(mk(10, {0, 1, 2}), mk(10, {3, 4}));
    CHECK(e2.tag == ElementaryType::Tag::II);
    CHECK(e2.diff == 1);

    CHECK(elementary_type(mk(5, {0, 1}), mk(5, {0, 2})).tag ==
          ElementaryType::Tag::None);
}

TEST_CASE("small-sumset pairs reduce to structural quotients") {
    LemmaVerdict v1 = kemperman_verdict(mk(7, {0, 1}), mk(7, {0, 1}));
    CHECK(v1.hypothesis_holds);
    CHECK_FALSE(v1.violated());
    CHECK(v1.witness["type"] == "II");

    LemmaVerdict v2 = kemperman_verdict(mk(12, {0}), mk(12, {0, 1, 7}));
    CHECK(v2.hypothesis_holds);
    CHECK_FALSE(v2.violated());

    LemmaVerdict v3 = kemperman_verdict(mk(6, {0, 2, 4}), mk(6, {0, 2, 4}));
    CHECK(v3.hypothesis_holds);
    CHECK_FALSE(v3.violated());
}

TEST_CASE("two-coset half-split hypothesis filters") {
    // B an AP: vacuous.
    CHECK_FALSE(kemp_lemma_verdict(mk(14, {0, 1}), mk(14, {0, 1, 2}), true)
                    .hypothesis_holds);
    // B a proper coset: vacuous.
    CHECK_FALSE(kemp_lemma_verdict(mk(14, {0, 1}), mk(14, {0, 7}), true)
                    .hypothesis_holds);
    // B not rectifiable: vacuous.
    CHECK_FALSE(
        kemp_lemma_verdict(mk(14, {0, 1}), mk(14, {0, 1, 4, 9, 11}), false)
            .hypothesis_holds);
}

TEST_CASE("representation counts") {
    auto r = representation_counts(mk(5, {0, 1}), mk(5, {0, 1}));
    CHECK(r == std::vector<u64>{1, 2, 1, 0, 0});
}

TEST_SUITE_END();
