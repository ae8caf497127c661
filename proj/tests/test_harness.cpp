#include <stdexcept>
#include <random>

#include "cyc/harness.hpp"
#include "doctest.h"

using namespace cyc;

namespace {

CyclicSet mk(u64 n, std::vector<u64> e) { return CyclicSet(n, std::move(e)); }

// Burnside oracle: orbit count of nonempty subsets under x -> u*x + g,
// computed from cycle counts of each affine permutation.
u64 burnside_nonempty_classes(u64 n) {
    u64 total = 0, group = 0;
    for (u64 u : units(n)) {
        for (u64 g = 0; g < n; ++g) {
            ++group;
            std::vector<char> seen(n, 0);
            u64 cycles = 0;
            for (u64 x = 0; x < n; ++x) {
                if (seen[x]) continue;
                ++cycles;
                u64 y = x;
                while (!seen[y]) {
                    seen[y] = 1;
                    y = (u * y + g) % n;
                }
            }
            total += u64{1} << cycles;
        }
    }
    return total / group - 1; // drop the empty set's orbit
}

} // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("canonical form is an orbit invariant") {
    CanonicalClass c1 = canonical_form(mk(12, {7, 8, 0}));
    CanonicalClass c2 = canonical_form(mk(12, {0, 1, 5}));
    CHECK(c1.representative == c2.representative);
    CHECK(c1.orbit_size == c2.orbit_size);

    CHECK(canonical_form(mk(9, {4})).representative == mk(9, {0}));

    for (u64 u : units(12)) {
        CHECK(canonical_form(dilate(mk(12, {0, 1, 5}), u)).representative ==
              c2.representative);
    }

    // Idempotence.
    CHECK(canonical_form(c2.representative).representative ==
          c2.representative);
}

TEST_CASE("canonical enumeration covers every subset once") {
    // n = 2: exactly {0} and {0,1}.
    std::vector<CyclicSet> classes2;
    enumerate_canonical(2, 1, 2, [&](const CanonicalClass& c) {
        classes2.push_back(c.representative);
    });
    REQUIRE(classes2.size() == 2);
    CHECK(classes2[0] == mk(2, {0}));
    CHECK(classes2[1] == mk(2, {0, 1}));

    // Brute-force orbit partition agreement at n = 4: every subset's
    // canonical form appears exactly once, and orbit sizes sum to 2^4 - 1.
    u64 orbit_total = 0, emitted = 0;
    enumerate_canonical(4, 1, 4, [&](const CanonicalClass& c) {
        ++emitted;
        orbit_total += c.orbit_size;
        CHECK(canonical_mask(c.representative.mask(), 4) ==
              c.representative.mask());
    });
    CHECK(orbit_total == 15);
    CHECK(emitted == burnside_nonempty_classes(4));

    for (u64 n = 1; n <= 12; ++n) {
        u64 count = 0;
        enumerate_canonical(n, 1, n, [&](const CanonicalClass&) { ++count; });
        CHECK(count == burnside_nonempty_classes(n));
    }
}

TEST_CASE("sweeps are clean at default constants") {
    SweepReport main_rep = sweep_theorem(SweepConfig{12, ClassifyMode::Main});
    CHECK(main_rep.violations.empty());
    CHECK(main_rep.hypothesis_hits > 0);
    CHECK(main_rep.ok());

    SweepReport aux_rep = sweep_theorem(SweepConfig{12, ClassifyMode::Aux});
    CHECK(aux_rep.violations.empty());
    CHECK(aux_rep.hypothesis_hits > 0);
}

TEST_CASE("degenerate dense constant is detected") {
    SweepConfig cfg{10, ClassifyMode::Main};
    cfg.consts.dense_c = 1; // |A| > |H| required: dense case disabled
    SweepReport rep = sweep_theorem(cfg);
    CHECK_FALSE(rep.violations.empty());
    CHECK_FALSE(rep.ok());
    // Violations carry replayable counterexamples.
    CHECK(rep.violations.front().contains("set"));
}

TEST_CASE("serial and parallel sweeps agree byte for byte") {
    SweepConfig serial{11, ClassifyMode::Main};
    serial.threads = 1;
    SweepConfig parallel{11, ClassifyMode::Main};
    parallel.threads = 0;
    CHECK(sweep_theorem(serial).to_json().dump() ==
          sweep_theorem(parallel).to_json().dump());
}

TEST_CASE("reports are deterministic and runtime is opt-in") {
    SweepReport a = sweep_theorem(SweepConfig{10, ClassifyMode::Aux});
    SweepReport b = sweep_theorem(SweepConfig{10, ClassifyMode::Aux});
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK_FALSE(a.to_json().contains("runtime_ms"));
    CHECK(a.to_json(true).contains("runtime_ms"));
}

TEST_CASE("merge is order-insensitive on counts") {
    SweepReport a = sweep_theorem(SweepConfig{9, ClassifyMode::Main});
    SweepReport b = sweep_theorem(SweepConfig{10, ClassifyMode::Main});
    SweepReport ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    CHECK(ab.examined == ba.examined);
    CHECK(ab.hypothesis_hits == ba.hypothesis_hits);
    CHECK(ab.counts == ba.counts);
}

TEST_CASE("reduced lemma suites run clean") {
    auto clean = [](const std::string& suite, u64 n_max, u64 trials) {
        SweepReport rep = lemma_suite(SuiteConfig{suite, n_max, trials});
        CAPTURE(suite);
        CHECK(rep.violations.empty());
        return rep;
    };
    clean("kneser", 8, 2000);
    clean("olson", 8, 2000);
    clean("consol", 8, 2000);
    clean("vsds", 10, 0);
    clean("mantel", 10, 0);
    clean("triple", 12, 0);
    clean("alpha", 10, 0);
    clean("rect2a", 10, 0);
    clean("kemp", 8, 200);
    clean("kemp_lemma", 10, 0);
    clean("elementary", 8, 0);
    clean("combo", 10, 0);
    clean("katz_koester", 8, 200);
    clean("energy", 32, 300);
    clean("arc", 0, 500);
    clean("coset_bounds", 8, 0);

    CHECK_THROWS_AS(lemma_suite(SuiteConfig{"bogus"}), std::invalid_argument);
    CHECK(lemma_suite_ids().size() == 16);
}

TEST_CASE("seeded suites replay identically") {
    SuiteConfig cfg{"energy", 32, 500, 99};
    CHECK(lemma_suite(cfg).to_json().dump() ==
          lemma_suite(cfg).to_json().dump());

    SuiteConfig other{"energy", 32, 500, 100};
    CHECK(lemma_suite(cfg).to_json().dump() !=
          lemma_suite(other).to_json().dump());
}

TEST_CASE("extremal doubling minima") {
    auto rows10 = extremal_scan(10, 5, 5);
    REQUIRE(rows10.size() == 1);
    CHECK(rows10[0].min_doubling == 5); // the order-5 subgroup

    auto rows12 = extremal_scan(12, 4, 4);
    REQUIRE(rows12.size() == 1);
    CHECK(rows12[0].min_doubling == 4);

    auto rows11 = extremal_scan(11, 4, 4);
    REQUIRE(rows11.size() == 1);
    CHECK(rows11[0].min_doubling == 7); // 2|A| - 1: no size-4 subgroup

    for (const auto& r : rows11)
        CHECK(double_set(r.attaining).size() == r.min_doubling);
}

TEST_CASE("class members share doubling data") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        u64 n = 2 + rng() % 11;
        u64 mask = 1 + rng() % ((u64{1} << n) - 1);
        CyclicSet a = CyclicSet::from_mask(n, mask);
        CanonicalClass c = canonical_form(a);
        CHECK(double_set(c.representative).size() == double_set(a).size());
    }
}

TEST_SUITE_END();
