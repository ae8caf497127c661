#pragma once

#include <array>
#include <optional>
#include <string>

#include "cyc/cyclic_set.hpp"
#include "json.hpp"

namespace cyc {

/// Outcome of a single lemma check.  Tri-state: hypothesis false (vacuous),
/// hypothesis true + conclusion true (pass), hypothesis true + conclusion
/// false (violation; witness carries full replay data).
struct LemmaVerdict {
    std::string lemma;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    nlohmann::json witness;
    std::string detail;

    bool violated() const { return hypothesis_holds && !conclusion_holds; }
    nlohmann::json to_json() const;
};

/// Kemperman's four elementary pair types, resolved in order I, II, III, IV.
struct ElementaryType {
    enum class Tag { I, II, III, IV, None };
    Tag tag = Tag::None;
    u64 diff = 0;              // type II common difference
    u64 subgroup_order = 0;    // types III/IV
    u64 g1 = 0, g2 = 0;        // types III/IV offsets
    CyclicSet part1, part2;    // H1, H2

    static const char* tag_name(Tag t);
};

/// |2A| < (3/2)|A| iff A is dense (> 2/3) in a coset of H = A - A.
LemmaVerdict is_vsds(const CyclicSet& a);
/// Convenience: just the doubling condition |2A| < (3/2)|A|.
bool vsds_condition(const CyclicSet& a);

LemmaVerdict kneser_verdict(const CyclicSet& a, const CyclicSet& b);
LemmaVerdict olson_verdict(const CyclicSet& a, const CyclicSet& b);
LemmaVerdict consol_verdict(const CyclicSet& a, const CyclicSet& b);
LemmaVerdict coset_sum_bounds(const CyclicSet& a, const CyclicSet& b,
                              const Subgroup& k);

u64 unique_differences(const CyclicSet& a);
LemmaVerdict mantel_verdict(const CyclicSet& a);

/// Freiman's (3n-3) theorem over the integers.
LemmaVerdict freiman_3n3_verdict(const std::vector<i64>& a, i64 l);
/// |2A| for an integer set (exact).
u64 integer_doubling(const std::vector<i64>& a);
/// Length of the shortest integer AP containing A (span/gcd + 1).
u64 min_integer_ap_len(const std::vector<i64>& a);

/// Three-element subset classification; predicted |2A| per case.
struct TripleClass {
    enum class Case { i, ii, iii, iv } tag;
    u64 predicted_doubling;
    u64 diff = 0; // AP difference for case ii, involution for case iii
};
TripleClass classify_triple(const CyclicSet& a);

LemmaVerdict alpha_verdict(const CyclicSet& triple, u64 beta);

ElementaryType elementary_type(const CyclicSet& a, const CyclicSet& b);

LemmaVerdict kemperman_verdict(const CyclicSet& a, const CyclicSet& b);

/// kemp_lemma's rectifiability precondition is evaluated by the caller
/// (MODULE rectify) and passed in.
LemmaVerdict kemp_lemma_verdict(const CyclicSet& a, const CyclicSet& b,
                                bool b_rectifiable);

/// Representation counts r(x) = #{(p,q) in A x B : p + q = x}, indexed by x.
std::vector<u64> representation_counts(const CyclicSet& a, const CyclicSet& b);

} // namespace cyc
