#pragma once

#include <functional>
#include <map>
#include <string>

#include "cyc/classify.hpp"
#include "cyc/cyclic_set.hpp"
#include "json.hpp"

namespace cyc {

/// Affine orbit (x -> u*x + g, u a unit) of a subset of Z_n, named by its
/// minimal-bitmask representative.  Doubling data and witness variants are
/// constant on the orbit.
struct CanonicalClass {
    u64 modulus;
    CyclicSet representative;
    u64 orbit_size;
};

/// Requires modulus <= 32 (bitmask path).
CanonicalClass canonical_form(const CyclicSet& a);
u64 canonical_mask(u64 mask, u64 n);
/// Minimal rotation of a mask; translation-orbit representative.
u64 min_rotation_mask(u64 mask, u64 n);

/// Every nonempty subset with size in [size_min, size_max] appears in
/// exactly one emitted class; emission order is ascending representative
/// mask.  Serial; deterministic.
void enumerate_canonical(u64 n, u64 size_min, u64 size_max,
                         const std::function<void(const CanonicalClass&)>& emit);

/// Aggregated machine-checkable outcome of a sweep or lemma suite.
/// Violations carry full replay data; a report is clean only when the
/// violation list is empty AND the hypothesis-hit floor was met (so "zero
/// violations" cannot silently mean "zero hypotheses met").
struct SweepReport {
    nlohmann::json config;
    u64 examined = 0;
    u64 hypothesis_hits = 0;
    u64 min_hypothesis_hits = 0;
    std::map<std::string, u64> counts;
    std::vector<nlohmann::json> violations;
    double runtime_ms = 0;

    bool ok() const {
        return violations.empty() && hypothesis_hits >= min_hypothesis_hits;
    }
    /// runtime_ms is emitted only on request so identical runs serialize
    /// byte-identically.
    nlohmann::json to_json(bool include_runtime = false) const;
    void merge(const SweepReport& other);
};

struct SweepConfig {
    u64 n_max = 12;
    ClassifyMode mode = ClassifyMode::Main;
    ClassifyConstants consts{};
    int threads = 0; // 0 = library default; 1 = serial reference path
};

/// Theorem sweep over canonical classes: every hypothesis class must get a
/// witness passing verify_witness.
SweepReport sweep_theorem(const SweepConfig& cfg);

struct SuiteConfig {
    std::string suite;
    u64 n_max = 0;   // 0 = suite default
    u64 trials = 0;  // 0 = suite default
    u64 seed = 20250826;
    int threads = 0;
};

/// Known ids: kneser, olson, consol, vsds, mantel, triple, alpha, rect2a,
/// kemp, kemp_lemma, elementary, combo, katz_koester, energy, arc,
/// coset_bounds.  Throws on unknown id.
SweepReport lemma_suite(const SuiteConfig& cfg);
std::vector<std::string> lemma_suite_ids();

struct ExtremalRow {
    u64 size;
    u64 min_doubling;
    CyclicSet attaining;
};
/// Minimal |2A| per cardinality over canonical classes; informational.
std::vector<ExtremalRow> extremal_scan(u64 n, u64 size_min, u64 size_max);

} // namespace cyc
