#pragma once

#include <array>
#include <optional>

#include "cyc/addcomb.hpp"
#include "cyc/cyclic_set.hpp"

namespace cyc {

struct DoublingData {
    u64 size;          // |A|
    u64 doubled_size;  // |2A|
    Rat ratio;         // |2A| / |A|, exact
    u64 delta;         // |2A| - |A|
};

DoublingData doubling(const CyclicSet& a);

enum class WitnessKind { DenseCoset, Regular, Singular, None };
const char* witness_kind_name(WitnessKind k);

/// A certified instance of the trichotomy, re-checkable from scratch by
/// verify_witness.
struct StructureWitness {
    WitnessKind kind = WitnessKind::None;
    u64 modulus = 1;
    u64 subgroup_order = 1;

    // DenseCoset: A inside one H-coset with |A| > |H| / C.
    Rat density;               // |A| / |H|
    bool trivial_dense = false; // H = Z_n
    // AuxDense variant reuses DenseCoset kind with aux_increment set:
    // delta >= n / C0 (no subgroup involved; subgroup_order = modulus).
    bool aux_increment = false;

    // Regular: A inside P + H, P terms in distinct H-cosets,
    // (|P|-1)|H| <= delta.
    ApCover progression; // modulus n

    // Singular: A meets exactly three non-AP H-cosets, 3|H| <= delta.
    std::array<u64, 3> coset_reps{};

    nlohmann::json to_json() const;
};

struct ClassifyConstants {
    u64 dense_c = 30000;   // dense-coset density constant C
    u64 aux_c0 = 24000;    // increment threshold constant C0 (4C = 5*C0)
};

enum class ClassifyMode { Main, Aux };

struct WitnessSearch {
    /// Aux mode only: whether the theorem hypothesis held; failures are
    /// reported here, never thrown.
    bool hypothesis_ok = true;
    std::string hypothesis_note;
    DoublingData data{};
    std::vector<StructureWitness> all;
    std::optional<std::size_t> best; // index into all

    bool has_witness() const { return best.has_value(); }
    /// True when some witness uses a proper subgroup (or, in main mode, a
    /// non-trivial dense coset).
    bool has_nontrivial() const;
};

/// Exhaustive subgroup-scan search for structure witnesses in main or aux
/// mode.  Deterministic: subgroups ascending, best-witness priority
/// Regular (smallest (|P|-1)|H|), then Singular (largest H), then dense.
WitnessSearch find_witness(const CyclicSet& a,
                           const ClassifyConstants& consts = {},
                           ClassifyMode mode = ClassifyMode::Main);

/// Re-validates every clause of a witness from scratch using only
/// cyclic_core primitives; independent of the search path.
bool verify_witness(const CyclicSet& a, const StructureWitness& w,
                    const ClassifyConstants& consts = {},
                    ClassifyMode mode = ClassifyMode::Main);

/// Proposition: rectifiable quotient + doubling below 3(1-1/s) forces a
/// regular coset-progression cover.  Rectifiability of the quotient image
/// is decided by the caller (MODULE rectify).
LemmaVerdict combo_verdict(const CyclicSet& a, const Subgroup& l,
                           bool quotient_rectifiable);

} // namespace cyc
