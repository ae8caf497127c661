#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyc/addcomb.hpp"
#include "cyc/cyclic_set.hpp"

namespace cyc {

/// An index pair (i, j), i <= j, into the sorted element list of a set.
using IndexPair = std::pair<int, int>;

/// Partition of the s(s+1)/2 index pairs of a set into classes of equal
/// sums; the Freiman order-2 relation.  Invariant under translation and
/// unit dilation of the underlying set.
struct SumPattern {
    int base_size = 0;
    std::vector<std::vector<IndexPair>> classes;

    /// Class id of each pair, indexed by the canonical pair order
    /// (0,0),(0,1),...,(0,s-1),(1,1),...; -1 if absent.
    std::vector<int> class_of;

    bool same_relation(const SumPattern& other) const;
};

SumPattern sum_pattern(const CyclicSet& s);
SumPattern sum_pattern_integers(const std::vector<i64>& s);

struct RectifyVerdict {
    bool rectifiable = false;
    /// Integer model realizing exactly the sum pattern, when rectifiable.
    std::optional<std::vector<i64>> integer_model;
    /// Two index pairs with distinct Z_n sums whose equality is forced in
    /// any model, when not rectifiable.
    std::optional<std::pair<IndexPair, IndexPair>> obstruction;
};

/// Exact decision of Freiman rectifiability by rational elimination.
/// Size bound guards the O(s^4) disequality system.
RectifyVerdict is_rectifiable(const CyclicSet& s, u64 size_bound = 12);

/// Present iff some unit u and shift c put u*S + c inside [0, L-1] with
/// L = floor((n+1)/2); presence implies rectifiability.
struct IntervalRectification {
    u64 unit;
    u64 shift;
};
std::optional<IntervalRectification> interval_rectify(const CyclicSet& s);

/// Lemma: a rectifiable set meets every coset of every subgroup K in at
/// most (|K|+1)/2 elements.  Pass the precomputed rectifiability decision.
LemmaVerdict rect_coset_bound_verdict(const CyclicSet& a, bool rectifiable);

} // namespace cyc
