#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Exact rational with 64-bit numerator/denominator, always reduced,
/// denominator positive.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n, i64 d);
    static Rat of(i64 n) { return Rat(n, 1); }

    friend bool operator==(const Rat&, const Rat&) = default;
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
    std::string str() const;
};

struct Subgroup;

/// A finite subset of Z_n carrying its modulus.  Elements are stored as a
/// sorted vector of residues; all operations are exact.  Values are
/// immutable after construction and safe to share across threads.
class CyclicSet {
  public:
    CyclicSet() = default;
    CyclicSet(u64 modulus, std::vector<u64> elements);

    /// Parse the literal format `<n>:<e1>,<e2>,...`, e.g. "12:0,1,5".
    /// Duplicate elements are rejected.  Throws std::invalid_argument
    /// with a position-bearing message on malformed input.
    static CyclicSet parse(const std::string& literal);
    std::string str() const;

    u64 modulus() const { return n_; }
    u64 size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<u64>& elements() const { return elems_; }
    bool contains(u64 e) const;
    u64 min_element() const;

    /// Bitmask representation; only valid for modulus <= 64.
    u64 mask() const;
    static CyclicSet from_mask(u64 modulus, u64 mask);

    friend bool operator==(const CyclicSet&, const CyclicSet&) = default;

  private:
    u64 n_ = 1;
    std::vector<u64> elems_;
};

/// A subgroup of Z_n, identified by its order (a divisor of n).  As a set
/// it equals the multiples of n/order.
struct Subgroup {
    u64 modulus = 1;
    u64 order = 1;

    Subgroup() = default;
    Subgroup(u64 modulus, u64 order);

    u64 generator() const { return modulus / order; }
    u64 index() const { return modulus / order; }
    bool is_full() const { return order == modulus; }
    bool is_trivial() const { return order == 1; }
    bool contains(u64 e) const { return e % (modulus / order) == 0; }
    CyclicSet as_set() const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// An arithmetic-progression cover {start + i*diff : 0 <= i < length} in Z_n.
struct ApCover {
    u64 modulus = 1;
    u64 start = 0;
    u64 diff = 0;
    u64 length = 1;

    CyclicSet covered() const;
    bool primitive() const; // gcd(diff, modulus) == 1
    /// True when all terms lie in pairwise distinct H-cosets.
    bool distinct_cosets(const Subgroup& h) const;
};

/// Image of a set under the canonical projection Z_n -> Z_n/H.
struct QuotientImage {
    u64 parent_modulus = 1;
    u64 subgroup_order = 1;
    CyclicSet image; // modulus n/h
};

u64 gcd_u64(u64 a, u64 b);
std::vector<u64> divisors(u64 n);
/// Units of Z_n in ascending order.
std::vector<u64> units(u64 n);
/// Inverse of u modulo n; requires gcd(u, n) = 1.
u64 mod_inverse(u64 u, u64 n);
/// Multiplicative order of d in Z_n, i.e. n / gcd(d, n) for the additive group.
u64 additive_order(u64 d, u64 n);

CyclicSet sumset(const CyclicSet& a, const CyclicSet& b);
inline CyclicSet double_set(const CyclicSet& a) { return sumset(a, a); }
CyclicSet difference_set(const CyclicSet& a, const CyclicSet& b); // a - b
CyclicSet translate(const CyclicSet& a, u64 g);
CyclicSet dilate(const CyclicSet& a, u64 u);
CyclicSet set_union(const CyclicSet& a, const CyclicSet& b);
CyclicSet set_intersect(const CyclicSet& a, const CyclicSet& b);

/// The period pi(S) = {g : S+g = S}.  Empty-set convention: the full group.
Subgroup stabilizer(const CyclicSet& s);

/// One Subgroup per divisor of n, order ascending.
std::vector<Subgroup> subgroups(u64 n);

QuotientImage quotient_image(const CyclicSet& a, const Subgroup& h);

/// S + H as a set; |result| = |H| * (number of H-cosets S determines).
CyclicSet coset_saturate(const CyclicSet& s, const Subgroup& h);

/// Decomposition of A into its nonempty intersections with H-cosets.
/// Representatives are the minimal residue of each part; parts ordered by
/// representative.
struct CosetPart {
    u64 representative;
    CyclicSet part;
};
std::vector<CosetPart> coset_split(const CyclicSet& a, const Subgroup& h);

/// Minimal-length AP cover of S (terms in pairwise distinct positions);
/// ties broken by smallest diff, then smallest start.  When H is given the
/// cover is computed for the quotient image and lives in Z_{n/h}.
/// Absent only for empty S.
std::optional<ApCover> min_ap_cover(const CyclicSet& s,
                                    const Subgroup* h = nullptr);

/// Present iff S is exactly an AP of length |S| with pairwise distinct
/// terms; reports the smallest valid difference and the matching start.
struct ApWitness {
    u64 diff;
    u64 start;
};
std::optional<ApWitness> is_ap(const CyclicSet& s);

/// True iff S is exactly an AP with the given difference (|S| >= 2).
bool is_ap_with_diff(const CyclicSet& s, u64 d);

/// True iff S lies in a single H-coset.
bool in_single_coset(const CyclicSet& s, const Subgroup& h);

/// True iff S lies in some coset of a proper subgroup of Z_n.
bool in_proper_coset(const CyclicSet& s);

} // namespace cyc
