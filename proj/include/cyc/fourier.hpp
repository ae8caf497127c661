#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "cyc/addcomb.hpp"
#include "cyc/cyclic_set.hpp"

namespace cyc {

/// The n coefficients A^(k) = sum_{a in A} e(ka/n) of a set's indicator,
/// counting-measure normalization.
struct FourierProfile {
    u64 modulus = 1;
    std::vector<std::complex<double>> coefficients;

    /// Order of ker(chi_k) = {a : ka = 0 mod n}, i.e. gcd(k, n).
    u64 kernel_order(u64 k) const { return gcd_u64(k % modulus, modulus); }
    double parseval_defect(u64 set_size) const;
};

/// Direct O(n^2) evaluation; n is capped to keep the dense path honest.
FourierProfile dft(const CyclicSet& a, u64 dense_bound = 4096);

/// Exact additive energy: #{(b1..b4) : b1+b2 = b3+b4}.
u64 energy(const CyclicSet& b);
/// Fourier fourth moment (1/n) sum |B^(k)|^4; cross-check for energy().
double energy_fourier(const CyclicSet& b, u64 dense_bound = 4096);
/// Cauchy-Schwarz floor: E(B) >= |B|^4 / |2B| (integer-exact comparison).
bool energy_bound_holds(const CyclicSet& b);

/// B^(x) = B n (B + x); |B^(x)| is the representation count of x as a
/// difference of two elements of B.
CyclicSet shared_diff(const CyclicSet& b, u64 x);
/// Asserts B^(x) + B subset of (2B)^(x) for every x, and
/// sum_x |B^(x)| = |B|^2.
LemmaVerdict katz_koester_verdict(const CyclicSet& b);

/// Open semicircular arc holding at least (1+eta)/2 * |Z| points, where
/// eta = |sum z| / |Z|.
struct ArcResult {
    double center;             // arc is (center - pi/2, center + pi/2)
    std::vector<int> members;  // indices into the input
    double eta;
};
ArcResult arc_concentrate(const std::vector<std::complex<double>>& points);

/// Phi(n) = (1/n) * sum_{d | n, d <= 36} phi(d), exact.
Rat phi36(u64 n);

struct PhiScanRow {
    u64 n;
    i64 phi_num;
    i64 phi_den;
    bool ok;
};
struct PhiScanReport {
    u64 lo, hi;
    Rat eps;
    u64 checked = 0;
    std::vector<u64> violations;
};
/// Asserts Phi(n) < eps for all n in (lo, hi]; row_sink (optional) receives
/// one row per n for streaming output.
PhiScanReport phi_scan(u64 lo, u64 hi, Rat eps,
                       const std::function<void(const PhiScanRow&)>& row_sink = {});

struct BiasParams {
    u64 min_index = 37;
    double coeff = 0.8;
    double coverage = 0.9;
};

/// A certified concentration witness: most of A sits inside P + H with P
/// a short primitive progression.
struct BiasWitness {
    Subgroup subgroup;
    ApCover progression; // primitive in Z_n
    CyclicSet covered;   // (P + H) n A
    double coverage_ratio;
    u64 character; // the k whose coefficient triggered the witness
};

/// Heuristic-positive detector: a returned witness is always valid, but
/// absence certifies nothing.
std::optional<BiasWitness> bias_detect(const CyclicSet& a,
                                       const BiasParams& params = {},
                                       u64 dense_bound = 4096);

} // namespace cyc
