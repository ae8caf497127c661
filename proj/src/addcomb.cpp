#include "cyc/addcomb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyc {

using json = nlohmann::json;

json LemmaVerdict::to_json() const {
    return json{{"lemma", lemma},
                {"hypothesis_holds", hypothesis_holds},
                {"conclusion_holds", conclusion_holds},
                {"witness", witness},
                {"detail", detail}};
}

const char* ElementaryType::tag_name(Tag t) {
    switch (t) {
        case Tag::I: return "I";
        case Tag::II: return "II";
        case Tag::III: return "III";
        case Tag::IV: return "IV";
        default: return "NONE";
    }
}

std::vector<u64> representation_counts(const CyclicSet& a, const CyclicSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("representation_counts modulus mismatch");
    u64 n = a.modulus();
    std::vector<u64> r(n, 0);
    for (u64 x : a.elements())
        for (u64 y : b.elements()) {
            u64 s = x + y;
            if (s >= n) s -= n;
            ++r[s];
        }
    return r;
}

bool vsds_condition(const CyclicSet& a) {
    return 2 * double_set(a).size() < 3 * a.size();
}

LemmaVerdict is_vsds(const CyclicSet& a) {
    if (a.empty()) throw std::invalid_argument("is_vsds: empty set");
    LemmaVerdict v;
    v.lemma = "vsds";
    CyclicSet two_a = double_set(a);
    v.hypothesis_holds = 2 * two_a.size() < 3 * a.size();
    if (!v.hypothesis_holds) {
        v.detail = "|2A| >= (3/2)|A|";
        return v;
    }
    // H := A - A must be a subgroup with A dense in one of its cosets,
    // and 2A must be an H-coset.
    CyclicSet h = difference_set(a, a);
    u64 n = a.modulus();
    bool is_subgroup =
        n % h.size() == 0 && h == Subgroup(n, h.size()).as_set();
    bool conc = is_subgroup;
    if (is_subgroup) {
        Subgroup hs(n, h.size());
        conc = conc && in_single_coset(a, hs);
        conc = conc && 3 * a.size() > 2 * hs.order;
        conc = conc && two_a.size() == hs.order &&
               in_single_coset(two_a, hs);
    }
    v.conclusion_holds = conc;
    v.witness = json{{"H_order", h.size()}, {"diff_set", h.str()}};
    return v;
}

LemmaVerdict kneser_verdict(const CyclicSet& a, const CyclicSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("kneser_verdict: empty input");
    LemmaVerdict v;
    v.lemma = "kneser";
    CyclicSet ab = sumset(a, b);
    Subgroup h = stabilizer(ab);
    u64 ah = coset_saturate(a, h).size();
    u64 bh = coset_saturate(b, h).size();
    v.hypothesis_holds = true;
    bool ok = ab.size() + h.order >= a.size() + b.size();
    if (ab.size() + 1 <= a.size() + b.size()) // |A+B| <= |A|+|B|-1
        ok = ok && ab.size() == ah + bh - h.order;
    if (ab.size() + 2 <= a.size() + b.size()) // strict: A+B periodic
        ok = ok && h.order > 1;
    v.conclusion_holds = ok;
    v.witness = json{{"H_order", h.order},
                     {"sum_size", ab.size()},
                     {"A_sat", ah},
                     {"B_sat", bh}};
    return v;
}

LemmaVerdict olson_verdict(const CyclicSet& a, const CyclicSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("olson_verdict: empty input");
    LemmaVerdict v;
    v.lemma = "olson";
    CyclicSet ab = sumset(a, b);
    Subgroup h = stabilizer(ab);
    v.hypothesis_holds = true;
    v.conclusion_holds =
        2 * ab.size() >= 2 * a.size() + b.size() || in_single_coset(b, h);
    v.witness = json{{"H_order", h.order}, {"sum_size", ab.size()}};
    return v;
}

LemmaVerdict consol_verdict(const CyclicSet& a, const CyclicSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("consol_verdict: empty input");
    LemmaVerdict v;
    v.lemma = "consol";
    CyclicSet ab = sumset(a, b);
    Subgroup h = stabilizer(ab);
    u64 sab = ab.size(), sa = a.size(), sb = b.size();

    // Consolidation branch: |A+B| < 2 min{|B|, (3/4)|A|}.
    bool main_hyp = sab < 2 * sb && 4 * sab < 6 * sa;
    bool main_ok = true;
    if (main_hyp) {
        main_ok = 3 * sa > 2 * h.order && 2 * sb > h.order &&
                  in_single_coset(a, h) && in_single_coset(b, h) &&
                  sab == h.order && in_single_coset(ab, h);
    }

    // Half-size branch: |A+B| < |A| + |B|/2 with |A| <= |B|.
    bool c53_hyp = 2 * sab < 2 * sa + sb && sa <= sb;
    bool c53_ok = true;
    if (c53_hyp) {
        CyclicSet bb = difference_set(b, b);
        u64 n = b.modulus();
        bool subgrp = n % bb.size() == 0 &&
                      bb == Subgroup(n, bb.size()).as_set();
        c53_ok = 3 * sb > 2 * h.order && subgrp && bb.size() == h.order &&
                 vsds_condition(b);
        if (c53_ok) {
            CyclicSet twob = double_set(b);
            c53_ok = twob.size() == h.order && in_single_coset(twob, h);
        }
    }

    // Non-VSDS branch: A not a VSDS forces |A+B| >= 2 min{|B|, 3|A|/4}.
    bool c55_hyp = !vsds_condition(a);
    bool c55_ok = true;
    if (c55_hyp) c55_ok = sab >= 2 * sb || 4 * sab >= 6 * sa;

    v.hypothesis_holds = main_hyp || c53_hyp || c55_hyp;
    v.conclusion_holds = main_ok && c53_ok && c55_ok;
    v.witness = json{{"H_order", h.order},
                     {"sum_size", sab},
                     {"main_hyp", main_hyp},
                     {"cor53_hyp", c53_hyp},
                     {"cor55_hyp", c55_hyp}};
    return v;
}

LemmaVerdict coset_sum_bounds(const CyclicSet& a, const CyclicSet& b,
                              const Subgroup& k) {
    LemmaVerdict v;
    v.lemma = "coset_bounds";
    if (a.empty() || b.empty() || !in_single_coset(a, k) ||
        2 * a.size() < k.order) {
        v.detail = "precondition failed (A not half-dense in one K-coset)";
        return v;
    }
    v.hypothesis_holds = true;
    CyclicSet ab = sumset(a, b);
    bool part_i = b.size() <= k.order - a.size() || ab.size() >= k.order;
    bool part_ii = b.size() <= 2 * (k.order - a.size()) ||
                   in_single_coset(b, k) || ab.size() >= a.size() + k.order;
    v.conclusion_holds = part_i && part_ii;
    v.witness = json{{"K_order", k.order}, {"sum_size", ab.size()}};
    return v;
}

u64 unique_differences(const CyclicSet& a) {
    u64 n = a.modulus();
    std::vector<u64> r(n, 0);
    for (u64 x : a.elements())
        for (u64 y : a.elements()) {
            u64 d = x >= y ? x - y : x + n - y;
            ++r[d];
        }
    u64 count = 0;
    for (u64 c : r)
        if (c == 1) ++count;
    return count;
}

LemmaVerdict mantel_verdict(const CyclicSet& a) {
    if (a.empty()) throw std::invalid_argument("mantel_verdict: empty set");
    LemmaVerdict v;
    v.lemma = "mantel";
    u64 two_a = double_set(a).size();
    v.hypothesis_holds = two_a + 4 <= 3 * a.size();
    if (!v.hypothesis_holds) return v;
    u64 uniq = unique_differences(a);
    // Triangle-free difference graph: at most floor(|A|^2/4) edges, and each
    // edge {a,b} contributes the two differences a-b and b-a.
    v.conclusion_holds = uniq <= 2 * (a.size() * a.size() / 4);
    v.witness = json{{"unique_diffs", uniq}, {"doubling", two_a}};
    return v;
}

u64 integer_doubling(const std::vector<i64>& a) {
    std::vector<i64> sums;
    sums.reserve(a.size() * a.size());
    for (i64 x : a)
        for (i64 y : a) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums.size();
}

u64 min_integer_ap_len(const std::vector<i64>& a) {
    std::vector<i64> s(a);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() <= 1) return s.size();
    i64 g = 0;
    for (i64 x : s) g = std::gcd(g, x - s.front());
    return static_cast<u64>((s.back() - s.front()) / g) + 1;
}

LemmaVerdict freiman_3n3_verdict(const std::vector<i64>& a, i64 l) {
    if (a.empty()) throw std::invalid_argument("freiman_3n3: empty set");
    for (i64 x : a)
        if (x > (i64{1} << 30) || x < -(i64{1} << 30))
            throw std::invalid_argument("freiman_3n3: magnitude over 2^30");
    LemmaVerdict v;
    v.lemma = "freiman_3n3";
    std::vector<i64> s(a);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    u64 ap_len = min_integer_ap_len(s);
    v.hypothesis_holds = ap_len > static_cast<u64>(l);
    if (!v.hypothesis_holds) {
        v.detail = "A fits an l-term integer AP";
        return v;
    }
    u64 two_a = integer_doubling(s);
    i64 bound = std::min<i64>(l, 2 * static_cast<i64>(s.size()) - 3) +
                static_cast<i64>(s.size());
    v.conclusion_holds = static_cast<i64>(two_a) >= bound;
    v.witness = json{{"doubling", two_a}, {"bound", bound}, {"ap_len", ap_len}};
    return v;
}

TripleClass classify_triple(const CyclicSet& a) {
    if (a.size() != 3)
        throw std::invalid_argument("classify_triple requires |A| = 3");
    u64 n = a.modulus();
    const auto& e = a.elements();
    // Valid AP differences: d with A = {x, x+d, x+2d} for some ordering.
    // The middle element m satisfies 2m = sum of the other two.
    std::vector<u64> diffs;
    for (int mi = 0; mi < 3; ++mi) {
        u64 m = e[mi], x = e[(mi + 1) % 3], y = e[(mi + 2) % 3];
        if ((2 * m) % n == (x + y) % n) {
            u64 d = (m + n - x % n) % n;
            diffs.push_back(d);
            diffs.push_back((n - d) % n);
        }
    }
    bool has_ord3 = false, has_ord4 = false, has_ord_ge4 = false;
    u64 ap_diff = 0;
    for (u64 d : diffs) {
        u64 ord = additive_order(d, n);
        if (ord == 3) has_ord3 = true;
        if (ord == 4) { has_ord4 = true; ap_diff = d; }
        if (ord >= 4 && ap_diff == 0) ap_diff = d;
        if (ord >= 4) has_ord_ge4 = true;
    }
    if (has_ord3) return {TripleClass::Case::i, 3, n / 3};
    if (has_ord_ge4)
        return {TripleClass::Case::ii, has_ord4 ? u64{4} : u64{5}, ap_diff};
    if (n % 2 == 0) {
        u64 w = n / 2; // the involution
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                if ((e[i] + w) % n == e[j]) {
                    u64 b = e[3 - i - j];
                    if ((2 * b) % n != (2 * e[i] + w) % n)
                        return {TripleClass::Case::iii, 5, w};
                }
            }
    }
    return {TripleClass::Case::iv, 6, 0};
}

LemmaVerdict alpha_verdict(const CyclicSet& triple, u64 beta) {
    if (triple.size() != 3)
        throw std::invalid_argument("alpha_verdict requires |A| = 3");
    u64 n = triple.modulus();
    beta %= n;
    LemmaVerdict v;
    v.lemma = "alpha";
    const auto& al = triple.elements(); // alpha_1 < alpha_2 < alpha_3
    // Precondition: the six sums alpha_i + alpha_j (i <= j) pairwise distinct.
    std::vector<u64> sums;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) sums.push_back((al[i] + al[j]) % n);
    std::sort(sums.begin(), sums.end());
    if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
        v.detail = "pairwise-distinct-sums precondition failed";
        return v;
    }
    if (triple.contains(beta)) {
        v.detail = "beta in the triple";
        return v;
    }
    bool rel = false;
    for (int i = 0; i < 3 && !rel; ++i)
        for (int j = i; j < 3 && !rel; ++j)
            for (int k = 0; k < 3 && !rel; ++k)
                for (int l = k; l < 3 && !rel; ++l)
                    rel = (al[i] + al[j] + n - al[0]) % n == beta &&
                          (al[k] + al[l] + n - al[1]) % n == beta;
    v.hypothesis_holds = rel;
    if (!rel) {
        v.detail = "no index quadruple realizes beta";
        return v;
    }
    CyclicSet four = set_union(triple, CyclicSet(n, {beta}));
    bool is4ap = four.size() == 4 && is_ap(four).has_value();
    bool coset3 = false;
    if (n % 3 == 0) {
        u64 q = n / 3;
        coset3 = al[0] % q == al[1] % q && al[0] % q == beta % q &&
                 al[1] != beta && al[0] != beta;
    }
    // Third branch: {alpha_1, alpha_2, alpha_3, beta} = x + t*{-1, 0, 1, 3}.
    // The squared-doubling relation beta = 2*al[i] - al[i-1] chained through
    // two of the points produces this near-progression, which need not be a
    // four-term progression nor contain a coset of order 3.
    bool tshape = false;
    const auto& fe = four.elements();
    if (four.size() == 4) {
        for (u64 x : fe) {
            for (u64 y : fe) {
                if (y == x) continue;
                u64 t = (y + n - x) % n;
                std::vector<u64> pts = {(x + n - t) % n, x, (x + t) % n,
                                        (x + 3 * t) % n};
                std::sort(pts.begin(), pts.end());
                if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
                    continue;
                if (CyclicSet(n, pts) == four) tshape = true;
            }
        }
    }
    v.conclusion_holds = is4ap || coset3 || tshape;
    v.witness = json{{"beta", beta},
                     {"four_ap", is4ap},
                     {"coset3", coset3},
                     {"near_ap", tshape}};
    return v;
}

namespace {

bool set_is_subgroup(const CyclicSet& s) {
    u64 n = s.modulus();
    return !s.empty() && n % s.size() == 0 &&
           s == Subgroup(n, s.size()).as_set();
}

bool aperiodic(const CyclicSet& s) { return stabilizer(s).order == 1; }

} // namespace

ElementaryType elementary_type(const CyclicSet& a, const CyclicSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("elementary_type: empty input");
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("elementary_type: modulus mismatch");
    u64 n = a.modulus();
    ElementaryType et;

    if (a.size() == 1 || b.size() == 1) {
        et.tag = ElementaryType::Tag::I;
        return et;
    }

    // Type II: common-difference APs with ord(d) >= |A|+|B|-1.
    for (u64 d = 1; d < n; ++d) {
        if (additive_order(d, n) + 1 < a.size() + b.size()) continue;
        if (is_ap_with_diff(a, d) && is_ap_with_diff(b, d)) {
            et.tag = ElementaryType::Tag::II;
            et.diff = d;
            return et;
        }
    }

    auto reps = representation_counts(a, b);

    // Type III: A = g1 + (H1 u {0}), B = g2 - (H2 u {0}), H1 u H2 u {0} a
    // subgroup partition; c = g1+g2 the unique uniquely-representable sum.
    for (u64 g1 : a.elements()) {
        std::vector<u64> h1;
        for (u64 x : a.elements())
            if (x != g1) h1.push_back((x + n - g1) % n);
        for (u64 g2 : b.elements()) {
            std::vector<u64> h2;
            for (u64 y : b.elements())
                if (y != g2) h2.push_back((g2 + n - y) % n);
            std::vector<u64> h(h1);
            h.insert(h.end(), h2.begin(), h2.end());
            h.push_back(0);
            std::sort(h.begin(), h.end());
            if (std::adjacent_find(h.begin(), h.end()) != h.end()) continue;
            CyclicSet hs(n, h);
            if (!set_is_subgroup(hs)) continue;
            u64 c = (g1 + g2) % n;
            bool uniq_ok = reps[c] == 1;
            for (u64 x = 0; x < n && uniq_ok; ++x)
                if (x != c && reps[x] == 1) uniq_ok = false;
            if (!uniq_ok) continue;
            et.tag = ElementaryType::Tag::III;
            et.subgroup_order = hs.size();
            et.g1 = g1;
            et.g2 = g2;
            std::sort(h1.begin(), h1.end());
            std::sort(h2.begin(), h2.end());
            et.part1 = CyclicSet(n, h1);
            et.part2 = CyclicSet(n, h2);
            return et;
        }
    }

    // Type IV: A = g1 + H1, B = g2 - H2, H1 u H2 an aperiodic partition of a
    // subgroup; every sum has >= 2 representations.
    if (n % (a.size() + b.size()) == 0) {
        Subgroup hs(n, a.size() + b.size());
        bool all_multi = true;
        for (u64 x = 0; x < n; ++x)
            if (reps[x] == 1) { all_multi = false; break; }
        if (all_multi) {
            for (u64 g1 = 0; g1 < n; ++g1) {
                CyclicSet h1 = translate(a, n - g1 % n);
                if (!in_single_coset(h1, hs) || !hs.contains(h1.min_element()))
                    continue;
                // h1 subset of the subgroup itself
                bool inside = true;
                for (u64 x : h1.elements())
                    if (!hs.contains(x)) { inside = false; break; }
                if (!inside || !aperiodic(h1)) continue;
                for (u64 g2 = 0; g2 < n; ++g2) {
                    std::vector<u64> h2v;
                    for (u64 y : b.elements()) h2v.push_back((g2 + n - y) % n);
                    std::sort(h2v.begin(), h2v.end());
                    CyclicSet h2(n, h2v);
                    bool inside2 = true;
                    for (u64 x : h2.elements())
                        if (!hs.contains(x)) { inside2 = false; break; }
                    if (!inside2 || !aperiodic(h2)) continue;
                    if (set_intersect(h1, h2).size() != 0) continue;
                    if (set_union(h1, h2).size() != hs.order) continue;
                    et.tag = ElementaryType::Tag::IV;
                    et.subgroup_order = hs.order;
                    et.g1 = g1;
                    et.g2 = g2;
                    et.part1 = h1;
                    et.part2 = h2;
                    return et;
                }
            }
        }
    }
    return et;
}

LemmaVerdict kemperman_verdict(const CyclicSet& a, const CyclicSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("kemperman_verdict: empty input");
    LemmaVerdict v;
    v.lemma = "kemperman";
    u64 n = a.modulus();
    if (n == 1) {
        // The trivial group has no proper subgroup to serve as H.
        v.detail = "trivial ambient group";
        return v;
    }
    CyclicSet ab = sumset(a, b);
    if (ab.size() + 1 > a.size() + b.size()) {
        v.detail = "|A+B| > |A|+|B|-1";
        return v;
    }
    bool unique_rep = false;
    for (u64 c : representation_counts(a, b))
        if (c == 1) { unique_rep = true; break; }
    if (ab.size() == n && !unique_rep) {
        v.detail = "A+B = G and no uniquely representable element";
        return v;
    }
    v.hypothesis_holds = true;
    for (const Subgroup& h : subgroups(n)) {
        if (h.is_full()) continue;
        bool sat_ok = true;
        for (const CyclicSet* c :
             std::initializer_list<const CyclicSet*>{&a, &b, &ab}) {
            if (coset_saturate(*c, h).size() - c->size() + 1 > h.order) {
                sat_ok = false;
                break;
            }
        }
        if (!sat_ok) continue;
        auto qa = quotient_image(a, h).image;
        auto qb = quotient_image(b, h).image;
        ElementaryType et = elementary_type(qa, qb);
        if (et.tag != ElementaryType::Tag::None) {
            v.conclusion_holds = true;
            v.witness = json{{"H_order", h.order},
                             {"type", ElementaryType::tag_name(et.tag)}};
            return v;
        }
    }
    v.detail = "no proper subgroup yields an elementary quotient pair";
    return v;
}

LemmaVerdict kemp_lemma_verdict(const CyclicSet& a, const CyclicSet& b,
                                bool b_rectifiable) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("kemp_lemma_verdict: empty input");
    LemmaVerdict v;
    v.lemma = "kemp_lemma";
    u64 n = a.modulus();
    CyclicSet ab = sumset(a, b);
    bool hyp = ab.size() + 1 <= a.size() + b.size() &&
               a.size() + b.size() + 1 <= n &&
               std::min(a.size(), b.size()) >= 2 && b_rectifiable &&
               !is_ap(b).has_value() && !in_proper_coset(b);
    v.hypothesis_holds = hyp;
    if (!hyp) return v;
    for (const Subgroup& h : subgroups(n)) {
        if (h.is_trivial() || h.is_full()) continue;
        auto parts = coset_split(b, h);
        if (parts.size() != 2) continue;
        if (2 * parts[0].part.size() == h.order + 1 &&
            2 * parts[1].part.size() == h.order + 1) {
            v.conclusion_holds = true;
            v.witness = json{{"H_order", h.order}};
            return v;
        }
    }
    v.detail = "no two-coset half-split subgroup found";
    return v;
}

} // namespace cyc
