#include "cyc/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyc {

using json = nlohmann::json;

DoublingData doubling(const CyclicSet& a) {
    if (a.empty()) throw std::invalid_argument("doubling: empty set");
    u64 two = double_set(a).size();
    return DoublingData{a.size(), two,
                        Rat(static_cast<i64>(two), static_cast<i64>(a.size())),
                        two - a.size()};
}

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::DenseCoset: return "dense_coset";
        case WitnessKind::Regular: return "regular";
        case WitnessKind::Singular: return "singular";
        default: return "none";
    }
}

json StructureWitness::to_json() const {
    json j{{"variant", witness_kind_name(kind)},
           {"modulus", modulus},
           {"subgroup_order", subgroup_order}};
    if (kind == WitnessKind::DenseCoset) {
        j["density"] = json{{"num", density.num}, {"den", density.den}};
        j["trivial_dense"] = trivial_dense;
        j["aux_increment"] = aux_increment;
    } else if (kind == WitnessKind::Regular) {
        j["progression"] = json{{"start", progression.start},
                                {"diff", progression.diff},
                                {"length", progression.length}};
    } else if (kind == WitnessKind::Singular) {
        j["coset_reps"] = coset_reps;
    }
    return j;
}

bool WitnessSearch::has_nontrivial() const {
    return std::any_of(all.begin(), all.end(), [](const StructureWitness& w) {
        return (w.kind == WitnessKind::Regular ||
                w.kind == WitnessKind::Singular) ||
               (w.kind == WitnessKind::DenseCoset && !w.trivial_dense &&
                !w.aux_increment);
    });
}

namespace {

// Regular-case cover for one subgroup: the minimal AP cover of the
// quotient image, padded to length 2 when the image is a single coset.
std::optional<ApCover> regular_cover(const CyclicSet& a, const Subgroup& h) {
    u64 n = a.modulus();
    u64 m = h.index();
    if (m < 2) return std::nullopt;
    auto cover = min_ap_cover(a, &h); // lives in Z_m
    if (!cover) return std::nullopt;
    if (cover->length == 1) return ApCover{n, cover->start, 1, 2};
    return ApCover{n, cover->start, cover->diff, cover->length};
}

} // namespace

WitnessSearch find_witness(const CyclicSet& a, const ClassifyConstants& consts,
                           ClassifyMode mode) {
    if (a.empty()) throw std::invalid_argument("find_witness: empty set");
    WitnessSearch ws;
    ws.data = doubling(a);
    u64 n = a.modulus();
    u64 delta = ws.data.delta;

    if (mode == ClassifyMode::Aux) {
        if (in_proper_coset(a)) {
            ws.hypothesis_ok = false;
            ws.hypothesis_note = "A is contained in a proper coset";
            return ws;
        }
        if (!(4 * ws.data.doubled_size < 9 * ws.data.size &&
              ws.data.doubled_size < n)) {
            ws.hypothesis_ok = false;
            ws.hypothesis_note = "|2A| >= min{(9/4)|A|, n}";
            return ws;
        }
        if (delta * consts.aux_c0 >= n) {
            StructureWitness w;
            w.kind = WitnessKind::DenseCoset;
            w.modulus = n;
            w.subgroup_order = n;
            w.aux_increment = true;
            ws.all.push_back(w);
        }
    }

    for (const Subgroup& h : subgroups(n)) {
        auto q = quotient_image(a, h);
        if (mode == ClassifyMode::Main && q.image.size() == 1 &&
            a.size() * consts.dense_c > h.order) {
            StructureWitness w;
            w.kind = WitnessKind::DenseCoset;
            w.modulus = n;
            w.subgroup_order = h.order;
            w.density = Rat(static_cast<i64>(a.size()),
                            static_cast<i64>(h.order));
            w.trivial_dense = h.is_full();
            ws.all.push_back(w);
        }
        if (h.is_full()) continue;
        if (auto p = regular_cover(a, h)) {
            if ((p->length - 1) * h.order <= delta) {
                StructureWitness w;
                w.kind = WitnessKind::Regular;
                w.modulus = n;
                w.subgroup_order = h.order;
                w.progression = *p;
                ws.all.push_back(w);
            }
        }
        if (q.image.size() == 3 && !is_ap(q.image).has_value() &&
            3 * h.order <= delta) {
            StructureWitness w;
            w.kind = WitnessKind::Singular;
            w.modulus = n;
            w.subgroup_order = h.order;
            auto parts = coset_split(a, h);
            for (int i = 0; i < 3; ++i)
                w.coset_reps[i] = parts[i].representative;
            ws.all.push_back(w);
        }
    }

    for (const auto& w : ws.all)
        if (!verify_witness(a, w, consts, mode))
            throw std::logic_error("find_witness produced an invalid witness");

    // Best-witness priority: Regular with the smallest increment
    // (|P|-1)|H|, then Singular with the largest H, then dense.
    auto rank = [&](const StructureWitness& w) {
        u64 inc = (w.progression.length - 1) * w.subgroup_order;
        switch (w.kind) {
            case WitnessKind::Regular:
                return std::tuple<int, u64, u64, u64>{0, inc, w.subgroup_order,
                                                      w.progression.diff};
            case WitnessKind::Singular:
                return std::tuple<int, u64, u64, u64>{
                    1, n - w.subgroup_order, 0, 0};
            default:
                return std::tuple<int, u64, u64, u64>{
                    w.aux_increment ? 3 : 2, w.subgroup_order, 0, 0};
        }
    };
    for (std::size_t i = 0; i < ws.all.size(); ++i)
        if (!ws.best || rank(ws.all[i]) < rank(ws.all[*ws.best])) ws.best = i;
    return ws;
}

bool verify_witness(const CyclicSet& a, const StructureWitness& w,
                    const ClassifyConstants& consts, ClassifyMode mode) {
    if (w.kind == WitnessKind::None)
        throw std::invalid_argument("verify_witness: None variant");
    if (a.empty() || w.modulus != a.modulus())
        throw std::invalid_argument("verify_witness: malformed witness");
    u64 n = a.modulus();
    u64 delta = double_set(a).size() - a.size();

    switch (w.kind) {
        case WitnessKind::DenseCoset: {
            if (w.aux_increment) {
                if (mode != ClassifyMode::Aux) return false;
                return delta * consts.aux_c0 >= n;
            }
            if (n % w.subgroup_order != 0) return false;
            Subgroup h(n, w.subgroup_order);
            if (!in_single_coset(a, h)) return false;
            if (!(a.size() * consts.dense_c > h.order)) return false;
            return w.density == Rat(static_cast<i64>(a.size()),
                                    static_cast<i64>(h.order)) &&
                   w.trivial_dense == h.is_full();
        }
        case WitnessKind::Regular: {
            if (n % w.subgroup_order != 0 || w.subgroup_order == n)
                return false;
            Subgroup h(n, w.subgroup_order);
            const ApCover& p = w.progression;
            if (p.modulus != n || p.length < 2) return false;
            if (!p.distinct_cosets(h)) return false;
            if (!((p.length - 1) * h.order <= delta)) return false;
            // A inside P + H.
            CyclicSet cover = p.covered();
            u64 m = h.index();
            std::vector<char> cls(m, 0);
            for (u64 e : cover.elements()) cls[e % m] = 1;
            for (u64 e : a.elements())
                if (!cls[e % m]) return false;
            return true;
        }
        case WitnessKind::Singular: {
            if (n % w.subgroup_order != 0 || w.subgroup_order == n)
                return false;
            Subgroup h(n, w.subgroup_order);
            auto q = quotient_image(a, h);
            if (q.image.size() != 3) return false;
            if (is_ap(q.image).has_value()) return false;
            if (!(3 * h.order <= delta)) return false;
            // Representatives must name exactly the three cosets A meets.
            u64 m = h.index();
            std::vector<u64> reps;
            for (u64 r : w.coset_reps) reps.push_back(r % m);
            std::sort(reps.begin(), reps.end());
            reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
            return reps == q.image.elements();
        }
        default:
            return false;
    }
}

LemmaVerdict combo_verdict(const CyclicSet& a, const Subgroup& l,
                           bool quotient_rectifiable) {
    if (a.empty()) throw std::invalid_argument("combo_verdict: empty set");
    if (l.modulus != a.modulus())
        throw std::invalid_argument("combo_verdict: modulus mismatch");
    LemmaVerdict v;
    v.lemma = "combo";
    if (!quotient_rectifiable) {
        v.detail = "phi_L(A) not rectifiable";
        return v;
    }
    u64 n = a.modulus();
    u64 s = quotient_image(a, l).image.size();
    DoublingData d = doubling(a);
    // |2A| < 3(1 - 1/s)|A|  <=>  s|2A| < 3(s-1)|A|.
    if (!(s * d.doubled_size < 3 * (s - 1) * d.size)) {
        v.detail = "doubling hypothesis not met";
        return v;
    }
    v.hypothesis_holds = true;
    for (const Subgroup& h : subgroups(n)) {
        if (h.is_full()) continue;
        auto p = regular_cover(a, h);
        if (!p) continue;
        if ((p->length - 1) * h.order <= d.delta &&
            p->distinct_cosets(h)) {
            v.conclusion_holds = true;
            v.witness = json{{"H_order", h.order},
                             {"P_length", p->length},
                             {"P_diff", p->diff},
                             {"P_start", p->start}};
            return v;
        }
    }
    v.detail = "no regular coset-progression cover found";
    return v;
}

} // namespace cyc
