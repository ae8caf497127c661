#include "cyc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "cyc/fourier.hpp"
#include "cyc/rectify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyc {

using json = nlohmann::json;

namespace {

constexpr u64 kMaskLimit = 32;

u64 full_mask(u64 n) { return n == 64 ? ~u64{0} : (u64{1} << n) - 1; }

u64 rot_mask(u64 m, u64 g, u64 n) {
    g %= n;
    if (g == 0) return m;
    return ((m << g) | (m >> (n - g))) & full_mask(n);
}

u64 dilate_mask(u64 m, u64 u, u64 n) {
    u64 out = 0;
    for (u64 e = 0; e < n; ++e)
        if (m & (u64{1} << e)) out |= u64{1} << ((e * u) % n);
    return out;
}

u64 min_rot(u64 m, u64 n) {
    u64 best = m;
    for (u64 g = 1; g < n; ++g) best = std::min(best, rot_mask(m, g, n));
    return best;
}

u64 sumset_mask(u64 a, u64 b, u64 n) {
    u64 acc = 0;
    u64 rest = a;
    while (rest) {
        u64 e = static_cast<u64>(std::countr_zero(rest));
        rest &= rest - 1;
        acc |= rot_mask(b, e, n);
    }
    return acc;
}

void check_mask_modulus(u64 n) {
    if (n == 0 || n > kMaskLimit)
        throw std::invalid_argument(
            "canonical-form path requires 1 <= n <= 32");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

u64 min_rotation_mask(u64 mask, u64 n) {
    check_mask_modulus(n);
    return min_rot(mask, n);
}

u64 canonical_mask(u64 mask, u64 n) {
    check_mask_modulus(n);
    u64 best = ~u64{0};
    for (u64 u : units(n))
        best = std::min(best, min_rot(dilate_mask(mask, u, n), n));
    return best;
}

CanonicalClass canonical_form(const CyclicSet& a) {
    u64 n = a.modulus();
    check_mask_modulus(n);
    if (a.empty()) throw std::invalid_argument("canonical_form: empty set");
    u64 m = a.mask();
    std::vector<u64> orbit;
    for (u64 u : units(n)) {
        u64 d = dilate_mask(m, u, n);
        for (u64 g = 0; g < n; ++g) orbit.push_back(rot_mask(d, g, n));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return CanonicalClass{n, CyclicSet::from_mask(n, orbit.front()),
                          orbit.size()};
}

void enumerate_canonical(
    u64 n, u64 size_min, u64 size_max,
    const std::function<void(const CanonicalClass&)>& emit) {
    check_mask_modulus(n);
    u64 total = full_mask(n);
    for (u64 mask = 1; mask <= total; ++mask) {
        u64 pc = static_cast<u64>(std::popcount(mask));
        if (pc < size_min || pc > size_max) continue;
        if (canonical_mask(mask, n) != mask) continue;
        emit(canonical_form(CyclicSet::from_mask(n, mask)));
    }
}

json SweepReport::to_json(bool include_runtime) const {
    json j{{"schema_version", 1},
           {"config", config},
           {"examined", examined},
           {"hypothesis_hits", hypothesis_hits},
           {"min_hypothesis_hits", min_hypothesis_hits},
           {"counts", counts},
           {"violations", violations},
           {"ok", ok()}};
    if (include_runtime) j["runtime_ms"] = runtime_ms;
    return j;
}

void SweepReport::merge(const SweepReport& other) {
    examined += other.examined;
    hypothesis_hits += other.hypothesis_hits;
    for (const auto& [k, v] : other.counts) counts[k] += v;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
}

namespace {

void sort_violations(SweepReport& rep) {
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const json& a, const json& b) {
                  return a.dump() < b.dump();
              });
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// --------------------------------------------------------------- sweeps

void sweep_one_class(const CyclicSet& a, const SweepConfig& cfg,
                     SweepReport& rep) {
    ++rep.examined;
    WitnessSearch ws = find_witness(a, cfg.consts, cfg.mode);
    if (cfg.mode == ClassifyMode::Main) {
        if (!(4 * ws.data.doubled_size < 9 * ws.data.size)) return;
    } else if (!ws.hypothesis_ok) {
        return;
    }
    ++rep.hypothesis_hits;
    if (!ws.has_witness()) {
        rep.violations.push_back(json{{"set", a.str()},
                                      {"size", ws.data.size},
                                      {"doubled", ws.data.doubled_size}});
        return;
    }
    const StructureWitness& best = ws.all[*ws.best];
    ++rep.counts[std::string("witness_") + witness_kind_name(best.kind)];
    if (ws.has_nontrivial()) ++rep.counts["nontrivial_available"];
}

} // namespace

SweepReport sweep_theorem(const SweepConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.config = json{{"op", "sweep"},
                      {"n_max", cfg.n_max},
                      {"mode", cfg.mode == ClassifyMode::Main ? "main" : "aux"},
                      {"C", cfg.consts.dense_c},
                      {"C0", cfg.consts.aux_c0}};
    rep.min_hypothesis_hits = 1;
    int nthreads = resolve_threads(cfg.threads);
    for (u64 n = 1; n <= cfg.n_max; ++n) {
        check_mask_modulus(n);
        i64 total = static_cast<i64>(full_mask(n));
        std::vector<SweepReport> partials(static_cast<std::size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads) if (nthreads > 1)
        {
            SweepReport& local = partials[static_cast<std::size_t>(
                omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512)
            for (i64 mask = 1; mask <= total; ++mask) {
                if (canonical_mask(static_cast<u64>(mask), n) !=
                    static_cast<u64>(mask))
                    continue;
                sweep_one_class(CyclicSet::from_mask(n, static_cast<u64>(mask)),
                                cfg, local);
            }
        }
#else
        for (i64 mask = 1; mask <= total; ++mask) {
            if (canonical_mask(static_cast<u64>(mask), n) !=
                static_cast<u64>(mask))
                continue;
            sweep_one_class(CyclicSet::from_mask(n, static_cast<u64>(mask)),
                            cfg, partials[0]);
        }
#endif
        for (const auto& p : partials) rep.merge(p);
    }
    sort_violations(rep);
    rep.runtime_ms = elapsed_ms(t0);
    return rep;
}

// ------------------------------------------------------------ lemma suites

namespace {

std::vector<u64> canonical_masks(u64 n, u64 smin, u64 smax) {
    std::vector<u64> out;
    enumerate_canonical(n, smin, smax, [&](const CanonicalClass& c) {
        out.push_back(c.representative.mask());
    });
    return out;
}

std::vector<u64> rotation_reps(u64 n, u64 smin = 1, u64 smax = 64) {
    std::vector<u64> out;
    u64 total = full_mask(n);
    for (u64 mask = 1; mask <= total; ++mask) {
        u64 pc = static_cast<u64>(std::popcount(mask));
        if (pc < smin || pc > smax) continue;
        if (min_rot(mask, n) == mask) out.push_back(mask);
    }
    return out;
}

CyclicSet random_set(std::mt19937_64& rng, u64 n, u64 size) {
    std::vector<u64> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (u64 i = 0; i < size; ++i) {
        std::uniform_int_distribution<u64> pick(i, n - 1);
        std::swap(v[i], v[pick(rng)]);
    }
    v.resize(size);
    return CyclicSet(n, std::move(v));
}

void record(SweepReport& rep, const LemmaVerdict& v, const json& instance) {
    ++rep.examined;
    if (!v.hypothesis_holds) {
        ++rep.counts["vacuous"];
        return;
    }
    ++rep.hypothesis_hits;
    if (v.violated()) {
        json j = instance;
        j["verdict"] = v.to_json();
        rep.violations.push_back(j);
    } else {
        ++rep.counts["pass"];
    }
}

void record_bool(SweepReport& rep, bool hypothesis, bool conclusion,
                 const json& instance) {
    ++rep.examined;
    if (!hypothesis) {
        ++rep.counts["vacuous"];
        return;
    }
    ++rep.hypothesis_hits;
    if (conclusion)
        ++rep.counts["pass"];
    else
        rep.violations.push_back(instance);
}

using PairFn = std::function<void(const CyclicSet&, const CyclicSet&,
                                  SweepReport&)>;

// Exhaustive pair domain: A over affine-canonical representatives, B over
// translation representatives.  Every affine pair orbit is covered.
void for_each_pair(u64 n_max, SweepReport& rep, const PairFn& fn) {
    for (u64 n = 1; n <= n_max; ++n) {
        auto as = canonical_masks(n, 1, n);
        auto bs = rotation_reps(n);
        for (u64 am : as) {
            CyclicSet a = CyclicSet::from_mask(n, am);
            for (u64 bm : bs) fn(a, CyclicSet::from_mask(n, bm), rep);
        }
    }
}

void random_pairs(u64 n_max, u64 trials, u64 seed, SweepReport& rep,
                  const PairFn& fn) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> pick_n(1, n_max);
    for (u64 t = 0; t < trials; ++t) {
        u64 n = pick_n(rng);
        std::uniform_int_distribution<u64> pick_size(1, n);
        CyclicSet a = random_set(rng, n, pick_size(rng));
        CyclicSet b = random_set(rng, n, pick_size(rng));
        fn(a, b, rep);
    }
}

json pair_instance(const CyclicSet& a, const CyclicSet& b) {
    return json{{"A", a.str()}, {"B", b.str()}};
}

// Declared hypothesis-hit floors; a suite run below its floor fails even
// with zero violations.  Values pinned from the deterministic default
// configuration of each suite.
const std::map<std::string, u64>& hit_floors() {
    // Exact hypothesis-hit counts of the default (deterministic) domains.
    static const std::map<std::string, u64> floors = {
        {"kneser", 167683},     {"olson", 167683},   {"consol", 135461},
        {"vsds", 510},          {"mantel", 449},     {"triple", 31465},
        {"alpha", 625},         {"rect2a", 133},     {"kemp", 26083},
        {"kemp_lemma", 9},      {"elementary", 7234}, {"combo", 164},
        {"katz_koester", 2311}, {"energy", 10000},   {"arc", 10000},
        {"coset_bounds", 111291}};
    return floors;
}

SweepReport suite_kneser_like(const SuiteConfig& cfg, const PairFn& fn) {
    SweepReport rep;
    u64 n_ex = cfg.n_max ? cfg.n_max : 12;
    u64 trials = cfg.trials ? cfg.trials : 100000;
    for_each_pair(n_ex, rep, fn);
    random_pairs(40, trials, cfg.seed, rep, fn);
    return rep;
}

SweepReport suite_vsds(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 16;
    for (u64 n = 1; n <= n_max; ++n) {
        enumerate_canonical(n, 1, n, [&](const CanonicalClass& c) {
            const CyclicSet& a = c.representative;
            bool lhs = vsds_condition(a);
            bool rhs = false;
            for (const Subgroup& h : subgroups(n))
                if (in_single_coset(a, h) && 3 * a.size() > 2 * h.order) {
                    rhs = true;
                    break;
                }
            // The biconditional is the assertion; hypothesis = either side.
            json inst{{"set", a.str()}, {"lhs", lhs}, {"rhs", rhs}};
            record_bool(rep, lhs || rhs, lhs == rhs, inst);
            if (lhs) {
                LemmaVerdict v = is_vsds(a);
                record(rep, v, json{{"set", a.str()}});
            }
        });
    }
    return rep;
}

SweepReport suite_mantel(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 16;
    for (u64 n = 1; n <= n_max; ++n) {
        enumerate_canonical(n, 1, 6, [&](const CanonicalClass& c) {
            record(rep, mantel_verdict(c.representative),
                   json{{"set", c.representative.str()}});
        });
    }
    return rep;
}

SweepReport suite_triple(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 30;
    for (u64 n = 3; n <= n_max; ++n) {
        for (u64 i = 0; i < n; ++i)
            for (u64 j = i + 1; j < n; ++j)
                for (u64 k = j + 1; k < n; ++k) {
                    CyclicSet a(n, {i, j, k});
                    TripleClass tc = classify_triple(a);
                    u64 actual = double_set(a).size();
                    record_bool(rep, true, tc.predicted_doubling == actual,
                                json{{"set", a.str()},
                                     {"predicted", tc.predicted_doubling},
                                     {"actual", actual}});
                }
    }
    return rep;
}

SweepReport suite_alpha(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 15;
    for (u64 n = 3; n <= n_max; ++n) {
        for (u64 i = 0; i < n; ++i)
            for (u64 j = i + 1; j < n; ++j)
                for (u64 k = j + 1; k < n; ++k) {
                    CyclicSet a(n, {i, j, k});
                    for (u64 beta = 0; beta < n; ++beta)
                        record(rep, alpha_verdict(a, beta),
                               json{{"set", a.str()}, {"beta", beta}});
                }
    }
    return rep;
}

SweepReport suite_rect2a(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 14;
    for (u64 n = 1; n <= n_max; ++n) {
        enumerate_canonical(n, 1, 6, [&](const CanonicalClass& c) {
            const CyclicSet& a = c.representative;
            RectifyVerdict rv = is_rectifiable(a);
            record(rep, rect_coset_bound_verdict(a, rv.rectifiable),
                   json{{"set", a.str()}});
        });
    }
    return rep;
}

SweepReport suite_kemp(const SuiteConfig& cfg) {
    return suite_kneser_like(
        SuiteConfig{cfg.suite, cfg.n_max ? cfg.n_max : 14,
                    cfg.trials ? cfg.trials : 0, cfg.seed, cfg.threads},
        [](const CyclicSet& a, const CyclicSet& b, SweepReport& rep) {
            record(rep, kemperman_verdict(a, b), pair_instance(a, b));
        });
}

SweepReport suite_kemp_lemma(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 14;
    std::unordered_map<u64, bool> rect_memo; // key: (n << 32) | mask
    auto b_rect = [&](const CyclicSet& b) {
        u64 key = (b.modulus() << 32) | b.mask();
        auto it = rect_memo.find(key);
        if (it != rect_memo.end()) return it->second;
        bool r = is_rectifiable(b, 12).rectifiable;
        rect_memo.emplace(key, r);
        return r;
    };
    for_each_pair(n_max, rep,
                  [&](const CyclicSet& a, const CyclicSet& b, SweepReport& r) {
                      u64 n = a.modulus();
                      // Cheap hypothesis pre-filters before rectifiability.
                      if (a.size() + b.size() + 1 > n ||
                          std::min(a.size(), b.size()) < 2 ||
                          sumset(a, b).size() + 1 > a.size() + b.size() ||
                          is_ap(b).has_value() || in_proper_coset(b)) {
                          ++r.examined;
                          ++r.counts["vacuous"];
                          return;
                      }
                      record(r, kemp_lemma_verdict(a, b, b_rect(b)),
                             pair_instance(a, b));
                  });
    return rep;
}

bool elementary_sound(const CyclicSet& a, const CyclicSet& b,
                      const ElementaryType& et) {
    u64 n = a.modulus();
    switch (et.tag) {
        case ElementaryType::Tag::I:
            return a.size() == 1 || b.size() == 1;
        case ElementaryType::Tag::II:
            return is_ap_with_diff(a, et.diff) &&
                   is_ap_with_diff(b, et.diff) &&
                   additive_order(et.diff, n) + 1 >= a.size() + b.size();
        case ElementaryType::Tag::III: {
            CyclicSet zero(n, {0});
            CyclicSet h1z = set_union(et.part1, zero);
            CyclicSet h2z = set_union(et.part2, zero);
            if (translate(h1z, et.g1) != a) return false;
            if (translate(dilate(h2z, n - 1), et.g2) != b) return false;
            if (set_intersect(et.part1, et.part2).size() != 0) return false;
            CyclicSet h = set_union(h1z, et.part2);
            return h.size() == et.subgroup_order &&
                   n % h.size() == 0 &&
                   h == Subgroup(n, h.size()).as_set();
        }
        case ElementaryType::Tag::IV: {
            if (translate(et.part1, et.g1) != a) return false;
            if (translate(dilate(et.part2, n - 1), et.g2) != b) return false;
            if (set_intersect(et.part1, et.part2).size() != 0) return false;
            if (stabilizer(et.part1).order != 1 ||
                stabilizer(et.part2).order != 1)
                return false;
            CyclicSet h = set_union(et.part1, et.part2);
            return h.size() == et.subgroup_order && n % h.size() == 0 &&
                   h == Subgroup(n, h.size()).as_set();
        }
        default:
            return true;
    }
}

SweepReport suite_elementary(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 14;
    for_each_pair(n_max, rep,
                  [](const CyclicSet& a, const CyclicSet& b, SweepReport& r) {
                      ElementaryType et = elementary_type(a, b);
                      bool hyp = et.tag != ElementaryType::Tag::None;
                      json inst = pair_instance(a, b);
                      inst["type"] = ElementaryType::tag_name(et.tag);
                      record_bool(r, hyp, elementary_sound(a, b, et), inst);
                  });
    return rep;
}

SweepReport suite_combo(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 16;
    std::unordered_map<u64, bool> rect_memo;
    auto image_rect = [&](const CyclicSet& img) {
        u64 key = (img.modulus() << 32) | img.mask();
        auto it = rect_memo.find(key);
        if (it != rect_memo.end()) return it->second;
        bool r = is_rectifiable(img, 16).rectifiable;
        rect_memo.emplace(key, r);
        return r;
    };
    for (u64 n = 1; n <= n_max; ++n) {
        enumerate_canonical(n, 1, n, [&](const CanonicalClass& c) {
            const CyclicSet& a = c.representative;
            DoublingData d = doubling(a);
            for (const Subgroup& l : subgroups(n)) {
                auto img = quotient_image(a, l).image;
                u64 s = img.size();
                // Doubling hypothesis first; rectifiability is the
                // expensive leg.
                if (!(s * d.doubled_size < 3 * (s - 1) * d.size)) {
                    ++rep.examined;
                    ++rep.counts["vacuous"];
                    continue;
                }
                record(rep, combo_verdict(a, l, image_rect(img)),
                       json{{"set", a.str()}, {"L_order", l.order}});
            }
        });
    }
    return rep;
}

SweepReport suite_katz_koester(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 12;
    for (u64 n = 1; n <= n_max; ++n) {
        enumerate_canonical(n, 1, n, [&](const CanonicalClass& c) {
            record(rep, katz_koester_verdict(c.representative),
                   json{{"set", c.representative.str()}});
        });
    }
    u64 trials = cfg.trials ? cfg.trials : 2000;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<u64> pick_n(1, 64);
    for (u64 t = 0; t < trials; ++t) {
        u64 n = pick_n(rng);
        std::uniform_int_distribution<u64> pick_size(1, n);
        CyclicSet b = random_set(rng, n, pick_size(rng));
        record(rep, katz_koester_verdict(b), json{{"set", b.str()}});
    }
    return rep;
}

SweepReport suite_energy(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 trials = cfg.trials ? cfg.trials : 10000;
    u64 n_max = cfg.n_max ? cfg.n_max : 128;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<u64> pick_n(1, n_max);
    for (u64 t = 0; t < trials; ++t) {
        u64 n = pick_n(rng);
        std::uniform_int_distribution<u64> pick_size(1, n);
        CyclicSet b = random_set(rng, n, pick_size(rng));
        u64 e = energy(b);
        double ef = energy_fourier(b);
        double rel = std::abs(ef - static_cast<double>(e)) /
                     static_cast<double>(e);
        bool ok = rel <= 1e-4 && energy_bound_holds(b);
        record_bool(rep, true, ok,
                    json{{"set", b.str()}, {"energy", e}, {"fourier", ef}});
    }
    return rep;
}

SweepReport suite_arc(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 trials = cfg.trials ? cfg.trials : 10000;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<u64> pick_size(1, 64);
    std::uniform_real_distribution<double> pick_angle(0.0,
                                                      2 * std::numbers::pi);
    for (u64 t = 0; t < trials; ++t) {
        u64 sz = pick_size(rng);
        std::vector<std::complex<double>> pts;
        for (u64 i = 0; i < sz; ++i) {
            double a = pick_angle(rng);
            pts.emplace_back(std::cos(a), std::sin(a));
        }
        ArcResult arc = arc_concentrate(pts);
        double bound = (1.0 + arc.eta) / 2.0 * static_cast<double>(sz);
        bool ok = static_cast<double>(arc.members.size()) + 1e-9 >= bound;
        record_bool(rep, true, ok,
                    json{{"size", sz},
                         {"eta", arc.eta},
                         {"members", arc.members.size()}});
    }
    return rep;
}

SweepReport suite_coset_bounds(const SuiteConfig& cfg) {
    SweepReport rep;
    u64 n_max = cfg.n_max ? cfg.n_max : 12;
    for (u64 n = 1; n <= n_max; ++n) {
        auto bs = rotation_reps(n);
        for (const Subgroup& k : subgroups(n)) {
            // A inside K itself (translation representative of any coset),
            // half-dense, reduced modulo rotation within K.
            u64 h = k.order;
            auto k_elems = k.as_set().elements();
            u64 amax = full_mask(h);
            for (u64 am = 1; am <= amax; ++am) {
                u64 pc = static_cast<u64>(std::popcount(am));
                if (2 * pc < h) continue;
                if (min_rot(am, h) != am) continue;
                std::vector<u64> elems;
                for (u64 i = 0; i < h; ++i)
                    if (am & (u64{1} << i)) elems.push_back(k_elems[i]);
                CyclicSet a(n, elems);
                for (u64 bm : bs)
                    record(rep,
                           coset_sum_bounds(a, CyclicSet::from_mask(n, bm), k),
                           json{{"A", a.str()},
                                {"K_order", h},
                                {"B_mask", bm}});
            }
        }
    }
    return rep;
}

} // namespace

std::vector<std::string> lemma_suite_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : hit_floors()) ids.push_back(k);
    return ids;
}

SweepReport lemma_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport rep;
    const std::string& s = cfg.suite;
    if (s == "kneser") {
        rep = suite_kneser_like(
            cfg, [](const CyclicSet& a, const CyclicSet& b, SweepReport& r) {
                record(r, kneser_verdict(a, b), pair_instance(a, b));
            });
    } else if (s == "olson") {
        rep = suite_kneser_like(
            cfg, [](const CyclicSet& a, const CyclicSet& b, SweepReport& r) {
                record(r, olson_verdict(a, b), pair_instance(a, b));
            });
    } else if (s == "consol") {
        rep = suite_kneser_like(
            cfg, [](const CyclicSet& a, const CyclicSet& b, SweepReport& r) {
                record(r, consol_verdict(a, b), pair_instance(a, b));
            });
    } else if (s == "vsds") {
        rep = suite_vsds(cfg);
    } else if (s == "mantel") {
        rep = suite_mantel(cfg);
    } else if (s == "triple") {
        rep = suite_triple(cfg);
    } else if (s == "alpha") {
        rep = suite_alpha(cfg);
    } else if (s == "rect2a") {
        rep = suite_rect2a(cfg);
    } else if (s == "kemp") {
        rep = suite_kemp(cfg);
    } else if (s == "kemp_lemma") {
        rep = suite_kemp_lemma(cfg);
    } else if (s == "elementary") {
        rep = suite_elementary(cfg);
    } else if (s == "combo") {
        rep = suite_combo(cfg);
    } else if (s == "katz_koester") {
        rep = suite_katz_koester(cfg);
    } else if (s == "energy") {
        rep = suite_energy(cfg);
    } else if (s == "arc") {
        rep = suite_arc(cfg);
    } else if (s == "coset_bounds") {
        rep = suite_coset_bounds(cfg);
    } else {
        throw std::invalid_argument("unknown lemma suite: " + s);
    }
    rep.config = json{{"op", "lemmas"},
                      {"suite", s},
                      {"n_max", cfg.n_max},
                      {"trials", cfg.trials},
                      {"seed", cfg.seed}};
    if (cfg.n_max == 0 && cfg.trials == 0)
        rep.min_hypothesis_hits = hit_floors().at(s);
    sort_violations(rep);
    rep.runtime_ms = elapsed_ms(t0);
    return rep;
}

std::vector<ExtremalRow> extremal_scan(u64 n, u64 size_min, u64 size_max) {
    std::vector<ExtremalRow> rows;
    for (u64 k = size_min; k <= std::min(size_max, n); ++k) {
        std::optional<ExtremalRow> best;
        enumerate_canonical(n, k, k, [&](const CanonicalClass& c) {
            u64 d = double_set(c.representative).size();
            if (!best || d < best->min_doubling)
                best = ExtremalRow{k, d, c.representative};
        });
        if (best) rows.push_back(*best);
    }
    return rows;
}

} // namespace cyc
