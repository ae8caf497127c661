#include "cyc/cyclic_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cyc {

namespace {

// Dense bit-vector sumsets below this modulus; sorted sparse lists above.
constexpr u64 kDenseBound = 4096;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

void require_same_modulus(const CyclicSet& a, const CyclicSet& b) {
    if (a.modulus() != b.modulus())
        fail("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
             std::to_string(b.modulus()));
}

} // namespace

Rat::Rat(i64 n, i64 d) {
    if (d == 0) fail("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CyclicSet::CyclicSet(u64 modulus, std::vector<u64> elements)
    : n_(modulus), elems_(std::move(elements)) {
    if (n_ == 0) fail("modulus must be positive");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] >= n_)
            fail("element " + std::to_string(elems_[i]) +
                 " out of range for modulus " + std::to_string(n_));
        if (i > 0 && elems_[i] == elems_[i - 1])
            fail("duplicate element " + std::to_string(elems_[i]));
    }
}

CyclicSet CyclicSet::parse(const std::string& literal) {
    auto colon = literal.find(':');
    if (colon == std::string::npos)
        fail("set literal missing ':' (expected <n>:<e1>,<e2>,...)");
    auto parse_num = [&](std::size_t pos, std::size_t end) -> u64 {
        if (pos == end) fail("empty number at position " + std::to_string(pos));
        u64 v = 0;
        for (std::size_t i = pos; i < end; ++i) {
            char c = literal[i];
            if (c < '0' || c > '9')
                fail(std::string("invalid character '") + c + "' at position " +
                     std::to_string(i));
            v = v * 10 + static_cast<u64>(c - '0');
        }
        return v;
    };
    u64 n = parse_num(0, colon);
    std::vector<u64> elems;
    std::size_t pos = colon + 1;
    if (pos < literal.size()) {
        while (true) {
            auto comma = literal.find(',', pos);
            std::size_t end = comma == std::string::npos ? literal.size() : comma;
            elems.push_back(parse_num(pos, end));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return CyclicSet(n, std::move(elems));
}

std::string CyclicSet::str() const {
    std::string out = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    return out;
}

bool CyclicSet::contains(u64 e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

u64 CyclicSet::min_element() const {
    if (elems_.empty()) fail("min_element of empty set");
    return elems_.front();
}

u64 CyclicSet::mask() const {
    if (n_ > 64) fail("mask() requires modulus <= 64");
    u64 m = 0;
    for (u64 e : elems_) m |= (u64{1} << e);
    return m;
}

CyclicSet CyclicSet::from_mask(u64 modulus, u64 mask) {
    std::vector<u64> elems;
    for (u64 e = 0; e < modulus; ++e)
        if (mask & (u64{1} << e)) elems.push_back(e);
    return CyclicSet(modulus, std::move(elems));
}

Subgroup::Subgroup(u64 m, u64 h) : modulus(m), order(h) {
    if (m == 0 || h == 0 || m % h != 0)
        fail("subgroup order " + std::to_string(h) +
             " does not divide modulus " + std::to_string(m));
}

CyclicSet Subgroup::as_set() const {
    std::vector<u64> elems(order);
    u64 g = generator();
    for (u64 k = 0; k < order; ++k) elems[k] = k * g;
    return CyclicSet(modulus, std::move(elems));
}

CyclicSet ApCover::covered() const {
    std::vector<u64> elems;
    elems.reserve(length);
    std::unordered_set<u64> seen;
    for (u64 i = 0; i < length; ++i) {
        u64 e = (start + i * (diff % modulus)) % modulus;
        if (seen.insert(e).second) elems.push_back(e);
    }
    return CyclicSet(modulus, std::move(elems));
}

bool ApCover::primitive() const { return gcd_u64(diff % modulus, modulus) == 1; }

bool ApCover::distinct_cosets(const Subgroup& h) const {
    if (h.modulus != modulus) fail("ApCover/Subgroup modulus mismatch");
    u64 m = h.index();
    std::unordered_set<u64> seen;
    for (u64 i = 0; i < length; ++i) {
        u64 e = (start + i * (diff % modulus)) % modulus;
        if (!seen.insert(e % m).second) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<u64> units(u64 n) {
    std::vector<u64> us;
    for (u64 u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) us.push_back(u);
    if (n == 1) us.push_back(0); // Z_1: the empty product; identity map
    return us;
}

u64 mod_inverse(u64 u, u64 n) {
    if (n == 1) return 0;
    i64 t = 0, newt = 1;
    i64 r = static_cast<i64>(n), newr = static_cast<i64>(u % n);
    while (newr != 0) {
        i64 q = r / newr;
        std::tie(t, newt) = std::pair<i64, i64>(newt, t - q * newt);
        std::tie(r, newr) = std::pair<i64, i64>(newr, r - q * newr);
    }
    if (r != 1) fail("mod_inverse of non-unit");
    return static_cast<u64>(t < 0 ? t + static_cast<i64>(n) : t);
}

u64 additive_order(u64 d, u64 n) { return n / std::gcd(d % n, n); }

CyclicSet sumset(const CyclicSet& a, const CyclicSet& b) {
    require_same_modulus(a, b);
    u64 n = a.modulus();
    if (a.empty() || b.empty()) return CyclicSet(n, {});
    if (n <= kDenseBound) {
        std::vector<char> hit(n, 0);
        for (u64 x : a.elements())
            for (u64 y : b.elements()) {
                u64 s = x + y;
                if (s >= n) s -= n;
                hit[s] = 1;
            }
        std::vector<u64> elems;
        for (u64 e = 0; e < n; ++e)
            if (hit[e]) elems.push_back(e);
        return CyclicSet(n, std::move(elems));
    }
    std::vector<u64> elems;
    elems.reserve(a.size() * b.size());
    for (u64 x : a.elements())
        for (u64 y : b.elements()) {
            u64 s = x + y;
            if (s >= n) s -= n;
            elems.push_back(s);
        }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return CyclicSet(n, std::move(elems));
}

CyclicSet difference_set(const CyclicSet& a, const CyclicSet& b) {
    require_same_modulus(a, b);
    u64 n = a.modulus();
    std::vector<u64> neg;
    neg.reserve(b.size());
    for (u64 y : b.elements()) neg.push_back(y == 0 ? 0 : n - y);
    return sumset(a, CyclicSet(n, std::move(neg)));
}

CyclicSet translate(const CyclicSet& a, u64 g) {
    u64 n = a.modulus();
    g %= n;
    std::vector<u64> elems;
    elems.reserve(a.size());
    for (u64 e : a.elements()) {
        u64 s = e + g;
        if (s >= n) s -= n;
        elems.push_back(s);
    }
    return CyclicSet(n, std::move(elems));
}

CyclicSet dilate(const CyclicSet& a, u64 u) {
    u64 n = a.modulus();
    u %= n;
    std::vector<u64> elems;
    elems.reserve(a.size());
    for (u64 e : a.elements()) elems.push_back((e * u) % n);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return CyclicSet(n, std::move(elems));
}

CyclicSet set_union(const CyclicSet& a, const CyclicSet& b) {
    require_same_modulus(a, b);
    std::vector<u64> elems;
    std::set_union(a.elements().begin(), a.elements().end(),
                   b.elements().begin(), b.elements().end(),
                   std::back_inserter(elems));
    return CyclicSet(a.modulus(), std::move(elems));
}

CyclicSet set_intersect(const CyclicSet& a, const CyclicSet& b) {
    require_same_modulus(a, b);
    std::vector<u64> elems;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(elems));
    return CyclicSet(a.modulus(), std::move(elems));
}

Subgroup stabilizer(const CyclicSet& s) {
    u64 n = s.modulus();
    if (s.empty()) return Subgroup(n, n); // vacuous periodicity convention
    u64 best = 1;
    for (u64 h : divisors(n)) {
        u64 g = n / h; // generator of the order-h subgroup
        bool fixes = true;
        for (u64 e : s.elements()) {
            u64 t = e + g;
            if (t >= n) t -= n;
            if (!s.contains(t)) { fixes = false; break; }
        }
        if (fixes && h > best) best = h;
    }
    return Subgroup(n, best);
}

std::vector<Subgroup> subgroups(u64 n) {
    std::vector<Subgroup> out;
    for (u64 h : divisors(n)) out.emplace_back(n, h);
    return out;
}

QuotientImage quotient_image(const CyclicSet& a, const Subgroup& h) {
    if (h.modulus != a.modulus()) fail("quotient_image modulus mismatch");
    u64 m = h.index();
    std::vector<u64> elems;
    elems.reserve(a.size());
    for (u64 e : a.elements()) elems.push_back(e % m);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return QuotientImage{a.modulus(), h.order, CyclicSet(m, std::move(elems))};
}

CyclicSet coset_saturate(const CyclicSet& s, const Subgroup& h) {
    if (h.modulus != s.modulus()) fail("coset_saturate modulus mismatch");
    u64 n = s.modulus(), m = h.index();
    std::vector<char> cls(m, 0);
    for (u64 e : s.elements()) cls[e % m] = 1;
    std::vector<u64> elems;
    for (u64 e = 0; e < n; ++e)
        if (cls[e % m]) elems.push_back(e);
    return CyclicSet(n, std::move(elems));
}

std::vector<CosetPart> coset_split(const CyclicSet& a, const Subgroup& h) {
    if (h.modulus != a.modulus()) fail("coset_split modulus mismatch");
    u64 m = h.index();
    std::vector<std::vector<u64>> buckets(m);
    for (u64 e : a.elements()) buckets[e % m].push_back(e);
    std::vector<CosetPart> parts;
    std::vector<std::pair<u64, u64>> order; // (min elem, class)
    for (u64 c = 0; c < m; ++c)
        if (!buckets[c].empty())
            order.emplace_back(*std::min_element(buckets[c].begin(),
                                                 buckets[c].end()), c);
    std::sort(order.begin(), order.end());
    for (auto [rep, c] : order)
        parts.push_back({rep, CyclicSet(a.modulus(), buckets[c])});
    return parts;
}

namespace {

// Minimal cyclic window covering the index set of S along difference d,
// or absent when S does not fit a single <d>-coset.
struct WindowFit {
    u64 length;
    u64 start; // element of S at the window's first position
};

std::optional<WindowFit> fit_window(const CyclicSet& s, u64 d) {
    u64 n = s.modulus();
    u64 g = std::gcd(d, n);
    u64 m = n / g; // additive order of d
    if (s.size() > m) return std::nullopt;
    u64 base = s.min_element();
    u64 dg = d / g;
    u64 inv = mod_inverse(dg % m, m);
    std::vector<std::pair<u64, u64>> idx; // (index, element)
    idx.reserve(s.size());
    for (u64 e : s.elements()) {
        u64 delta = e >= base ? e - base : e + n - base;
        if (delta % g != 0) return std::nullopt; // not in one <d>-coset
        idx.emplace_back(((delta / g) % m) * inv % m, e);
    }
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i].first == idx[i - 1].first) return std::nullopt;
    if (idx.size() == 1) return WindowFit{1, idx[0].second};
    // Largest cyclic gap between consecutive indices determines the window.
    u64 best_gap = 0;
    std::size_t best_at = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        u64 cur = idx[i].first;
        u64 nxt = idx[(i + 1) % idx.size()].first;
        u64 gap = (nxt + m - cur) % m;
        if (gap == 0) gap = m;
        if (gap > best_gap) { best_gap = gap; best_at = i; }
    }
    u64 len = m - best_gap + 1;
    u64 start = idx[(best_at + 1) % idx.size()].second;
    return WindowFit{len, start};
}

} // namespace

std::optional<ApCover> min_ap_cover(const CyclicSet& s, const Subgroup* h) {
    if (h != nullptr) {
        auto q = quotient_image(s, *h);
        return min_ap_cover(q.image, nullptr);
    }
    if (s.empty()) return std::nullopt;
    u64 n = s.modulus();
    if (n == 1) return ApCover{1, 0, 0, 1};
    if (s.size() == 1) return ApCover{n, s.min_element(), 1, 1};
    std::optional<ApCover> best;
    for (u64 d = 1; d < n; ++d) {
        auto fit = fit_window(s, d);
        if (!fit) continue;
        if (!best || fit->length < best->length ||
            (fit->length == best->length &&
             (d < best->diff || (d == best->diff && fit->start < best->start))))
            best = ApCover{n, fit->start, d, fit->length};
    }
    return best;
}

std::optional<ApWitness> is_ap(const CyclicSet& s) {
    if (s.size() < 2) return std::nullopt;
    u64 n = s.modulus();
    for (u64 d = 1; d < n; ++d) {
        auto fit = fit_window(s, d);
        if (fit && fit->length == s.size()) return ApWitness{d, fit->start};
    }
    return std::nullopt;
}

bool is_ap_with_diff(const CyclicSet& s, u64 d) {
    if (s.size() < 2) return false;
    d %= s.modulus();
    if (d == 0) return false;
    auto fit = fit_window(s, d);
    return fit && fit->length == s.size();
}

bool in_single_coset(const CyclicSet& s, const Subgroup& h) {
    return quotient_image(s, h).image.size() <= 1;
}

bool in_proper_coset(const CyclicSet& s) {
    u64 n = s.modulus();
    for (u64 h : divisors(n)) {
        if (h == n) continue;
        if (in_single_coset(s, Subgroup(n, h))) return true;
    }
    return false;
}

} // namespace cyc
