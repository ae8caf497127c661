#include "cyc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyc {

using json = nlohmann::json;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

double FourierProfile::parseval_defect(u64 set_size) const {
    double acc = 0;
    for (const auto& c : coefficients) acc += std::norm(c);
    return std::abs(acc / static_cast<double>(modulus) -
                    static_cast<double>(set_size));
}

FourierProfile dft(const CyclicSet& a, u64 dense_bound) {
    u64 n = a.modulus();
    if (n > dense_bound)
        throw std::invalid_argument("dft: modulus over dense bound");
    FourierProfile out;
    out.modulus = n;
    out.coefficients.resize(n);
    for (u64 k = 0; k < n; ++k) {
        std::complex<double> acc = 0;
        for (u64 e : a.elements()) {
            double ang = kTau * static_cast<double>((k * e) % n) /
                         static_cast<double>(n);
            acc += std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out.coefficients[k] = acc;
    }
    return out;
}

u64 energy(const CyclicSet& b) {
    if (b.empty()) throw std::invalid_argument("energy: empty set");
    auto r = representation_counts(b, b);
    u64 e = 0;
    for (u64 c : r) e += c * c;
    return e;
}

double energy_fourier(const CyclicSet& b, u64 dense_bound) {
    auto prof = dft(b, dense_bound);
    double acc = 0;
    for (const auto& c : prof.coefficients) {
        double m2 = std::norm(c);
        acc += m2 * m2;
    }
    return acc / static_cast<double>(b.modulus());
}

bool energy_bound_holds(const CyclicSet& b) {
    u64 e = energy(b);
    u64 s = b.size();
    return e * double_set(b).size() >= s * s * s * s;
}

CyclicSet shared_diff(const CyclicSet& b, u64 x) {
    return set_intersect(b, translate(b, x));
}

LemmaVerdict katz_koester_verdict(const CyclicSet& b) {
    LemmaVerdict v;
    v.lemma = "katz_koester";
    v.hypothesis_holds = true;
    u64 n = b.modulus();
    CyclicSet twob = double_set(b);
    u64 total = 0;
    for (u64 x = 0; x < n; ++x) {
        CyclicSet bx = shared_diff(b, x);
        total += bx.size();
        if (bx.empty()) continue;
        CyclicSet lhs = sumset(bx, b);
        CyclicSet rhs = shared_diff(twob, x);
        for (u64 e : lhs.elements()) {
            if (!rhs.contains(e)) {
                v.conclusion_holds = false;
                v.witness = json{{"x", x}, {"element", e}};
                return v;
            }
        }
    }
    v.conclusion_holds = total == b.size() * b.size();
    if (!v.conclusion_holds)
        v.witness = json{{"diff_mass", total}, {"expected", b.size() * b.size()}};
    return v;
}

ArcResult arc_concentrate(const std::vector<std::complex<double>>& points) {
    if (points.empty())
        throw std::invalid_argument("arc_concentrate: empty input");
    std::complex<double> total = 0;
    std::vector<double> angle(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(std::abs(points[i]) - 1.0) > 1e-9)
            throw std::invalid_argument("arc_concentrate: non-unit input");
        total += points[i];
        double a = std::arg(points[i]);
        if (a < 0) a += kTau;
        angle[i] = a;
    }
    double eta = std::abs(total) / static_cast<double>(points.size());

    // The optimal open semicircle can start just before some point; window
    // [theta_j, theta_j + pi) realizes it with genuinely open endpoints
    // (points exactly at theta_j + pi are excluded).
    std::size_t best_j = 0, best_count = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        std::size_t count = 0;
        for (double a : angle) {
            double d = a - angle[j];
            if (d < 0) d += kTau;
            if (d < std::numbers::pi) ++count;
        }
        if (count > best_count) { best_count = count; best_j = j; }
    }
    ArcResult out;
    out.eta = eta;
    out.center = std::fmod(angle[best_j] + std::numbers::pi / 2, kTau);
    for (std::size_t i = 0; i < points.size(); ++i) {
        double d = angle[i] - angle[best_j];
        if (d < 0) d += kTau;
        if (d < std::numbers::pi) out.members.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

u64 euler_phi(u64 d) {
    u64 result = d, m = d;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace

Rat phi36(u64 n) {
    if (n == 0) throw std::invalid_argument("phi36: n must be positive");
    u64 acc = 0;
    for (u64 d = 1; d <= 36; ++d)
        if (n % d == 0) acc += euler_phi(d);
    return Rat(static_cast<i64>(acc), static_cast<i64>(n));
}

PhiScanReport phi_scan(u64 lo, u64 hi, Rat eps,
                       const std::function<void(const PhiScanRow&)>& row_sink) {
    PhiScanReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.eps = eps;
    for (u64 n = lo + 1; n <= hi; ++n) {
        Rat phi = phi36(n);
        bool ok = phi < eps; // exact rational comparison
        ++rep.checked;
        if (!ok) rep.violations.push_back(n);
        if (row_sink) row_sink(PhiScanRow{n, phi.num, phi.den, ok});
    }
    return rep;
}

std::optional<BiasWitness> bias_detect(const CyclicSet& a,
                                       const BiasParams& params,
                                       u64 dense_bound) {
    if (a.empty()) return std::nullopt;
    u64 n = a.modulus();
    FourierProfile prof = dft(a, dense_bound);
    for (u64 k = 1; k < n; ++k) {
        u64 g = gcd_u64(k, n);
        u64 m = n / g; // index of ker(chi_k)
        if (m < params.min_index) continue;
        if (std::abs(prof.coefficients[k]) <=
            params.coeff * static_cast<double>(a.size()))
            continue;

        // chi_k factors through Z_m via the zero-kernel character
        // zeta(t) = e(k' t / m), k' = k/g.
        u64 kp = k / g;
        std::vector<std::complex<double>> pts;
        pts.reserve(a.size());
        for (u64 e : a.elements()) {
            double ang = kTau * static_cast<double>((kp * (e % m)) % m) /
                         static_cast<double>(m);
            pts.emplace_back(std::cos(ang), std::sin(ang));
        }
        ArcResult arc = arc_concentrate(pts);

        // Quotient images of the arc members, positioned along the
        // progression with difference d_Q = k'^{-1} (so that consecutive
        // roots of unity on the arc are consecutive progression terms).
        std::vector<u64> images;
        for (int idx : arc.members)
            images.push_back(a.elements()[idx] % m);
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        std::vector<std::pair<u64, u64>> pos; // (index along d_Q, image)
        for (u64 t : images) pos.emplace_back((t * kp) % m, t);
        std::sort(pos.begin(), pos.end());
        u64 qlen, qstart;
        if (pos.size() == 1) {
            qlen = 1;
            qstart = pos[0].second;
        } else {
            u64 best_gap = 0;
            std::size_t best_at = 0;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                u64 cur = pos[i].first;
                u64 nxt = pos[(i + 1) % pos.size()].first;
                u64 gap = (nxt + m - cur) % m;
                if (gap > best_gap) { best_gap = gap; best_at = i; }
            }
            qlen = m - best_gap + 1;
            qstart = pos[(best_at + 1) % pos.size()].second;
        }
        if (2 * qlen > m + 1) continue; // arc geometry failed to compress

        // Lift the difference to a generator of Z_n.
        u64 dq = mod_inverse(kp, m);
        u64 d = dq == 0 ? m : dq;
        while (gcd_u64(d, n) != 1) d += m;
        ApCover p{n, qstart, d, qlen};

        // Coverage of A by P + H.
        CyclicSet q_cover = ApCover{m, qstart % m, dq % m, qlen}.covered();
        std::vector<u64> covered;
        for (u64 e : a.elements())
            if (q_cover.contains(e % m)) covered.push_back(e);
        double ratio = static_cast<double>(covered.size()) /
                       static_cast<double>(a.size());
        if (ratio > params.coverage) {
            BiasWitness w{Subgroup(n, g), p, CyclicSet(n, covered), ratio, k};
            return w;
        }
    }
    return std::nullopt;
}

} // namespace cyc
