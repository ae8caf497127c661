#include "cyc/rectify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyc {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using json = nlohmann::json;

namespace {

std::vector<IndexPair> canonical_pairs(int s) {
    std::vector<IndexPair> ps;
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) ps.emplace_back(i, j);
    return ps;
}

template <typename Key>
SumPattern pattern_from_sums(int s, const std::vector<Key>& sums) {
    auto pairs = canonical_pairs(s);
    std::map<Key, std::vector<int>> groups;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        groups[sums[p]].push_back(static_cast<int>(p));
    SumPattern pat;
    pat.base_size = s;
    pat.class_of.assign(pairs.size(), -1);
    for (auto& [sum, members] : groups) {
        int cls = static_cast<int>(pat.classes.size());
        std::vector<IndexPair> cl;
        for (int p : members) {
            pat.class_of[p] = cls;
            cl.push_back(pairs[p]);
        }
        pat.classes.push_back(std::move(cl));
    }
    return pat;
}

} // namespace

bool SumPattern::same_relation(const SumPattern& other) const {
    if (base_size != other.base_size) return false;
    if (class_of.size() != other.class_of.size()) return false;
    // Same partition iff pair-equivalence coincides.
    for (std::size_t p = 0; p < class_of.size(); ++p)
        for (std::size_t q = p + 1; q < class_of.size(); ++q)
            if ((class_of[p] == class_of[q]) !=
                (other.class_of[p] == other.class_of[q]))
                return false;
    return true;
}

SumPattern sum_pattern(const CyclicSet& s) {
    if (s.empty()) throw std::invalid_argument("sum_pattern: empty set");
    int sz = static_cast<int>(s.size());
    auto pairs = canonical_pairs(sz);
    std::vector<u64> sums;
    sums.reserve(pairs.size());
    for (auto [i, j] : pairs)
        sums.push_back((s.elements()[i] + s.elements()[j]) % s.modulus());
    return pattern_from_sums(sz, sums);
}

SumPattern sum_pattern_integers(const std::vector<i64>& s) {
    if (s.empty()) throw std::invalid_argument("sum_pattern: empty set");
    int sz = static_cast<int>(s.size());
    auto pairs = canonical_pairs(sz);
    std::vector<i64> sums;
    sums.reserve(pairs.size());
    for (auto [i, j] : pairs) sums.push_back(s[i] + s[j]);
    return pattern_from_sums(sz, sums);
}

namespace {

using Row = std::vector<cpp_rational>;

// Reduced row echelon form tracking pivot columns.  Rows are homogeneous
// functionals over the model variables.
struct Rref {
    int cols;
    std::vector<Row> rows;       // each with leading coefficient 1
    std::vector<int> pivot_col;  // per row
    std::vector<int> pivot_row;  // per column, -1 when free

    explicit Rref(int c) : cols(c), pivot_row(c, -1) {}

    // Reduce f in place against the current basis; returns true when f is
    // in the span (reduces to zero).
    bool reduce(Row& f) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = pivot_col[r];
            if (f[c] == 0) continue;
            cpp_rational k = f[c];
            for (int j = 0; j < cols; ++j) f[j] -= k * rows[r][j];
        }
        return std::all_of(f.begin(), f.end(),
                           [](const cpp_rational& x) { return x == 0; });
    }

    void insert(Row f) {
        if (reduce(f)) return;
        int c = 0;
        while (f[c] == 0) ++c;
        cpp_rational lead = f[c];
        for (int j = 0; j < cols; ++j) f[j] /= lead;
        // Back-substitute into existing rows.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            cpp_rational k = rows[r][c];
            for (int j = 0; j < cols; ++j) rows[r][j] -= k * f[j];
        }
        pivot_row[c] = static_cast<int>(rows.size());
        pivot_col.push_back(c);
        rows.push_back(std::move(f));
    }
};

Row pair_functional(int s, IndexPair p, IndexPair q) {
    Row f(s, cpp_rational(0));
    f[p.first] += 1;
    f[p.second] += 1;
    f[q.first] -= 1;
    f[q.second] -= 1;
    return f;
}

cpp_rational eval(const Row& f, const std::vector<cpp_rational>& x) {
    cpp_rational acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) acc += f[i] * x[i];
    return acc;
}

} // namespace

RectifyVerdict is_rectifiable(const CyclicSet& s, u64 size_bound) {
    if (s.empty()) throw std::invalid_argument("is_rectifiable: empty set");
    if (s.size() > size_bound)
        throw std::invalid_argument("is_rectifiable: size over bound " +
                                    std::to_string(size_bound));
    RectifyVerdict out;
    int sz = static_cast<int>(s.size());
    if (sz == 1) {
        out.rectifiable = true;
        out.integer_model = std::vector<i64>{0};
        return out;
    }
    SumPattern pat = sum_pattern(s);
    auto pairs = canonical_pairs(sz);

    // Equality subspace: same-class pairs have equal model sums.
    Rref rref(sz);
    for (const auto& cls : pat.classes)
        for (std::size_t k = 1; k < cls.size(); ++k)
            rref.insert(pair_functional(sz, cls[0], cls[k]));

    // Cross-class disequalities must not vanish on the subspace.
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            if (pat.class_of[p] == pat.class_of[q]) continue;
            Row f = pair_functional(sz, pairs[p], pairs[q]);
            if (rref.reduce(f)) {
                out.obstruction = std::make_pair(pairs[p], pairs[q]);
                return out;
            }
        }

    // A model exists; construct one from a generic point of the subspace.
    std::vector<int> free_cols;
    for (int c = 0; c < sz; ++c)
        if (rref.pivot_row[c] < 0) free_cols.push_back(c);

    for (i64 t = 1;; ++t) {
        std::vector<cpp_rational> x(sz, cpp_rational(0));
        cpp_rational v = 1;
        for (int c : free_cols) {
            x[c] = v;
            v *= t;
        }
        for (std::size_t r = 0; r < rref.rows.size(); ++r) {
            int pc = rref.pivot_col[r];
            cpp_rational acc = 0;
            for (int c : free_cols)
                if (rref.rows[r][c] != 0) acc += rref.rows[r][c] * x[c];
            x[pc] = -acc;
        }
        bool ok = true;
        for (std::size_t p = 0; p < pairs.size() && ok; ++p)
            for (std::size_t q = p + 1; q < pairs.size() && ok; ++q) {
                if (pat.class_of[p] == pat.class_of[q]) continue;
                Row f = pair_functional(sz, pairs[p], pairs[q]);
                if (eval(f, x) == 0) ok = false;
            }
        if (!ok) continue;

        cpp_int lcm = 1;
        for (const auto& xi : x)
            lcm = boost::multiprecision::lcm(lcm, denominator(xi));
        std::vector<cpp_int> scaled(sz);
        cpp_int mn = 0;
        for (int i = 0; i < sz; ++i) {
            scaled[i] = numerator(x[i]) * (lcm / denominator(x[i]));
            if (i == 0 || scaled[i] < mn) mn = scaled[i];
        }
        std::vector<i64> model(sz);
        for (int i = 0; i < sz; ++i)
            model[i] = static_cast<i64>(scaled[i] - mn);
        // Validate by direct pattern comparison.
        if (!sum_pattern_integers(model).same_relation(pat))
            throw std::logic_error("is_rectifiable: model validation failed");
        out.rectifiable = true;
        out.integer_model = std::move(model);
        return out;
    }
}

std::optional<IntervalRectification> interval_rectify(const CyclicSet& s) {
    if (s.empty()) throw std::invalid_argument("interval_rectify: empty set");
    u64 n = s.modulus();
    u64 window = (n + 1) / 2;
    if (n == 1) return IntervalRectification{0, 0};
    for (u64 u : units(n)) {
        CyclicSet t = dilate(s, u);
        const auto& e = t.elements();
        if (e.size() == 1) {
            return IntervalRectification{u, (n - e[0]) % n};
        }
        // Minimal enclosing arc: complement of the largest cyclic gap.
        u64 best_gap = 0;
        u64 best_shift = n;
        for (std::size_t i = 0; i < e.size(); ++i) {
            u64 cur = e[i];
            u64 nxt = e[(i + 1) % e.size()];
            u64 gap = (nxt + n - cur) % n;
            u64 shift = (n - nxt) % n;
            if (gap > best_gap || (gap == best_gap && shift < best_shift)) {
                best_gap = gap;
                best_shift = shift;
            }
        }
        u64 extent = n - best_gap + 1;
        if (extent <= window) return IntervalRectification{u, best_shift};
    }
    return std::nullopt;
}

LemmaVerdict rect_coset_bound_verdict(const CyclicSet& a, bool rectifiable) {
    LemmaVerdict v;
    v.lemma = "rect2a";
    if (a.empty() || !rectifiable) {
        v.detail = "input not (known) rectifiable";
        return v;
    }
    v.hypothesis_holds = true;
    u64 n = a.modulus();
    for (const Subgroup& k : subgroups(n)) {
        u64 m = k.index();
        std::vector<u64> count(m, 0);
        for (u64 e : a.elements()) ++count[e % m];
        for (u64 c = 0; c < m; ++c) {
            if (2 * count[c] > k.order + 1) {
                v.conclusion_holds = false;
                v.witness = json{{"K_order", k.order},
                                 {"coset", c},
                                 {"count", count[c]}};
                return v;
            }
        }
    }
    v.conclusion_holds = true;
    return v;
}

} // namespace cyc
