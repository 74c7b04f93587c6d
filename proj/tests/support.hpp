#pragma once

// Random generators and brute-force reference implementations shared by the
// unit tests and the acceptance runner. The oracle namespace deliberately
// avoids the library: tuples are plain vectors, chains are coefficient
// arrays indexed by vertex bitmasks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "orientals/orientals.hpp"

namespace testing_support {

using namespace orientals;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline MonotoneMap random_map(Rng& rng, int m, int n) {
    std::vector<int> v(static_cast<std::size_t>(m) + 1);
    for (auto& a : v) a = uniform(rng, 0, n);
    std::sort(v.begin(), v.end());
    return MonotoneMap(std::move(v), n);
}

inline ZMorphism random_zmorphism(Rng& rng, int m, int n, int coef_bound = 5, int max_terms = 6) {
    ZMorphism x(m, n);
    int terms = uniform(rng, 0, max_terms);
    for (int k = 0; k < terms; ++k) x.add_term(random_map(rng, m, n), uniform(rng, -coef_bound, coef_bound));
    return x;
}

/// A growing stock of members of O(m,n), 0 <= m <= max_m, for one fixed n,
/// each stored with an expression built from monotone maps by fillers and
/// pastings. Rounds pick a random member a and index i and look for a
/// partner b with d_{i+1} b = d_i a; a degeneracy of d_i a is the fallback
/// partner.
class MemberPool {
public:
    struct Entry {
        FillerExpr expr;
        ZMorphism value;
        std::vector<ZMorphism> faces;
    };

    MemberPool(int n, int max_m, int rounds, std::uint64_t seed) : n_(n), levels_(static_cast<std::size_t>(max_m) + 1) {
        Rng rng(seed);
        for (int m = 0; m <= max_m; ++m)
            for (const auto& f : enumerate_monotone(m, n)) insert(FillerExpr::leaf(f), ZMorphism(f));
        for (int round = 0; round < rounds; ++round) {
            int k = uniform(rng, 1, max_m);
            bool fill = k < max_m && uniform(rng, 0, 1);
            const auto& pool = levels_[static_cast<std::size_t>(k)];
            const auto& a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
            int i = uniform(rng, 0, k - 1);
            auto b = partner(rng, k, i, a);
            auto expr = fill ? FillerExpr::filler(i, a.expr, b.expr) : FillerExpr::pasting(i, a.expr, b.expr);
            auto value = fill ? filler(i, a.value, b.value) : pasting(i, a.value, b.value);
            insert(expr, value);
        }
    }

    int codomain() const { return n_; }
    const std::vector<Entry>& level(int m) const { return levels_[static_cast<std::size_t>(m)]; }

    const Entry& pick(Rng& rng, int m) const {
        const auto& pool = level(m);
        // Favour the members that are not single monotone maps.
        for (int attempt = 0; attempt < 4; ++attempt) {
            const auto& e = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
            if (e.value.size() > 1) return e;
        }
        return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    }

    /// A member b of O(k,n) with d_{i+1} b = d_i a.
    Entry partner(Rng& rng, int k, int i, const Entry& a) const {
        const auto& w = a.faces[static_cast<std::size_t>(i)];
        auto it = by_face_.find({k, i + 1, w});
        if (it != by_face_.end() && uniform(rng, 0, 4) != 0) {
            const auto& ids = it->second;
            return level(k)[ids[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ids.size()) - 1))]];
        }
        // d_{i+1} e_i w = d_{i+1} e_{i+1} w = w
        int j = i + (i + 1 <= k - 1 ? uniform(rng, 0, 1) : 0);
        auto face_of_a = FillerExpr::precompose(a.expr, face_generator(i, k));
        auto expr = FillerExpr::precompose(face_of_a, degeneracy_generator(j, k - 1));
        auto value = degeneracy(j, w);
        return {expr, value, faces_of(value)};
    }

private:
    static std::vector<ZMorphism> faces_of(const ZMorphism& x) {
        std::vector<ZMorphism> out;
        for (int j = 0; x.domain() > 0 && j <= x.domain(); ++j) out.push_back(face(j, x));
        return out;
    }

    void insert(const FillerExpr& expr, const ZMorphism& value) {
        if (!seen_.insert(value).second) return;
        auto& pool = levels_[static_cast<std::size_t>(value.domain())];
        pool.push_back({expr, value, faces_of(value)});
        for (int j = 0; j < static_cast<int>(pool.back().faces.size()); ++j)
            by_face_[{value.domain(), j, pool.back().faces[static_cast<std::size_t>(j)]}].push_back(pool.size() - 1);
    }

    int n_;
    std::vector<std::vector<Entry>> levels_;
    std::set<ZMorphism> seen_;
    std::map<std::tuple<int, int, ZMorphism>, std::vector<std::size_t>> by_face_;
};

/// Shared pools with domains up to 3, one per codomain n <= 4.
inline const MemberPool& member_pool(int n) {
    static std::vector<std::unique_ptr<MemberPool>> pools(5);
    auto& slot = pools.at(static_cast<std::size_t>(n));
    if (!slot) slot = std::make_unique<MemberPool>(n, 3, 4000, 7000 + static_cast<std::uint64_t>(n));
    return *slot;
}

/// A random expression for a member of O(m,n), m <= 3, n <= 4.
inline FillerExpr random_oriental_expr(Rng& rng, int m, int n) { return member_pool(n).pick(rng, m).expr; }

inline ZMorphism random_oriental(Rng& rng, int m, int n) { return member_pool(n).pick(rng, m).value; }

/// A random pair (x, y) of members of O(m,n) with d_i x = d_{i+1} y, 1 <= m <= 3.
struct AdmissiblePair {
    int i;
    ZMorphism x;
    ZMorphism y;
};

inline AdmissiblePair random_admissible_pair(Rng& rng, int m, int n) {
    const auto& pool = member_pool(n);
    const auto& a = pool.pick(rng, m);
    int i = uniform(rng, 0, m - 1);
    return {i, a.value, pool.partner(rng, m, i, a).value};
}

/// Every subexpression of e, e included.
inline void for_each_subexpr(const FillerExpr& e, const std::function<void(const FillerExpr&)>& visit) {
    visit(e);
    switch (e.kind()) {
        case FillerExpr::Kind::leaf: break;
        case FillerExpr::Kind::precompose: for_each_subexpr(e.inner(), visit); break;
        default:
            for_each_subexpr(e.left(), visit);
            for_each_subexpr(e.right(), visit);
    }
}

/// The paths i_0 < ... < i_q in {0..n}, as members of O(1,n):
/// (i_0,i_1) - (i_1,i_1) + ... + (i_{q-1},i_q), and (i,i) for q = 0.
inline std::vector<std::vector<int>> vertex_paths(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> path;
        for (int v = 0; v <= n; ++v)
            if (mask & (1u << v)) path.push_back(v);
        out.push_back(path);
    }
    return out;
}

inline ZMorphism path_morphism(const std::vector<int>& path, int n) {
    ZMorphism x(1, n);
    if (path.size() == 1) {
        x.add_term(MonotoneMap({path[0], path[0]}, n), 1);
        return x;
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        x.add_term(MonotoneMap({path[k], path[k + 1]}, n), 1);
        if (k + 2 < path.size()) x.add_term(MonotoneMap({path[k + 1], path[k + 1]}, n), -1);
    }
    return x;
}

namespace oracle {

using Tuple = std::vector<int>;
using Combo = std::map<Tuple, long long>;

inline void add(Combo& c, const Tuple& t, long long k) {
    if ((c[t] += k) == 0) c.erase(t);
}

inline Combo from(const ZMorphism& x) {
    Combo c;
    for (const auto& [f, k] : x.terms()) add(c, Tuple(f.values().begin(), f.values().end()), k);
    return c;
}

/// y o x by composing tuples as functions.
inline Combo compose(const Combo& y, const Combo& x) {
    Combo out;
    for (const auto& [g, a] : y)
        for (const auto& [f, b] : x) {
            Tuple h;
            for (int v : f) h.push_back(g[static_cast<std::size_t>(v)]);
            add(out, h, a * b);
        }
    return out;
}

/// Deletes entry i from every tuple.
inline Combo face(int i, const Combo& x) {
    Combo out;
    for (const auto& [f, k] : x) {
        Tuple h = f;
        h.erase(h.begin() + i);
        add(out, h, k);
    }
    return out;
}

/// Repeats entry i in every tuple.
inline Combo degeneracy(int i, const Combo& x) {
    Combo out;
    for (const auto& [f, k] : x) {
        Tuple h = f;
        h.insert(h.begin() + i, f[static_cast<std::size_t>(i)]);
        add(out, h, k);
    }
    return out;
}

inline bool strictly_increasing(const Tuple& t) {
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k - 1] >= t[k]) return false;
    return true;
}

/// Injective terms of x o f have nonnegative coefficients for every
/// injective f with codomain m, i.e. every nonempty subset of {0..m}.
inline bool probes_nonnegative(const Combo& x, int m) {
    for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
        Combo probe;
        Tuple s;
        for (int v = 0; v <= m; ++v)
            if (mask & (1u << v)) s.push_back(v);
        probe[s] = 1;
        for (const auto& [f, k] : compose(x, probe))
            if (k < 0 && strictly_increasing(f)) return false;
    }
    return true;
}

/// Membership test straight from the definition.
inline bool member(const Combo& x, int m) {
    long long sum = 0;
    for (const auto& [f, k] : x) sum += k;
    return sum == 1 && probes_nonnegative(x, m);
}

// Chains of K[n]: a vector indexed by vertex bitmask; the dimension of a
// basis element is popcount - 1.

using Vec = std::vector<long long>;

inline int popcount(unsigned v) { return __builtin_popcount(v); }

inline Vec boundary(const Vec& c, int n) {
    Vec out(std::size_t{1} << (n + 1), 0);
    for (unsigned s = 0; s < c.size(); ++s) {
        if (!c[s]) continue;
        int pos = 0;
        for (int v = 0; v <= n; ++v)
            if (s & (1u << v)) {
                out[s & ~(1u << v)] += (pos % 2 ? -1 : 1) * c[s];
                ++pos;
            }
    }
    return out;
}

/// The cells of nu K[n] with every coefficient in [0, bound], found by
/// trying all chains dimension by dimension and keeping the sequences that
/// satisfy the defining conditions. Each cell is returned as its list of
/// (neg, pos) vectors up to its top nonzero dimension.
inline std::set<std::vector<std::pair<Vec, Vec>>> nu_cells(int n, int bound) {
    const std::size_t size = std::size_t{1} << (n + 1);
    std::vector<std::vector<unsigned>> by_dim(static_cast<std::size_t>(n) + 1);
    for (unsigned s = 1; s < size; ++s) by_dim[static_cast<std::size_t>(popcount(s) - 1)].push_back(s);

    auto chains_of_dim = [&](int q) {
        std::vector<Vec> out;
        const auto& elts = by_dim[static_cast<std::size_t>(q)];
        std::vector<int> digits(elts.size(), 0);
        while (true) {
            Vec c(size, 0);
            for (std::size_t k = 0; k < elts.size(); ++k) c[elts[k]] = digits[k];
            out.push_back(c);
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == bound) digits[k++] = 0;
            if (k == digits.size()) break;
            ++digits[k];
        }
        return out;
    };
    // Every chain of each dimension, paired with its boundary.
    std::vector<std::vector<std::pair<Vec, Vec>>> chains;
    for (int q = 0; q <= n; ++q) {
        chains.emplace_back();
        for (auto& c : chains_of_dim(q)) {
            auto dc = q ? boundary(c, n) : Vec(size, 0);
            chains.back().emplace_back(std::move(c), std::move(dc));
        }
    }

    auto augmentation = [](const Vec& c) {
        long long e = 0;
        for (unsigned s = 0; s < c.size(); ++s)
            if (popcount(s) == 1) e += c[s];
        return e;
    };
    auto is_zero = [](const Vec& c) { return std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; }); };
    auto diff = [](const Vec& a, const Vec& b) {
        Vec out(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
        return out;
    };

    std::set<std::vector<std::pair<Vec, Vec>>> cells;
    std::vector<std::pair<Vec, Vec>> seq;
    // Condition checks: nonnegativity holds by construction; eps = 1 on the
    // 0-chains; x+_q - x-_q = d x-_{q+1} = d x+_{q+1}; zero from some point on.
    std::function<void(int)> extend = [&](int q) {
        // Stopping here makes the pairs above q zero, so the top pair must be
        // diagonal; trailing zero pairs are not recorded.
        const auto& top = seq.back();
        if (top.first == top.second && !is_zero(top.first)) cells.insert(seq);
        if (q > n) return;
        auto gap = diff(top.second, top.first);
        std::vector<const Vec*> fits;
        for (const auto& [c, dc] : chains[static_cast<std::size_t>(q)])
            if (dc == gap) fits.push_back(&c);
        for (const Vec* neg : fits) {
            for (const Vec* pos : fits) {
                seq.emplace_back(*neg, *pos);
                extend(q + 1);
                seq.pop_back();
            }
        }
    };
    for (const auto& [neg, dneg] : chains[0]) {
        if (augmentation(neg) != 1) continue;
        for (const auto& [pos, dpos] : chains[0]) {
            if (augmentation(pos) != 1) continue;
            seq.assign(1, {neg, pos});
            extend(1);
        }
    }
    return cells;
}

/// A library cell in the oracle's representation.
inline std::vector<std::pair<Vec, Vec>> from(const DoubleSeq& s) {
    const int n = s.ambient();
    auto vec = [&](const Chain& c) {
        Vec out(std::size_t{1} << (n + 1), 0);
        for (const auto& [b, k] : c.terms()) {
            unsigned mask = 0;
            for (int v : b.vertices()) mask |= 1u << v;
            out[mask] = k;
        }
        return out;
    };
    std::vector<std::pair<Vec, Vec>> out;
    for (const auto& p : s.pairs()) out.emplace_back(vec(p.neg), vec(p.pos));
    return out;
}

}  // namespace oracle

}  // namespace testing_support
