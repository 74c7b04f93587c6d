#pragma once

// Filler and pasting operations on ZDelta(m,n), and the splittings that
// express a morphism of orientals through them.

#include <string>
#include <utility>
#include <vector>

#include "orientals/linear.hpp"
#include "orientals/membership.hpp"

namespace orientals {

namespace detail {

inline void check_filler_args(int i, const ZMorphism& x, const ZMorphism& y, const char* op) {
    if (x.domain() != y.domain() || x.codomain() != y.codomain())
        throw ArityError(std::string(op) + ": arguments live in different groups");
    const int m = x.domain();
    if (i < 0 || i > m - 1)
        throw NotComposableError(std::string(op) + ": index " + std::to_string(i) + " outside [0," + std::to_string(m - 1) + "]");
    if (face(i, x) != face(i + 1, y))
        throw NotComposableError(std::string(op) + "_" + std::to_string(i) + ": face " + std::to_string(i) + " of " +
                                 x.to_string() + " differs from face " + std::to_string(i + 1) + " of " + y.to_string());
}

}  // namespace detail

/// x |>_i y = e_{i+1} x - e_i e_i d_i x + e_i y, defined when d_i x = d_{i+1} y.
inline ZMorphism filler(int i, const ZMorphism& x, const ZMorphism& y) {
    detail::check_filler_args(i, x, y, "filler");
    return degeneracy(i + 1, x) - degeneracy(i, degeneracy(i, face(i, x))) + degeneracy(i, y);
}

/// x v_i y = x - e_i d_i x + y, defined when d_i x = d_{i+1} y.
inline ZMorphism pasting(int i, const ZMorphism& x, const ZMorphism& y) {
    detail::check_filler_args(i, x, y, "pasting");
    return x - degeneracy(i, face(i, x)) + y;
}

/// For x in O(m,n): x[0] = [s] and x[m] = [t], where s and t are the
/// smallest and largest integers appearing in the terms of x.
inline std::pair<int, int> first_last(const ZMorphism& x) {
    require_oriental(x, "first_last");
    auto vertex = [&](int k) {
        auto img = zcompose(x, MonotoneMap({k}, x.domain()));
        detail::ensure(img.size() == 1 && img.terms().begin()->second == 1, "first_last: vertex image is not a single term");
        return img.terms().begin()->first.front();
    };
    int s = vertex(0);
    int t = vertex(x.domain());
    auto range = value_range(x);
    detail::ensure(range && range->first == s && range->second == t, "first_last: end vertices are not the extreme values");
    return {s, t};
}

/// x = (x_0, 0) + ... + (x_n, n): x_i collects the terms ending in i with
/// that last entry removed. Every x_i is returned in ZDelta(m-1, n).
inline std::vector<ZMorphism> tail_decompose(const ZMorphism& x) {
    if (x.domain() == 0) throw DimensionError("tail_decompose needs domain m > 0");
    std::vector<ZMorphism> tails(static_cast<std::size_t>(x.codomain()) + 1, ZMorphism(x.domain() - 1, x.codomain()));
    for (const auto& [f, c] : x.terms()) {
        auto v = f.values();
        tails[static_cast<std::size_t>(f.back())].add_term(MonotoneMap({v.begin(), v.end() - 1}, x.codomain()), c);
    }
    return tails;
}

/// Inverse of tail_decompose.
inline ZMorphism reassemble_tails(const std::vector<ZMorphism>& tails) {
    if (tails.empty()) throw PreconditionError("reassemble_tails: no tails");
    ZMorphism out(tails.front().domain() + 1, tails.front().codomain());
    for (std::size_t i = 0; i < tails.size(); ++i) out += append_vertex(tails[i], static_cast<int>(i));
    return out;
}

/// A factorisation x = u v_r v.
struct Split {
    ZMorphism u;
    ZMorphism v;
    int index;
};

namespace detail {

/// The linear maps alpha and beta on ZDelta(m,n) at position r. On a term a
/// they agree with a, except that
///   low(a):  alpha a = a,                   beta a = a with a_r replaced by a_{r+1};
///   !low(a): alpha a = a with a_{r+1} replaced by a_r, beta a = a.
template <typename IsLow>
Split alpha_beta(int r, const ZMorphism& x, IsLow is_low) {
    Split out{ZMorphism(x.domain(), x.codomain()), ZMorphism(x.domain(), x.codomain()), r};
    const auto ur = static_cast<std::size_t>(r);
    for (const auto& [a, c] : x.terms()) {
        std::vector<int> v(a.values().begin(), a.values().end());
        if (is_low(a)) {
            out.u.add_term(a, c);
            v[ur] = v[ur + 1];
            out.v.add_term(MonotoneMap(std::move(v), x.codomain()), c);
        } else {
            v[ur + 1] = v[ur];
            out.u.add_term(MonotoneMap(std::move(v), x.codomain()), c);
            out.v.add_term(a, c);
        }
    }
    return out;
}

inline void split_precondition(bool ok, const char* op, const std::string& what) {
    if (!ok) throw PreconditionError(std::string(op) + ": " + what);
}

inline int last_vertex(const ZMorphism& x, const char* op) {
    require_oriental(x, op);
    return first_last(x).second;
}

inline void check_split(const Split& s, const ZMorphism& x, const char* op) {
    if (pasting(s.index, s.u, s.v) != x) throw InternalError(std::string(op) + ": u v_r v does not reassemble x");
    if (!is_oriental_morphism(s.u) || !is_oriental_morphism(s.v))
        throw InternalError(std::string(op) + ": a factor is not an oriental morphism");
}

}  // namespace detail

/// For x in O(m,n) with x[m] = [t] and every term having a_r < t
/// (0 <= r <= m-2): x = u v_r v with v = d_{r+2} v |>_r d_r v, u[m] = [t]
/// and every term of u having a_{r+1} < t. The split is on a_{r+1} < t.
inline Split split_start(int r, int t, const ZMorphism& x) {
    constexpr const char* op = "split_start";
    const int m = x.domain();
    detail::split_precondition(r >= 0 && r <= m - 2, op, "r outside [0, m-2]");
    detail::split_precondition(detail::last_vertex(x, op) == t, op, "x[m] != [t]");
    for (const auto& [a, c] : x.terms())
        detail::split_precondition(a[static_cast<std::size_t>(r)] < t, op, "term " + a.tuple_string() + " has a_r >= t");
    auto out = detail::alpha_beta(r, x, [&](const MonotoneMap& a) { return a[static_cast<std::size_t>(r + 1)] < t; });
    detail::check_split(out, x, op);
    if (filler(r, face(r + 2, out.v), face(r, out.v)) != out.v) throw InternalError("split_start: v is not a filler");
    return out;
}

/// For x in O(m,n), m > 0, with x[m] = [t] and every term having a_{m-1} < t:
/// x = u v_{m-1} v with u[m] = [t'] for some t' < t, v[m] = [t], and every
/// term of v having a_{m-1} = a_m or a_m = t.
inline Split split_middle(int t, const ZMorphism& x) {
    constexpr const char* op = "split_middle";
    const int m = x.domain();
    detail::split_precondition(m > 0, op, "needs m > 0");
    detail::split_precondition(detail::last_vertex(x, op) == t, op, "x[m] != [t]");
    const int r = m - 1;
    for (const auto& [a, c] : x.terms())
        detail::split_precondition(a[static_cast<std::size_t>(r)] < t, op, "term " + a.tuple_string() + " has a_{m-1} >= t");
    auto out = detail::alpha_beta(r, x, [&](const MonotoneMap& a) { return a.back() < t; });
    detail::check_split(out, x, op);
    return out;
}

/// For x in O(m,n) with x[m] = [t] and every term having a_{r+1} = a_m or
/// a_m = t (0 <= r <= m-2): x = u v_r v with u = d_{r+2} u |>_r d_r u,
/// v[m] = [t] and every term of v having a_r = a_m or a_m = t. The split is
/// on a_m < t.
inline Split split_finish(int r, int t, const ZMorphism& x) {
    constexpr const char* op = "split_finish";
    const int m = x.domain();
    detail::split_precondition(r >= 0 && r <= m - 2, op, "r outside [0, m-2]");
    detail::split_precondition(detail::last_vertex(x, op) == t, op, "x[m] != [t]");
    for (const auto& [a, c] : x.terms())
        detail::split_precondition(a[static_cast<std::size_t>(r + 1)] == a.back() || a.back() == t, op,
                                   "term " + a.tuple_string() + " has a_{r+1} != a_m and a_m != t");
    auto out = detail::alpha_beta(r, x, [&](const MonotoneMap& a) { return a.back() < t; });
    detail::check_split(out, x, op);
    if (filler(r, face(r + 2, out.u), face(r, out.u)) != out.u) throw InternalError("split_finish: u is not a filler");
    return out;
}

}  // namespace orientals
