#pragma once

// The omega-category nu K[n]: double sequences of nonnegative chains with
// their identities and composites, atoms, and bounded enumeration.

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orientals/chain.hpp"
#include "orientals/membership.hpp"

namespace orientals {

struct ChainPair {
    Chain neg;
    Chain pos;

    const Chain& part(Sign s) const { return s == Sign::minus ? neg : pos; }

    friend bool operator==(const ChainPair&, const ChainPair&) = default;
    friend auto operator<=>(const ChainPair&, const ChainPair&) = default;
};

/// A double sequence (x-_0, x+_0 | x-_1, x+_1 | ...) before validation.
using RawDoubleSeq = std::vector<ChainPair>;

struct ValidationResult;
inline ValidationResult validate(RawDoubleSeq raw, int n);

/// A validated member of nu K[n] in canonical form (trailing zero pairs trimmed).
///
/// A p-cell is a member whose pairs above p vanish and whose p-th pair is
/// diagonal; since the top pair of a member is always diagonal, every member
/// is a cell of dimension top_dimension().
class DoubleSeq {
public:
    int ambient() const noexcept { return ambient_; }
    const std::vector<ChainPair>& pairs() const noexcept { return pairs_; }
    int top_dimension() const noexcept { return static_cast<int>(pairs_.size()) - 1; }

    /// x^sign_q, the zero chain when q is above the top.
    Chain component(Sign sign, int q) const {
        if (q < 0) throw IndexError("negative dimension");
        if (q <= top_dimension()) return pairs_[static_cast<std::size_t>(q)].part(sign);
        return Chain(q, ambient_);
    }

    /// "([0],[2] | [0,1] + [1,2],[0,1] + [1,2])"
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t q = 0; q < pairs_.size(); ++q) {
            if (q) out += " | ";
            out += pairs_[q].neg.to_string() + ", " + pairs_[q].pos.to_string();
        }
        return out + ")";
    }

    friend bool operator==(const DoubleSeq&, const DoubleSeq&) = default;
    friend auto operator<=>(const DoubleSeq&, const DoubleSeq&) = default;
    friend std::ostream& operator<<(std::ostream& os, const DoubleSeq& s) { return os << s.to_string(); }

private:
    DoubleSeq(int ambient, std::vector<ChainPair> pairs) : ambient_(ambient), pairs_(std::move(pairs)) {}

    friend ValidationResult validate(RawDoubleSeq raw, int n);

    int ambient_;
    std::vector<ChainPair> pairs_;
};

struct ValidationResult {
    std::optional<DoubleSeq> seq;
    /// Violated conditions, numbered 1 to 5 as in the definition of nu.
    std::vector<int> violations;

    explicit operator bool() const noexcept { return seq.has_value(); }

    std::string describe() const {
        if (seq) return "valid";
        std::string out = "violates condition";
        if (violations.size() > 1) out += "s";
        for (std::size_t i = 0; i < violations.size(); ++i) out += (i ? ", (" : " (") + std::to_string(violations[i]) + ")";
        return out;
    }
};

/// Checks the five conditions on a double sequence in K[n]:
///   (1) x^-_q, x^+_q are q-chains of K[n];
///   (2) only finitely many are nonzero (automatic for a finite list);
///   (3) x^+_q - x^-_q = d x^-_{q+1} = d x^+_{q+1};
///   (4) all x^-_q, x^+_q are nonnegative;
///   (5) e x^-_0 = e x^+_0 = 1.
inline ValidationResult validate(RawDoubleSeq raw, int n) {
    ValidationResult out;
    auto flag = [&](int condition) {
        if (std::find(out.violations.begin(), out.violations.end(), condition) == out.violations.end())
            out.violations.push_back(condition);
    };
    if (n < 0) throw PreconditionError("validate: n must be nonnegative");

    bool shapes_ok = true;
    for (std::size_t q = 0; q < raw.size(); ++q)
        for (const Chain* c : {&raw[q].neg, &raw[q].pos})
            if (c->dimension() != static_cast<int>(q) || c->ambient() != n) shapes_ok = false;
    if (!shapes_ok) flag(1);

    if (shapes_ok) {
        for (std::size_t q = 0; q < raw.size(); ++q) {
            Chain diff = raw[q].pos - raw[q].neg;
            if (q + 1 < raw.size()) {
                auto dn = boundary(raw[q + 1].neg);
                auto dp = boundary(raw[q + 1].pos);
                if (diff != dn || diff != dp) flag(3);
            } else if (!diff.is_zero()) {
                flag(3);
            }
        }
    }

    for (const auto& pr : raw)
        if (!pr.neg.is_nonnegative() || !pr.pos.is_nonnegative()) flag(4);

    if (raw.empty()) {
        flag(5);
    } else if (raw[0].neg.dimension() == 0 && raw[0].pos.dimension() == 0) {
        if (augmentation(raw[0].neg) != 1 || augmentation(raw[0].pos) != 1) flag(5);
    }

    std::sort(out.violations.begin(), out.violations.end());
    if (!out.violations.empty()) return out;

    while (!raw.empty() && raw.back().neg.is_zero() && raw.back().pos.is_zero()) raw.pop_back();
    out.seq = DoubleSeq(n, std::move(raw));
    return out;
}

/// Validates and returns the sequence, throwing InvalidInputError otherwise.
inline DoubleSeq make_double_seq(RawDoubleSeq raw, int n) {
    auto r = validate(std::move(raw), n);
    if (!r) throw InvalidInputError("not a member of nu K[" + std::to_string(n) + "]: " + r.describe());
    return *r.seq;
}

namespace detail {

inline RawDoubleSeq raw_pairs(const DoubleSeq& s, std::size_t length) {
    RawDoubleSeq out;
    out.reserve(length);
    for (std::size_t q = 0; q < length; ++q) {
        int dim = static_cast<int>(q);
        out.push_back({s.component(Sign::minus, dim), s.component(Sign::plus, dim)});
    }
    return out;
}

inline DoubleSeq checked(RawDoubleSeq raw, int n, const char* what) {
    auto r = validate(std::move(raw), n);
    if (!r) throw InternalError(std::string(what) + " produced an invalid double sequence: " + r.describe());
    return *r.seq;
}

}  // namespace detail

/// The left (sign = minus) or right (sign = plus) p-identity of s.
inline DoubleSeq d(Sign sign, int p, const DoubleSeq& s) {
    if (p < 0) throw IndexError("identity index must be nonnegative");
    if (p >= s.top_dimension()) return s;
    auto raw = detail::raw_pairs(s, static_cast<std::size_t>(p) + 1);
    auto& top = raw.back();
    top = {top.part(sign), top.part(sign)};
    return detail::checked(std::move(raw), s.ambient(), "d");
}

/// x o_p y = x - w + y where w = d+_p x = d-_p y.
inline DoubleSeq nu_compose(int p, const DoubleSeq& x, const DoubleSeq& y) {
    if (x.ambient() != y.ambient()) throw ArityError("nu_compose: cells of different complexes");
    auto w = d(Sign::plus, p, x);
    if (w != d(Sign::minus, p, y))
        throw NotComposableError("nu_compose: d+_" + std::to_string(p) + " x != d-_" + std::to_string(p) + " y");
    auto len = static_cast<std::size_t>(std::max(x.top_dimension(), y.top_dimension()) + 1);
    auto raw = detail::raw_pairs(x, len);
    for (std::size_t q = 0; q < len; ++q) {
        int dim = static_cast<int>(q);
        raw[q].neg += y.component(Sign::minus, dim) - w.component(Sign::minus, dim);
        raw[q].pos += y.component(Sign::plus, dim) - w.component(Sign::plus, dim);
    }
    return detail::checked(std::move(raw), x.ambient(), "nu_compose");
}

inline bool composable(int p, const DoubleSeq& x, const DoubleSeq& y) {
    return x.ambient() == y.ambient() && d(Sign::plus, p, x) == d(Sign::minus, p, y);
}

/// The atom <b> = ((d-)^p b, (d+)^p b | ... | d- b, d+ b | b, b).
inline DoubleSeq atom(const BasisElt& b) {
    const int p = b.dimension();
    RawDoubleSeq raw;
    for (int q = 0; q < p; ++q) raw.push_back({iterated_parts(b, p - q, Sign::minus), iterated_parts(b, p - q, Sign::plus)});
    raw.push_back({Chain(b), Chain(b)});
    auto r = validate(std::move(raw), b.ambient());
    if (!r) throw PreconditionError("basis is not unital at " + b.to_string() + ": " + r.describe());
    return *r.seq;
}

inline std::vector<DoubleSeq> atoms(int n) {
    std::vector<DoubleSeq> out;
    for (const auto& b : basis(n)) out.push_back(atom(b));
    return out;
}

struct EnumerationLimits {
    int max_n = 3;
    std::size_t max_cells = 1'000'000;
};

/// All nonnegative c in K[n]_{q+1} with d c = target, where q = target.dimension().
///
/// Basis elements are visited in decreasing loop-free order. When b is
/// visited, a positive boundary term e of b lies above b, so no element still
/// to be visited can have e as a negative term; the residual at e therefore
/// bounds the coefficient of b. The search is exact.
inline std::vector<Chain> nonnegative_preimages(const Chain& target) {
    const int n = target.ambient();
    const int dim = target.dimension() + 1;
    std::vector<Chain> out;
    if (dim > n) {
        if (target.is_zero()) out.emplace_back(dim, n);
        return out;
    }
    auto elements = basis(n, dim);
    std::sort(elements.begin(), elements.end(), [](const BasisElt& a, const BasisElt& b) { return loopfree_less(b, a); });
    std::vector<Chain> boundaries;
    for (const auto& b : elements) boundaries.push_back(boundary(b));

    Chain chosen(dim, n);
    Chain residual = target;
    auto search = [&](auto&& self, std::size_t k) -> void {
        if (k == elements.size()) {
            if (residual.is_zero()) out.push_back(chosen);
            return;
        }
        Coefficient bound = -1;
        for (const auto& [e, coef] : boundaries[k].terms())
            if (coef > 0) bound = bound < 0 ? residual.coefficient(e) : std::min(bound, residual.coefficient(e));
        bound = std::max<Coefficient>(bound, 0);
        for (Coefficient c = 0; c <= bound; ++c) {
            if (c > 0) {
                chosen.add_term(elements[k], 1);
                residual -= boundaries[k];
            }
            self(self, k + 1);
        }
        if (bound > 0) {
            chosen.add_term(elements[k], -bound);
            residual += bound * boundaries[k];
        }
    };
    search(search, 0);
    return out;
}

/// Every member of nu K[n], sorted.
///
/// Members are grown one dimension at a time: a 0-level pair ([a],[b]) is
/// extended by pairs of nonnegative preimages of x+_q - x-_q until the top
/// pair becomes diagonal.
inline std::vector<DoubleSeq> enumerate_nu(int n, const EnumerationLimits& limits = {}) {
    if (n < 0) throw PreconditionError("enumerate_nu needs n >= 0");
    if (n > limits.max_n)
        throw ResourceError("enumerate_nu: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_n));
    std::set<DoubleSeq> found;
    RawDoubleSeq current;
    auto grow = [&](auto&& self) -> void {
        const auto& top = current.back();
        if (top.neg == top.pos) {
            found.insert(detail::checked(current, n, "enumerate_nu"));
            if (found.size() > limits.max_cells)
                throw ResourceError("enumerate_nu: more than " + std::to_string(limits.max_cells) + " cells");
            return;
        }
        auto sols = nonnegative_preimages(top.pos - top.neg);
        for (const auto& lo : sols)
            for (const auto& hi : sols) {
                current.push_back({lo, hi});
                self(self);
                current.pop_back();
            }
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            current = {{Chain(BasisElt({a}, n)), Chain(BasisElt({b}, n))}};
            grow(grow);
        }
    return {found.begin(), found.end()};
}

struct AtomGenerationReport {
    bool generated = false;
    std::size_t closure_size = 0;
    std::size_t member_count = 0;
};

/// Closes the atoms of nu K[n] under all identities d(+-,p,.) and defined
/// composites o_p, and compares with the full enumeration.
inline AtomGenerationReport check_atom_generation(int n, const EnumerationLimits& limits = {}) {
    auto all = enumerate_nu(n, limits);
    auto gens = atoms(n);
    std::set<DoubleSeq> closure(gens.begin(), gens.end());
    std::vector<DoubleSeq> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<DoubleSeq> fresh;
        auto offer = [&](DoubleSeq s) {
            if (closure.insert(s).second) fresh.push_back(std::move(s));
        };
        for (const auto& x : frontier)
            for (int p = 0; p <= n; ++p) {
                offer(d(Sign::minus, p, x));
                offer(d(Sign::plus, p, x));
            }
        // Composites with at least one new factor.
        std::vector<DoubleSeq> snapshot(closure.begin(), closure.end());
        for (const auto& x : frontier)
            for (const auto& y : snapshot)
                for (int p = 0; p <= n; ++p) {
                    if (composable(p, x, y)) offer(nu_compose(p, x, y));
                    if (composable(p, y, x)) offer(nu_compose(p, y, x));
                }
        if (closure.size() > limits.max_cells) throw ResourceError("check_atom_generation: closure too large");
        frontier = std::move(fresh);
    }
    AtomGenerationReport report;
    report.closure_size = closure.size();
    report.member_count = all.size();
    report.generated = std::equal(closure.begin(), closure.end(), all.begin(), all.end());
    return report;
}

/// One level of a cell in set form: (a^1_q, a^0_q).
struct SetPair {
    std::set<BasisElt> source;
    std::set<BasisElt> target;
};

/// Converts a set-pair sequence to a double sequence by summing each set:
/// x-_q is the sum of a^1_q and x+_q the sum of a^0_q.
inline DoubleSeq from_street_cell(const std::vector<SetPair>& cell, int n) {
    RawDoubleSeq raw;
    for (std::size_t q = 0; q < cell.size(); ++q) {
        int dim = static_cast<int>(q);
        ChainPair pr{Chain(dim, n), Chain(dim, n)};
        for (const auto& b : cell[q].source) pr.neg.add_term(b, 1);
        for (const auto& b : cell[q].target) pr.pos.add_term(b, 1);
        raw.push_back(std::move(pr));
    }
    return make_double_seq(std::move(raw), n);
}

/// Image of a cell under the omega-functor induced by an oriental morphism.
inline DoubleSeq act(const ZMorphism& x, const DoubleSeq& s) {
    if (x.domain() != s.ambient())
        throw ArityError("act: morphism domain " + std::to_string(x.domain()) + " != cell ambient " + std::to_string(s.ambient()));
    require_oriental(x, "act");
    auto table = to_chain_map(x);
    RawDoubleSeq raw;
    for (const auto& pr : s.pairs()) raw.push_back({table.apply(pr.neg), table.apply(pr.pos)});
    return detail::checked(std::move(raw), x.codomain(), "act");
}

}  // namespace orientals
