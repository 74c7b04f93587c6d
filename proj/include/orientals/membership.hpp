#pragma once

// Deciding whether a combination in ZDelta(m,n) is a morphism of orientals.

#include <optional>
#include <string>

#include "orientals/linear.hpp"

namespace orientals {

/// Evidence that condition (2) fails: the injective term `term` has the
/// negative coefficient `coefficient` in x o probe.
struct MembershipWitness {
    MonotoneMap probe;
    MonotoneMap term;
    Coefficient coefficient;
};

struct MembershipResult {
    bool member = false;
    Coefficient coefficient_sum = 0;
    std::optional<MembershipWitness> witness;

    explicit operator bool() const noexcept { return member; }

    std::string describe() const {
        if (member) return "member";
        if (coefficient_sum != 1) return "coefficient sum is " + std::to_string(coefficient_sum) + ", not 1";
        return "injective term " + witness->term.tuple_string() + " has coefficient " +
               std::to_string(witness->coefficient) + " in x o " + witness->probe.tuple_string();
    }
};

/// x is in O(m,n) iff its coefficients sum to 1 and, for every injective f
/// with codomain m, the injective terms of x o f have nonnegative
/// coefficients. All 2^(m+1) - 1 probes are tried in enumeration order; the
/// first failure becomes the witness.
inline MembershipResult is_oriental_morphism(const ZMorphism& x) {
    MembershipResult out;
    out.coefficient_sum = coefficient_sum(x);
    if (out.coefficient_sum != 1) return out;
    for (const auto& f : enumerate_injective_into(x.domain())) {
        const auto composed = zcompose(x, f);
        for (const auto& [term, coef] : composed.terms()) {
            if (coef < 0 && is_injective(term)) {
                out.witness = MembershipWitness{f, term, coef};
                return out;
            }
        }
    }
    out.member = true;
    return out;
}

inline void require_oriental(const ZMorphism& x, const char* where) {
    auto r = is_oriental_morphism(x);
    if (!r) throw PreconditionError(std::string(where) + ": " + x.to_string() + " is not an oriental morphism (" + r.describe() + ")");
}

}  // namespace orientals
