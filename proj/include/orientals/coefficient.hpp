#pragma once

#include <cstdint>

#include "orientals/error.hpp"

namespace orientals {

/// Integer coefficient of a linear combination. Arithmetic goes through the
/// checked helpers below, which throw OverflowError instead of wrapping.
using Coefficient = std::int64_t;

inline Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

inline Coefficient checked_sub(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
    return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
}

inline Coefficient checked_neg(Coefficient a) { return checked_sub(0, a); }

namespace detail {

/// Adds `coef` to the entry for `key`, erasing it when the sum vanishes.
template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, Coefficient coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms.try_emplace(key, coef);
    if (!inserted) {
        it->second = checked_add(it->second, coef);
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace detail

}  // namespace orientals
