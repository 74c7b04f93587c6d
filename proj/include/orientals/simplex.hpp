#pragma once

// Morphisms of the simplex category: non-decreasing maps {0..m} -> {0..n}.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientals/detail/scanner.hpp"
#include "orientals/error.hpp"

namespace orientals {

/// A non-decreasing map (f_0, ..., f_m) with an explicit codomain n.
///
/// The domain is m = size() - 1. Two maps with the same values but different
/// codomains are different morphisms. The empty tuple is rejected.
class MonotoneMap {
public:
    MonotoneMap(std::vector<int> values, int codomain) : values_(std::move(values)), codomain_(codomain) {
        if (codomain_ < 0) throw PreconditionError("monotone map codomain must be nonnegative");
        if (values_.empty()) throw PreconditionError("monotone map must have at least one value");
        if (values_.front() < 0) throw PreconditionError("monotone map value below 0: " + to_string());
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] < values_[i - 1]) throw PreconditionError("monotone map is not non-decreasing: " + to_string());
        if (values_.back() > codomain_) throw PreconditionError("monotone map value exceeds codomain: " + to_string());
    }

    static MonotoneMap identity(int m) {
        std::vector<int> v(static_cast<std::size_t>(m + 1));
        for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(std::move(v), m);
    }

    static MonotoneMap constant(int value, int m, int codomain) {
        return MonotoneMap(std::vector<int>(static_cast<std::size_t>(m + 1), value), codomain);
    }

    int domain() const noexcept { return static_cast<int>(values_.size()) - 1; }
    int codomain() const noexcept { return codomain_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const int> values() const noexcept { return values_; }
    int operator[](std::size_t i) const { return values_[i]; }
    int front() const noexcept { return values_.front(); }
    int back() const noexcept { return values_.back(); }

    bool is_constant() const noexcept { return values_.front() == values_.back(); }

    /// "(f0,...,fm)"
    std::string tuple_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(values_[i]);
        }
        return out + ")";
    }

    /// "(f0,...,fm):n"
    std::string to_string() const { return tuple_string() + ":" + std::to_string(codomain_); }

    friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

    friend std::ostream& operator<<(std::ostream& os, const MonotoneMap& f) { return os << f.to_string(); }

private:
    std::vector<int> values_;
    int codomain_;
};

/// g o f, i.e. i -> g(f(i)).
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.codomain() != g.domain())
        throw ArityError("cannot compose " + g.to_string() + " after " + f.to_string() + ": codomain " +
                         std::to_string(f.codomain()) + " != domain " + std::to_string(g.domain()));
    std::vector<int> out;
    out.reserve(f.size());
    for (int v : f.values()) out.push_back(g[static_cast<std::size_t>(v)]);
    return MonotoneMap(std::move(out), g.codomain());
}

inline bool is_injective(const MonotoneMap& f) noexcept {
    auto v = f.values();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return false;
    return true;
}

inline bool is_surjective(const MonotoneMap& f) noexcept {
    auto v = f.values();
    if (v.front() != 0 || v.back() != f.codomain()) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1] + 1) return false;
    return true;
}

/// (0, ..., i-1, i+1, ..., m) : m-1 -> m, the map skipping i.
inline MonotoneMap face_generator(int i, int m) {
    if (m <= 0) throw IndexError("face generator needs m > 0, got m = " + std::to_string(m));
    if (i < 0 || i > m) throw IndexError("face index " + std::to_string(i) + " out of range [0," + std::to_string(m) + "]");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k <= m; ++k)
        if (k != i) v.push_back(k);
    return MonotoneMap(std::move(v), m);
}

/// (0, ..., i, i, ..., m) : m+1 -> m, the map hitting i twice.
inline MonotoneMap degeneracy_generator(int i, int m) {
    if (m < 0 || i < 0 || i > m)
        throw IndexError("degeneracy index " + std::to_string(i) + " out of range [0," + std::to_string(m) + "]");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m + 2));
    for (int k = 0; k <= m; ++k) {
        v.push_back(k);
        if (k == i) v.push_back(k);
    }
    return MonotoneMap(std::move(v), m);
}

/// All injective maps with codomain m, i.e. the nonempty subsets of {0..m},
/// ordered by size and then lexicographically. There are 2^(m+1) - 1 of them.
inline std::vector<MonotoneMap> enumerate_injective_into(int m) {
    if (m < 0) throw PreconditionError("enumerate_injective_into needs m >= 0");
    if (m > 30) throw ResourceError("enumerate_injective_into: m too large");
    std::vector<MonotoneMap> out;
    out.reserve((std::size_t{1} << (m + 1)) - 1);
    std::vector<int> pick;
    // Lexicographic k-subsets of {0..m}, for k = 1..m+1.
    for (int k = 1; k <= m + 1; ++k) {
        pick.resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j;
        while (true) {
            out.emplace_back(pick, m);
            int j = k - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - (k - 1 - j)) --j;
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < k; ++l) pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
    }
    return out;
}

/// All monotone maps m -> n in lexicographic order.
inline std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
    if (m < 0 || n < 0) throw PreconditionError("enumerate_monotone needs m, n >= 0");
    std::vector<MonotoneMap> out;
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    while (true) {
        out.emplace_back(v, n);
        int j = m;
        while (j >= 0 && v[static_cast<std::size_t>(j)] == n) --j;
        if (j < 0) break;
        int next = v[static_cast<std::size_t>(j)] + 1;
        for (int l = j; l <= m; ++l) v[static_cast<std::size_t>(l)] = next;
        if (out.size() > 10'000'000) throw ResourceError("enumerate_monotone: too many maps");
    }
    return out;
}

/// Appends `value` to the tuple: (f_0, ..., f_m) -> (f_0, ..., f_m, value).
inline MonotoneMap append_value(const MonotoneMap& f, int value) {
    std::vector<int> v(f.values().begin(), f.values().end());
    v.push_back(value);
    return MonotoneMap(std::move(v), f.codomain());
}

namespace detail {

inline MonotoneMap parse_map(Scanner& in, int default_codomain) {
    auto start = in.position();
    auto values = in.int_tuple('(', ')');
    int codomain = default_codomain;
    if (in.consume(':')) codomain = in.small_int();
    if (codomain < 0) throw ParseError("monotone map needs a codomain", start);
    try {
        return MonotoneMap(std::move(values), codomain);
    } catch (const Error& e) {
        throw ParseError(e.what(), start);
    }
}

}  // namespace detail

/// Parses "(f0,...,fm):n". The ":n" suffix may be omitted when `default_codomain` >= 0.
inline MonotoneMap parse_monotone_map(std::string_view text, int default_codomain = -1) {
    detail::Scanner in(text);
    auto f = detail::parse_map(in, default_codomain);
    if (!in.at_end()) in.fail("trailing characters after monotone map");
    return f;
}

}  // namespace orientals
