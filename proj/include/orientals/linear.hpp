#pragma once

// The linearized simplex category: integer combinations of monotone maps
// with a fixed domain and codomain, composed bilinearly.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "orientals/coefficient.hpp"
#include "orientals/simplex.hpp"

namespace orientals {

/// A finite integer combination of monotone maps m -> n.
///
/// Terms are kept in lexicographic order of their value tuples and no stored
/// coefficient is zero, so equality is structural. The empty combination is
/// a valid element.
class ZMorphism {
public:
    using Terms = std::map<MonotoneMap, Coefficient>;

    ZMorphism(int domain, int codomain) : domain_(domain), codomain_(codomain) {
        if (domain < 0 || codomain < 0) throw PreconditionError("ZMorphism needs nonnegative domain and codomain");
    }

    explicit ZMorphism(const MonotoneMap& f, Coefficient coef = 1) : ZMorphism(f.domain(), f.codomain()) {
        add_term(f, coef);
    }

    static ZMorphism identity(int m) { return ZMorphism(MonotoneMap::identity(m)); }

    int domain() const noexcept { return domain_; }
    int codomain() const noexcept { return codomain_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coefficient coefficient(const MonotoneMap& f) const {
        auto it = terms_.find(f);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds coef * f, dropping the term if it cancels.
    ZMorphism& add_term(const MonotoneMap& f, Coefficient coef) {
        if (f.domain() != domain_ || f.codomain() != codomain_)
            throw ArityError("term " + f.to_string() + " does not belong to ZDelta(" + std::to_string(domain_) + "," +
                             std::to_string(codomain_) + ")");
        detail::accumulate(terms_, f, coef);
        return *this;
    }

    ZMorphism& operator+=(const ZMorphism& other) {
        check_same_shape(other, "add");
        for (const auto& [f, c] : other.terms_) detail::accumulate(terms_, f, c);
        return *this;
    }

    ZMorphism& operator-=(const ZMorphism& other) {
        check_same_shape(other, "subtract");
        for (const auto& [f, c] : other.terms_) detail::accumulate(terms_, f, checked_neg(c));
        return *this;
    }

    friend ZMorphism operator+(ZMorphism a, const ZMorphism& b) { return a += b; }
    friend ZMorphism operator-(ZMorphism a, const ZMorphism& b) { return a -= b; }

    friend ZMorphism operator-(const ZMorphism& a) {
        ZMorphism out(a.domain_, a.codomain_);
        for (const auto& [f, c] : a.terms_) out.terms_.emplace(f, checked_neg(c));
        return out;
    }

    friend ZMorphism operator*(Coefficient k, const ZMorphism& a) {
        ZMorphism out(a.domain_, a.codomain_);
        if (k == 0) return out;
        for (const auto& [f, c] : a.terms_) out.terms_.emplace(f, checked_mul(k, c));
        return out;
    }

    friend bool operator==(const ZMorphism&, const ZMorphism&) = default;
    friend auto operator<=>(const ZMorphism&, const ZMorphism&) = default;

    /// "(0,1) - (1,1) + 2*(1,2)"; the zero combination renders as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [f, c] : terms_) {
            Coefficient mag = c < 0 ? checked_neg(c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1) out += std::to_string(mag) + "*";
            out += f.tuple_string();
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZMorphism& x) {
        return os << x.to_string() << " in ZDelta(" << x.domain_ << "," << x.codomain_ << ")";
    }

private:
    void check_same_shape(const ZMorphism& other, const char* op) const {
        if (domain_ != other.domain_ || codomain_ != other.codomain_)
            throw ArityError(std::string("cannot ") + op + " ZDelta(" + std::to_string(domain_) + "," +
                             std::to_string(codomain_) + ") and ZDelta(" + std::to_string(other.domain_) + "," +
                             std::to_string(other.codomain_) + ")");
    }

    int domain_;
    int codomain_;
    Terms terms_;
};

inline ZMorphism add(const ZMorphism& x, const ZMorphism& y) { return x + y; }
inline ZMorphism negate(const ZMorphism& x) { return -x; }

/// Bilinear composite y o x.
inline ZMorphism zcompose(const ZMorphism& y, const ZMorphism& x) {
    if (x.codomain() != y.domain())
        throw ArityError("cannot compose ZDelta(" + std::to_string(y.domain()) + "," + std::to_string(y.codomain()) +
                         ") after ZDelta(" + std::to_string(x.domain()) + "," + std::to_string(x.codomain()) + ")");
    ZMorphism out(x.domain(), y.codomain());
    for (const auto& [g, mu] : y.terms())
        for (const auto& [f, lambda] : x.terms()) out.add_term(compose(g, f), checked_mul(mu, lambda));
    return out;
}

inline ZMorphism zcompose(const ZMorphism& y, const MonotoneMap& f) { return zcompose(y, ZMorphism(f)); }

/// Face operator: x o (0, ..., i-1, i+1, ..., m).
inline ZMorphism face(int i, const ZMorphism& x) {
    if (x.domain() == 0) throw IndexError("face of a combination with domain 0");
    return zcompose(x, face_generator(i, x.domain()));
}

/// Degeneracy operator: x o (0, ..., i, i, ..., m).
inline ZMorphism degeneracy(int i, const ZMorphism& x) { return zcompose(x, degeneracy_generator(i, x.domain())); }

inline Coefficient coefficient_sum(const ZMorphism& x) {
    Coefficient s = 0;
    for (const auto& [f, c] : x.terms()) s = checked_add(s, c);
    return s;
}

inline ZMorphism injective_part(const ZMorphism& x) {
    ZMorphism out(x.domain(), x.codomain());
    for (const auto& [f, c] : x.terms())
        if (is_injective(f)) out.add_term(f, c);
    return out;
}

/// Smallest and largest integer appearing in any term; nullopt for zero.
inline std::optional<std::pair<int, int>> value_range(const ZMorphism& x) {
    if (x.is_zero()) return std::nullopt;
    int lo = x.codomain(), hi = 0;
    for (const auto& [f, c] : x.terms()) {
        lo = std::min(lo, f.front());
        hi = std::max(hi, f.back());
    }
    return std::pair{lo, hi};
}

/// Appends the vertex `value` to every term: (a_0..a_m) -> (a_0..a_m, value).
inline ZMorphism append_vertex(const ZMorphism& x, int value) {
    ZMorphism out(x.domain() + 1, x.codomain());
    for (const auto& [f, c] : x.terms()) out.add_term(append_value(f, value), c);
    return out;
}

namespace detail {

/// term := [int '*'] tuple ; combination := ['-'] term (('+'|'-') term)* | '0'
inline ZMorphism parse_combination(Scanner& in, int codomain, std::optional<int> domain) {
    if (in.peek() == '0' && in.rest().find_first_not_of(" \t\r\n", 1) == std::string_view::npos) {
        in.integer();
        if (!domain) in.fail("the zero combination needs an explicit domain");
        return ZMorphism(*domain, codomain);
    }
    std::optional<ZMorphism> out;
    bool negative = in.consume_minus();
    if (!negative) in.consume('+');
    while (true) {
        Coefficient coef = 1;
        if (in.peek_digit()) {
            coef = in.integer();
            in.expect('*');
        }
        auto at = in.position();
        auto f = parse_map(in, codomain);
        if (f.codomain() != codomain) throw ParseError("term codomain differs from the combination's", at);
        if (!out) {
            if (domain && *domain != f.domain()) throw ParseError("term domain differs from the requested one", at);
            out.emplace(f.domain(), codomain);
        }
        if (f.domain() != out->domain()) throw ParseError("terms have different domains", at);
        out->add_term(f, negative ? checked_neg(coef) : coef);
        if (in.consume('+'))
            negative = false;
        else if (in.consume_minus())
            negative = true;
        else
            break;
    }
    return *out;
}

}  // namespace detail

/// Parses the text form, e.g. "(0,1) - (1,1) + (1,2)" or "2*(0,1) - (1,1)".
/// The codomain must be supplied; terms may also carry an explicit ":n".
inline ZMorphism parse_zmorphism(std::string_view text, int codomain, std::optional<int> domain = std::nullopt) {
    detail::Scanner in(text);
    auto x = detail::parse_combination(in, codomain, domain);
    if (!in.at_end()) in.fail("trailing characters after combination");
    return x;
}

}  // namespace orientals
