#pragma once

// The chain complexes K[n] of the standard simplexes with their prescribed
// bases, and the passage between ZDelta(m,n) and chain maps K[m] -> K[n].

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orientals/coefficient.hpp"
#include "orientals/linear.hpp"
#include "orientals/simplex.hpp"

namespace orientals {

/// A basis element [a_0, ..., a_q] of K[n], 0 <= a_0 < ... < a_q <= n.
class BasisElt {
public:
    BasisElt(std::vector<int> vertices, int ambient) : vertices_(std::move(vertices)), ambient_(ambient) {
        if (ambient_ < 0) throw PreconditionError("basis element needs a nonnegative ambient dimension");
        if (vertices_.empty()) throw PreconditionError("basis element needs at least one vertex");
        if (vertices_.front() < 0 || vertices_.back() > ambient_)
            throw PreconditionError("basis element vertex out of range: " + to_string());
        for (std::size_t i = 1; i < vertices_.size(); ++i)
            if (vertices_[i] <= vertices_[i - 1])
                throw PreconditionError("basis element vertices must be strictly increasing: " + to_string());
    }

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    int ambient() const noexcept { return ambient_; }
    const std::vector<int>& vertices() const noexcept { return vertices_; }
    int operator[](std::size_t i) const { return vertices_[i]; }
    int front() const noexcept { return vertices_.front(); }
    int back() const noexcept { return vertices_.back(); }

    /// The element with vertex i removed (requires dimension >= 1).
    BasisElt without(std::size_t i) const {
        std::vector<int> v;
        v.reserve(vertices_.size() - 1);
        for (std::size_t k = 0; k < vertices_.size(); ++k)
            if (k != i) v.push_back(vertices_[k]);
        return BasisElt(std::move(v), ambient_);
    }

    /// "[a0,...,aq]"
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(vertices_[i]);
        }
        return out + "]";
    }

    friend auto operator<=>(const BasisElt&, const BasisElt&) = default;
    friend bool operator==(const BasisElt&, const BasisElt&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BasisElt& b) { return os << b.to_string(); }

private:
    std::vector<int> vertices_;
    int ambient_;
};

/// A homogeneous q-dimensional chain of K[n] with no zero coefficients stored.
class Chain {
public:
    using Terms = std::map<BasisElt, Coefficient>;

    Chain(int dimension, int ambient) : dimension_(dimension), ambient_(ambient) {
        if (dimension < 0 || ambient < 0) throw PreconditionError("chain needs nonnegative dimension and ambient");
    }

    explicit Chain(const BasisElt& b, Coefficient coef = 1) : Chain(b.dimension(), b.ambient()) { add_term(b, coef); }

    int dimension() const noexcept { return dimension_; }
    int ambient() const noexcept { return ambient_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coefficient coefficient(const BasisElt& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? 0 : it->second;
    }

    /// All coefficients >= 0, i.e. the chain is a sum of basis elements.
    bool is_nonnegative() const noexcept {
        for (const auto& [b, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    Chain& add_term(const BasisElt& b, Coefficient coef) {
        if (b.dimension() != dimension_ || b.ambient() != ambient_)
            throw ArityError("basis element " + b.to_string() + " does not belong to K[" + std::to_string(ambient_) +
                             "]_" + std::to_string(dimension_));
        detail::accumulate(terms_, b, coef);
        return *this;
    }

    Chain& operator+=(const Chain& other) {
        check_same_shape(other);
        for (const auto& [b, c] : other.terms_) detail::accumulate(terms_, b, c);
        return *this;
    }

    Chain& operator-=(const Chain& other) {
        check_same_shape(other);
        for (const auto& [b, c] : other.terms_) detail::accumulate(terms_, b, checked_neg(c));
        return *this;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

    friend Chain operator*(Coefficient k, const Chain& a) {
        Chain out(a.dimension_, a.ambient_);
        if (k == 0) return out;
        for (const auto& [b, c] : a.terms_) out.terms_.emplace(b, checked_mul(k, c));
        return out;
    }

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain&, const Chain&) = default;

    /// "[1,2] - [0,2] + [0,1]"; zero renders as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            Coefficient mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1) out += std::to_string(mag) + "*";
            out += b.to_string();
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.to_string(); }

private:
    void check_same_shape(const Chain& other) const {
        if (dimension_ != other.dimension_ || ambient_ != other.ambient_)
            throw ArityError("chains live in different groups: K[" + std::to_string(ambient_) + "]_" +
                             std::to_string(dimension_) + " vs K[" + std::to_string(other.ambient_) + "]_" +
                             std::to_string(other.dimension_));
    }

    int dimension_;
    int ambient_;
    Terms terms_;
};

/// All basis elements of K[n] in dimension q, lexicographically.
inline std::vector<BasisElt> basis(int n, int q) {
    std::vector<BasisElt> out;
    if (q < 0 || q > n) return out;
    for (const auto& f : enumerate_injective_into(n))
        if (f.domain() == q) out.emplace_back(std::vector<int>(f.values().begin(), f.values().end()), n);
    return out;
}

/// All basis elements of K[n], by dimension and then lexicographically.
inline std::vector<BasisElt> basis(int n) {
    std::vector<BasisElt> out;
    for (const auto& f : enumerate_injective_into(n))
        out.emplace_back(std::vector<int>(f.values().begin(), f.values().end()), n);
    return out;
}

/// Alternating-sum boundary, extended linearly.
inline Chain boundary(const Chain& c) {
    if (c.dimension() == 0) throw DimensionError("boundary of a 0-dimensional chain");
    Chain out(c.dimension() - 1, c.ambient());
    for (const auto& [b, coef] : c.terms())
        for (std::size_t i = 0; i < b.vertices().size(); ++i)
            out.add_term(b.without(i), i % 2 == 0 ? coef : checked_neg(coef));
    return out;
}

inline Chain boundary(const BasisElt& b) { return boundary(Chain(b)); }

/// Augmentation of a 0-chain: the sum of its coefficients.
inline Coefficient augmentation(const Chain& c) {
    if (c.dimension() != 0) throw DimensionError("augmentation is defined on 0-chains only");
    Coefficient s = 0;
    for (const auto& [b, coef] : c.terms()) s = checked_add(s, coef);
    return s;
}

enum class Sign { minus, plus };

inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

/// Negative and positive parts of a boundary: d c = pos - neg, with neg and
/// pos nonnegative and disjointly supported.
struct BoundaryParts {
    Chain neg;
    Chain pos;

    const Chain& part(Sign s) const { return s == Sign::minus ? neg : pos; }
};

inline BoundaryParts boundary_parts(const Chain& c) {
    auto d = boundary(c);
    BoundaryParts out{Chain(d.dimension(), d.ambient()), Chain(d.dimension(), d.ambient())};
    for (const auto& [b, coef] : d.terms()) {
        if (coef > 0)
            out.pos.add_term(b, coef);
        else
            out.neg.add_term(b, checked_neg(coef));
    }
    return out;
}

/// (d^sign)^k b, applying the chosen boundary part k times.
inline Chain iterated_parts(const BasisElt& b, int k, Sign sign) {
    if (k < 0 || k > b.dimension())
        throw IndexError("iterated_parts: k = " + std::to_string(k) + " outside [0," + std::to_string(b.dimension()) + "]");
    Chain running(b);
    for (int step = 0; step < k; ++step) running = boundary_parts(running).part(sign);
    return running;
}

struct UnitalReport {
    bool unital = true;
    /// Basis elements b of dimension p with e(d-)^p b != 1 or e(d+)^p b != 1.
    std::vector<BasisElt> failures;
};

/// Checks e(d-)^p b = e(d+)^p b = 1 for every basis element b of K[n].
inline UnitalReport check_unital(int n) {
    if (n < 0) throw PreconditionError("check_unital needs n >= 0");
    UnitalReport report;
    for (const auto& b : basis(n)) {
        int p = b.dimension();
        if (augmentation(iterated_parts(b, p, Sign::minus)) != 1 || augmentation(iterated_parts(b, p, Sign::plus)) != 1) {
            report.unital = false;
            report.failures.push_back(b);
        }
    }
    return report;
}

/// The recursive total order on basis elements: a < b if a_0 < b_0, or
/// a_0 = b_0 and a = [a_0], or a_0 = b_0, both have positive dimension and
/// [a_1..a_p] > [b_1..b_q].
inline bool loopfree_less(const BasisElt& a, const BasisElt& b) {
    if (a.ambient() != b.ambient()) throw ArityError("loopfree_less: elements of different complexes");
    if (a == b) throw PreconditionError("loopfree_less: the order is strict, elements are equal: " + a.to_string());
    const auto& av = a.vertices();
    const auto& bv = b.vertices();
    std::size_t i = 0;
    // Each recursive step drops the common leading vertex and flips the direction.
    bool flipped = false;
    while (true) {
        bool less;
        if (av[i] != bv[i]) {
            less = av[i] < bv[i];
        } else if (i + 1 == av.size()) {
            less = true;
        } else if (i + 1 == bv.size()) {
            less = false;
        } else {
            ++i;
            flipped = !flipped;
            continue;
        }
        return flipped ? !less : less;
    }
}

struct LoopFreeViolation {
    BasisElt lower;
    BasisElt upper;
};

struct LoopFreeReport {
    bool strongly_loop_free = true;
    /// Pairs (a, b) that the boundary forces to satisfy a < b but which the order puts the other way.
    std::vector<LoopFreeViolation> violations;
};

/// Verifies that loopfree_less witnesses strong loop-freeness of K[n]: every
/// negative term of d b lies below b and every positive term of d a lies above a.
inline LoopFreeReport check_strongly_loopfree(int n) {
    if (n < 0) throw PreconditionError("check_strongly_loopfree needs n >= 0");
    LoopFreeReport report;
    for (const auto& b : basis(n)) {
        if (b.dimension() == 0) continue;
        const Chain db = boundary(b);
        for (const auto& [term, coef] : db.terms()) {
            const BasisElt& lower = coef < 0 ? term : b;
            const BasisElt& upper = coef < 0 ? b : term;
            if (!loopfree_less(lower, upper)) {
                report.strongly_loop_free = false;
                report.violations.push_back({lower, upper});
            }
        }
    }
    return report;
}

/// f[a(0), ..., a(q)]: the image basis element if f is injective on the
/// vertices of b, otherwise the zero chain.
inline Chain apply_map(const MonotoneMap& f, const BasisElt& b) {
    if (b.ambient() != f.domain())
        throw ArityError("apply_map: " + b.to_string() + " is not in K[" + std::to_string(f.domain()) + "]");
    Chain out(b.dimension(), f.codomain());
    std::vector<int> image;
    image.reserve(b.vertices().size());
    for (int v : b.vertices()) {
        int w = f[static_cast<std::size_t>(v)];
        if (!image.empty() && image.back() == w) return out;
        image.push_back(w);
    }
    out.add_term(BasisElt(std::move(image), f.codomain()), 1);
    return out;
}

/// Images of every basis element of K[m] under a homomorphism K[m] -> K[n]
/// that preserves dimension.
class ChainMapTable {
public:
    using Images = std::map<BasisElt, Chain>;

    /// Builds a table and checks it is a chain map: each image has the right
    /// dimension, every basis element has an image, and d commutes with it.
    ChainMapTable(int domain, int codomain, Images images)
        : domain_(domain), codomain_(codomain), images_(std::move(images)) {
        if (auto problem = first_violation()) throw InvalidInputError("not a chain map: " + *problem);
    }

    int domain() const noexcept { return domain_; }
    int codomain() const noexcept { return codomain_; }
    const Images& images() const noexcept { return images_; }

    const Chain& image(const BasisElt& b) const {
        auto it = images_.find(b);
        if (it == images_.end()) throw ArityError("chain map table has no entry for " + b.to_string());
        return it->second;
    }

    /// Linear extension to an arbitrary chain of K[m].
    Chain apply(const Chain& c) const {
        if (c.ambient() != domain_) throw ArityError("chain is not in the domain complex");
        Chain out(c.dimension(), codomain_);
        for (const auto& [b, coef] : c.terms()) out += coef * image(b);
        return out;
    }

    /// The common value of e(phi[a]) over vertices [a]. It is the same for
    /// every vertex since [a'] - [a] is a boundary.
    Coefficient augmentation_factor() const { return augmentation(image(BasisElt({0}, domain_))); }

    /// Whether e(phi c) = e(c) on 0-chains.
    bool preserves_augmentation() const { return augmentation_factor() == 1; }

    friend bool operator==(const ChainMapTable&, const ChainMapTable&) = default;

private:
    std::optional<std::string> first_violation() const {
        if (domain_ < 0 || codomain_ < 0) return "negative dimension";
        auto elements = basis(domain_);
        if (images_.size() != elements.size()) return "table does not cover exactly the basis of K[" + std::to_string(domain_) + "]";
        std::optional<Coefficient> eps;
        for (const auto& b : elements) {
            auto it = images_.find(b);
            if (it == images_.end()) return "missing image of " + b.to_string();
            const Chain& img = it->second;
            if (img.dimension() != b.dimension() || img.ambient() != codomain_)
                return "image of " + b.to_string() + " has the wrong dimension or ambient";
            if (b.dimension() == 0) {
                auto e = augmentation(img);
                if (eps && *eps != e) return "augmentation of vertex images is not constant";
                eps = e;
            } else {
                Chain lhs(b.dimension() - 1, codomain_);
                const Chain db = boundary(b);
                for (const auto& [face, coef] : db.terms()) lhs += coef * images_.at(face);
                if (lhs != boundary(img)) return "boundary does not commute at " + b.to_string();
            }
        }
        return std::nullopt;
    }

    int domain_;
    int codomain_;
    Images images_;
};

/// The chain map induced by a combination of monotone maps.
inline ChainMapTable to_chain_map(const ZMorphism& x) {
    ChainMapTable::Images images;
    for (const auto& b : basis(x.domain())) {
        Chain img(b.dimension(), x.codomain());
        for (const auto& [f, coef] : x.terms()) img += coef * apply_map(f, b);
        images.emplace(b, std::move(img));
    }
    try {
        return ChainMapTable(x.domain(), x.codomain(), std::move(images));
    } catch (const InvalidInputError& e) {
        throw InternalError(std::string("to_chain_map produced an invalid table: ") + e.what());
    }
}

namespace detail {

/// The monotone map corresponding to the pair (a, b) with a = [0 = a_0 < ... < a_q]
/// in K[m] and b = [b_0 < ... < b_q] in K[n]: it sends j to b_i for a_i <= j < a_{i+1}.
inline MonotoneMap map_from_pair(const BasisElt& a, const BasisElt& b) {
    std::vector<int> v(static_cast<std::size_t>(a.ambient() + 1));
    const auto& av = a.vertices();
    for (std::size_t i = 0; i < av.size(); ++i) {
        int stop = i + 1 < av.size() ? av[i + 1] : a.ambient() + 1;
        for (int j = av[i]; j < stop; ++j) v[static_cast<std::size_t>(j)] = b[i];
    }
    return MonotoneMap(std::move(v), b.ambient());
}

}  // namespace detail

/// Inverse of to_chain_map.
///
/// Every monotone map f corresponds to a pair (a, b), where b lists the image
/// of f and a_i is the least preimage of b_i, so a always starts at 0. The map
/// f sends a to b, kills basis elements starting at 0 of higher dimension,
/// and kills those of the same dimension that precede a lexicographically.
/// Eliminating from the top dimension down, and in lexicographic order within
/// a dimension, therefore reads off each coefficient exactly once.
inline ZMorphism from_chain_map(const ChainMapTable& phi) {
    const int m = phi.domain();
    const int n = phi.codomain();
    // Residual images on the elements starting at 0.
    std::map<BasisElt, Chain> residual;
    for (const auto& [b, img] : phi.images())
        if (b.front() == 0) residual.emplace(b, img);

    ZMorphism x(m, n);
    for (int q = m; q >= 0; --q) {
        for (const auto& a : basis(m, q)) {
            if (a.front() != 0) continue;
            // Copy: the loop below subtracts from residual[a] itself.
            const Chain target = residual.at(a);
            for (const auto& [b, coef] : target.terms()) {
                auto f = detail::map_from_pair(a, b);
                x.add_term(f, coef);
                for (auto& [elt, img] : residual) img -= coef * apply_map(f, elt);
            }
        }
    }
    for (const auto& [elt, img] : residual)
        if (!img.is_zero()) throw InternalError("from_chain_map: nonzero residual at " + elt.to_string());
    if (to_chain_map(x) != phi)
        throw InvalidInputError("table is determined on elements starting at 0 but does not match the recovered combination");
    return x;
}

}  // namespace orientals
