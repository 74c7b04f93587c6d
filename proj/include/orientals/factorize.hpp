#pragma once

// Filler expressions over the simplex category, their evaluation, and the
// factorisation of every morphism of orientals into one.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orientals/oriental.hpp"

namespace orientals {

/// An expression tree whose leaves are monotone maps and whose inner nodes
/// are fillers F_i(L,R), pastings P_i(L,R), or precomposition C[d](E) with a
/// monotone map d. Immutable; subtrees are shared.
class FillerExpr {
public:
    enum class Kind { leaf, filler, pasting, precompose };

    static FillerExpr leaf(MonotoneMap f) {
        return FillerExpr(std::make_shared<const Node>(Node{Kind::leaf, 0, std::move(f), nullptr, nullptr}));
    }

    static FillerExpr filler(int i, FillerExpr left, FillerExpr right) {
        return binary(Kind::filler, i, std::move(left), std::move(right));
    }

    static FillerExpr pasting(int i, FillerExpr left, FillerExpr right) {
        return binary(Kind::pasting, i, std::move(left), std::move(right));
    }

    /// E o d: the morphism map's codomain must equal the domain of `inner`.
    static FillerExpr precompose(FillerExpr inner, MonotoneMap map) {
        if (map.codomain() != inner.domain())
            throw ArityError("precompose: " + map.to_string() + " does not land in the domain of the expression");
        return FillerExpr(std::make_shared<const Node>(Node{Kind::precompose, 0, std::move(map), std::move(inner.node_), nullptr}));
    }

    Kind kind() const noexcept { return node_->kind; }
    bool is_leaf() const noexcept { return node_->kind == Kind::leaf; }
    int index() const noexcept { return node_->index; }
    /// Leaf map, or the precomposed map.
    const MonotoneMap& map() const { return *node_->map; }
    FillerExpr left() const { return FillerExpr(node_->left); }
    FillerExpr right() const { return FillerExpr(node_->right); }
    FillerExpr inner() const { return FillerExpr(node_->left); }

    /// Domain of the value, derived structurally.
    int domain() const {
        switch (kind()) {
            case Kind::leaf: return map().domain();
            case Kind::filler: return left().domain() + 1;
            case Kind::pasting: return left().domain();
            case Kind::precompose: return map().domain();
        }
        return 0;
    }

    int codomain() const {
        switch (kind()) {
            case Kind::leaf: return map().codomain();
            case Kind::precompose: return inner().codomain();
            default: return left().codomain();
        }
    }

    std::size_t node_count() const {
        switch (kind()) {
            case Kind::leaf: return 1;
            case Kind::precompose: return 1 + inner().node_count();
            default: return 1 + left().node_count() + right().node_count();
        }
    }

    /// "F_0((0,1),(1,2))", "P_0((0,1),(1,2))", "C[(0,2)](F_0(...))", "(0,1,1)".
    std::string to_string() const {
        switch (kind()) {
            case Kind::leaf: return map().tuple_string();
            case Kind::filler:
                return "F_" + std::to_string(index()) + "(" + left().to_string() + "," + right().to_string() + ")";
            case Kind::pasting:
                return "P_" + std::to_string(index()) + "(" + left().to_string() + "," + right().to_string() + ")";
            case Kind::precompose: return "C[" + map().tuple_string() + "](" + inner().to_string() + ")";
        }
        return {};
    }

    friend bool operator==(const FillerExpr& a, const FillerExpr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.index() != b.index()) return false;
        switch (a.kind()) {
            case Kind::leaf: return a.map() == b.map();
            case Kind::precompose: return a.map() == b.map() && a.inner() == b.inner();
            default: return a.left() == b.left() && a.right() == b.right();
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const FillerExpr& e) { return os << e.to_string(); }

private:
    struct Node {
        Kind kind;
        int index;
        std::optional<MonotoneMap> map;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit FillerExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static FillerExpr binary(Kind kind, int i, FillerExpr left, FillerExpr right) {
        if (i < 0) throw IndexError("operation index must be nonnegative");
        if (left.codomain() != right.codomain() || left.domain() != right.domain())
            throw ArityError("operands of a filler or pasting must have the same domain and codomain");
        return FillerExpr(std::make_shared<const Node>(Node{kind, i, std::nullopt, std::move(left.node_), std::move(right.node_)}));
    }

    std::shared_ptr<const Node> node_;
};

/// Raised by eval_expr; `path()` locates the offending node, e.g. "root.L.R".
class InvalidExpressionError : public NotComposableError {
public:
    InvalidExpressionError(const std::string& path, const std::string& what)
        : NotComposableError("invalid expression at " + path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

namespace detail {

inline ZMorphism eval_at(const FillerExpr& e, const std::string& path) {
    using Kind = FillerExpr::Kind;
    switch (e.kind()) {
        case Kind::leaf: return ZMorphism(e.map());
        case Kind::precompose: return zcompose(eval_at(e.inner(), path + ".E"), e.map());
        case Kind::filler:
        case Kind::pasting: {
            auto x = eval_at(e.left(), path + ".L");
            auto y = eval_at(e.right(), path + ".R");
            try {
                return e.kind() == Kind::filler ? filler(e.index(), x, y) : pasting(e.index(), x, y);
            } catch (const NotComposableError& err) {
                throw InvalidExpressionError(path, err.what());
            }
        }
    }
    throw InternalError("eval_expr: unknown node kind");
}

}  // namespace detail

/// Bottom-up evaluation, checking every face-matching condition.
inline ZMorphism eval_expr(const FillerExpr& e) { return detail::eval_at(e, "root"); }

/// Removes redundant nodes without changing the value:
///   - P_i(L,R) becomes R when L = e_i d_i L, and L when R = e_i d_i L
///     (the pasting units, as in (a,a) v_0 (a,b) = (a,b) = (a,b) v_0 (b,b));
///   - a filler or pasting whose value is a single monotone map becomes that leaf.
inline FillerExpr simplify(const FillerExpr& e) {
    using Kind = FillerExpr::Kind;
    if (e.is_leaf()) return e;
    if (e.kind() == Kind::precompose) {
        auto inner = simplify(e.inner());
        auto out = FillerExpr::precompose(inner, e.map());
        auto value = eval_expr(out);
        if (value.size() == 1 && value.terms().begin()->second == 1) return FillerExpr::leaf(value.terms().begin()->first);
        return out;
    }
    auto left = simplify(e.left());
    auto right = simplify(e.right());
    if (e.kind() == Kind::pasting) {
        auto x = eval_expr(left);
        auto unit = degeneracy(e.index(), face(e.index(), x));
        if (x == unit) return right;
        if (eval_expr(right) == unit) return left;
    }
    auto out = e.kind() == Kind::filler ? FillerExpr::filler(e.index(), left, right) : FillerExpr::pasting(e.index(), left, right);
    auto value = eval_expr(out);
    if (value.size() == 1 && value.terms().begin()->second == 1) return FillerExpr::leaf(value.terms().begin()->first);
    return out;
}

/// Rewrites every pasting P_i(L,R) as C[d](F_i(L,R)) with d the face map
/// skipping i+1, so the result uses fillers and composition with monotone
/// maps only.
inline FillerExpr to_filler_form(const FillerExpr& e) {
    using Kind = FillerExpr::Kind;
    switch (e.kind()) {
        case Kind::leaf: return e;
        case Kind::precompose: return FillerExpr::precompose(to_filler_form(e.inner()), e.map());
        case Kind::filler: return FillerExpr::filler(e.index(), to_filler_form(e.left()), to_filler_form(e.right()));
        case Kind::pasting: {
            auto fill = FillerExpr::filler(e.index(), to_filler_form(e.left()), to_filler_form(e.right()));
            return FillerExpr::precompose(fill, face_generator(e.index() + 1, fill.domain()));
        }
    }
    throw InternalError("to_filler_form: unknown node kind");
}

/// Appends the vertex t to every leaf. Faces and degeneracies with index at
/// most m commute with appending, so fillers and pastings are preserved.
inline FillerExpr append_vertex(const FillerExpr& e, int t) {
    using Kind = FillerExpr::Kind;
    switch (e.kind()) {
        case Kind::leaf: return FillerExpr::leaf(append_value(e.map(), t));
        case Kind::filler: return FillerExpr::filler(e.index(), append_vertex(e.left(), t), append_vertex(e.right(), t));
        case Kind::pasting: return FillerExpr::pasting(e.index(), append_vertex(e.left(), t), append_vertex(e.right(), t));
        case Kind::precompose: {
            // d : k' -> k becomes (d_0, ..., d_k', k+1) : k'+1 -> k+1.
            auto inner = append_vertex(e.inner(), t);
            std::vector<int> v(e.map().values().begin(), e.map().values().end());
            v.push_back(inner.domain());
            return FillerExpr::precompose(inner, MonotoneMap(std::move(v), inner.domain()));
        }
    }
    throw InternalError("append_vertex: unknown node kind");
}

struct FactorizeOptions {
    /// Run simplify() on the result.
    bool simplify = true;
    /// Rewrite pastings as faces of fillers (see to_filler_form).
    bool fillers_only = false;
};

namespace detail {

inline FillerExpr factorize_raw(const ZMorphism& x) {
    const int m = x.domain();
    const int t = first_last(x).second;
    auto constant = MonotoneMap::constant(t, m, x.codomain());
    if (x.coefficient(constant) != 0) {
        if (x != ZMorphism(constant)) throw InternalError("factorize: x has a constant term but is not constant");
        return FillerExpr::leaf(constant);
    }
    // No constant term, so every term has a_0 < t and m > 0.
    auto filler_of = [](int r, const ZMorphism& w) {
        return FillerExpr::filler(r, factorize_raw(face(r + 2, w)), factorize_raw(face(r, w)));
    };

    ZMorphism current = x;
    std::vector<Split> starts;
    for (int r = 0; r <= m - 2; ++r) {
        starts.push_back(split_start(r, t, current));
        current = starts.back().u;
    }
    auto middle = split_middle(t, current);
    current = middle.v;
    std::vector<Split> finishes;
    for (int r = m - 2; r >= 0; --r) {
        finishes.push_back(split_finish(r, t, current));
        current = finishes.back().v;
    }
    const ZMorphism& z = current;
    for (const auto& [a, c] : z.terms())
        if (a.back() != t) throw InternalError("factorize: residue has a term not ending in t");

    FillerExpr z_expr = m == 0 ? FillerExpr::leaf(z.terms().begin()->first)
                               : append_vertex(factorize_raw(face(m, z)), t);
    // finishes were produced for r = m-2 down to 0; the innermost pasting is r = 0.
    FillerExpr tail = z_expr;
    for (auto it = finishes.rbegin(); it != finishes.rend(); ++it) tail = FillerExpr::pasting(it->index, filler_of(it->index, it->u), tail);
    FillerExpr expr = FillerExpr::pasting(m - 1, factorize_raw(middle.u), tail);
    for (auto it = starts.rbegin(); it != starts.rend(); ++it) expr = FillerExpr::pasting(it->index, expr, filler_of(it->index, it->v));
    return expr;
}

}  // namespace detail

/// Factorises x in O(m,n) into fillers and pastings of monotone maps.
///
/// With t the last vertex of x: a constant x = (t,...,t) is a leaf.
/// Otherwise x is split successively by split_start for r = 0..m-2, then
/// split_middle, then split_finish for r = m-2..0. The filler factors have
/// domain m-1, the middle factor has a smaller last vertex, and the residue
/// consists of terms ending in t, so it is its last face with t appended.
/// Every factor is factorised recursively; (m, t) decreases each time.
inline FillerExpr factorize(const ZMorphism& x, const FactorizeOptions& options = {}) {
    require_oriental(x, "factorize");
    auto expr = detail::factorize_raw(x);
    if (eval_expr(expr) != x) throw InternalError("factorize: expression does not evaluate to its input");
    if (options.simplify) expr = simplify(expr);
    if (options.fillers_only) expr = to_filler_form(expr);
    if (eval_expr(expr) != x) throw InternalError("factorize: rewritten expression does not evaluate to its input");
    return expr;
}

namespace detail {

inline FillerExpr parse_expr(Scanner& in, int codomain) {
    in.skip_space();
    auto start = in.position();
    char c = in.peek();
    if (c == '(') return FillerExpr::leaf(parse_map(in, codomain));
    if (c == 'F' || c == 'P') {
        in.consume(c);
        in.expect('_');
        int i = in.small_int();
        in.expect('(');
        auto left = parse_expr(in, codomain);
        in.expect(',');
        auto right = parse_expr(in, codomain);
        in.expect(')');
        try {
            return c == 'F' ? FillerExpr::filler(i, left, right) : FillerExpr::pasting(i, left, right);
        } catch (const Error& e) {
            throw ParseError(e.what(), start);
        }
    }
    if (c == 'C') {
        in.consume(c);
        in.expect('[');
        auto values = in.int_tuple('(', ')');
        in.expect(']');
        in.expect('(');
        auto inner = parse_expr(in, codomain);
        in.expect(')');
        try {
            return FillerExpr::precompose(inner, MonotoneMap(std::move(values), inner.domain()));
        } catch (const Error& e) {
            throw ParseError(e.what(), start);
        }
    }
    in.fail("expected '(', 'F_', 'P_' or 'C['");
}

}  // namespace detail

/// Parses the text form produced by FillerExpr::to_string. Leaves take the
/// codomain n unless they carry their own ":n" suffix.
inline FillerExpr parse_filler_expr(std::string_view text, int codomain) {
    detail::Scanner in(text);
    auto e = detail::parse_expr(in, codomain);
    if (!in.at_end()) in.fail("trailing characters after expression");
    return e;
}

}  // namespace orientals
