#pragma once

// JSON encodings.
//
//   ZMorphism      {"m": 1, "n": 2, "terms": [{"map": [0,1], "coef": 1}, ...]}
//   Chain          [{"basis": [0,1], "coef": 1}, ...]          (dimension implied by position)
//   DoubleSeq      {"n": 2, "pairs": [{"neg": Chain, "pos": Chain}, ...]}
//   ChainMapTable  {"m": 1, "n": 2, "images": {"[0,1]": Chain, ...}}
//   FillerExpr     {"op": "leaf", "map": [0,1]}
//                  {"op": "filler" | "pasting", "i": 0, "left": E, "right": E}
//                  {"op": "compose", "map": [0,2], "expr": E}

#include <string>

#include "json.hpp"

#include "orientals/chain.hpp"
#include "orientals/factorize.hpp"
#include "orientals/membership.hpp"
#include "orientals/nu.hpp"

namespace orientals {

using Json = nlohmann::json;

namespace detail {

template <typename F>
auto guard_json(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

inline std::vector<int> int_array(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace detail

inline Json to_json(const MonotoneMap& f) { return Json{{"map", std::vector<int>(f.values().begin(), f.values().end())}, {"n", f.codomain()}}; }

inline Json to_json(const ZMorphism& x) {
    Json terms = Json::array();
    for (const auto& [f, c] : x.terms())
        terms.push_back({{"map", std::vector<int>(f.values().begin(), f.values().end())}, {"coef", c}});
    return {{"m", x.domain()}, {"n", x.codomain()}, {"terms", terms}};
}

inline ZMorphism zmorphism_from_json(const Json& j) {
    return detail::guard_json("ZMorphism", [&] {
        ZMorphism x(j.at("m").get<int>(), j.at("n").get<int>());
        for (const auto& t : j.at("terms")) x.add_term(MonotoneMap(detail::int_array(t.at("map")), x.codomain()), t.at("coef").get<Coefficient>());
        return x;
    });
}

inline Json to_json(const Chain& c) {
    Json terms = Json::array();
    for (const auto& [b, coef] : c.terms()) terms.push_back({{"basis", b.vertices()}, {"coef", coef}});
    return terms;
}

inline Chain chain_from_json(const Json& j, int dimension, int n) {
    return detail::guard_json("chain", [&] {
        Chain c(dimension, n);
        for (const auto& t : j) {
            BasisElt b(detail::int_array(t.at("basis")), n);
            if (b.dimension() != dimension)
                throw ParseError("basis element " + b.to_string() + " listed in dimension " + std::to_string(dimension));
            c.add_term(b, t.at("coef").get<Coefficient>());
        }
        return c;
    });
}

inline Json to_json(const DoubleSeq& s) {
    Json pairs = Json::array();
    for (const auto& pr : s.pairs()) pairs.push_back({{"neg", to_json(pr.neg)}, {"pos", to_json(pr.pos)}});
    return {{"n", s.ambient()}, {"pairs", pairs}};
}

/// Reads the pairs without validating them.
inline RawDoubleSeq raw_double_seq_from_json(const Json& j, int& n) {
    return detail::guard_json("cell", [&] {
        n = j.at("n").get<int>();
        RawDoubleSeq raw;
        int q = 0;
        for (const auto& pr : j.at("pairs")) {
            raw.push_back({chain_from_json(pr.at("neg"), q, n), chain_from_json(pr.at("pos"), q, n)});
            ++q;
        }
        return raw;
    });
}

inline DoubleSeq double_seq_from_json(const Json& j) {
    int n = 0;
    auto raw = raw_double_seq_from_json(j, n);
    return make_double_seq(std::move(raw), n);
}

inline Json to_json(const ChainMapTable& phi) {
    Json images = Json::object();
    for (const auto& [b, img] : phi.images()) images[b.to_string()] = to_json(img);
    return {{"m", phi.domain()}, {"n", phi.codomain()}, {"images", images}};
}

inline ChainMapTable chain_map_from_json(const Json& j) {
    int m = 0, n = 0;
    auto images = detail::guard_json("chain map", [&] {
        m = j.at("m").get<int>();
        n = j.at("n").get<int>();
        ChainMapTable::Images out;
        for (const auto& [key, value] : j.at("images").items()) {
            detail::Scanner in(key);
            BasisElt b(in.int_tuple('[', ']'), m);
            if (!in.at_end()) in.fail("trailing characters in basis element key");
            out.emplace(b, chain_from_json(value, b.dimension(), n));
        }
        return out;
    });
    return ChainMapTable(m, n, std::move(images));
}

inline Json to_json(const FillerExpr& e) {
    using Kind = FillerExpr::Kind;
    auto values = [](const MonotoneMap& f) { return std::vector<int>(f.values().begin(), f.values().end()); };
    switch (e.kind()) {
        case Kind::leaf: return {{"op", "leaf"}, {"map", values(e.map())}};
        case Kind::filler:
        case Kind::pasting:
            return {{"op", e.kind() == Kind::filler ? "filler" : "pasting"},
                    {"i", e.index()},
                    {"left", to_json(e.left())},
                    {"right", to_json(e.right())}};
        case Kind::precompose: return {{"op", "compose"}, {"map", values(e.map())}, {"expr", to_json(e.inner())}};
    }
    throw InternalError("to_json: unknown expression kind");
}

inline FillerExpr filler_expr_from_json(const Json& j, int codomain) {
    return detail::guard_json("expression", [&]() -> FillerExpr {
        auto op = j.at("op").get<std::string>();
        if (op == "leaf") return FillerExpr::leaf(MonotoneMap(detail::int_array(j.at("map")), codomain));
        if (op == "filler" || op == "pasting") {
            auto left = filler_expr_from_json(j.at("left"), codomain);
            auto right = filler_expr_from_json(j.at("right"), codomain);
            int i = j.at("i").get<int>();
            return op == "filler" ? FillerExpr::filler(i, left, right) : FillerExpr::pasting(i, left, right);
        }
        if (op == "compose") {
            auto inner = filler_expr_from_json(j.at("expr"), codomain);
            return FillerExpr::precompose(inner, MonotoneMap(detail::int_array(j.at("map")), inner.domain()));
        }
        throw ParseError("unknown expression op '" + op + "'");
    });
}

inline Json to_json(const MembershipResult& r) {
    Json out{{"member", r.member}, {"coefficient_sum", r.coefficient_sum}};
    if (r.witness) {
        auto values = [](const MonotoneMap& f) { return std::vector<int>(f.values().begin(), f.values().end()); };
        out["witness"] = {{"probe", values(r.witness->probe)}, {"term", values(r.witness->term)}, {"coef", r.witness->coefficient}};
    }
    return out;
}

}  // namespace orientals
