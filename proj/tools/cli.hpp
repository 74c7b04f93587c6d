#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orientals/orientals.hpp"

namespace orientals::cli {

enum ExitCode : int {
    ok = 0,
    not_member = 1,
    parse_failure = 2,
    precondition_failure = 3,
    resource_failure = 4,
    internal_failure = 5,
};

namespace detail {

struct Options {
    std::optional<int> n;
    bool json = false;
    bool verify = false;
    std::optional<std::size_t> max_cells;
    std::string file;
    std::vector<std::string> inputs;
};

inline std::string slurp(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string trim(std::string s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline bool looks_like_json(const std::string& text) { return !text.empty() && text.front() == '{'; }

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? ParseError::npos : e.byte - 1);
    }
}

inline int json_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw ParseError("JSON input needs an integer field n");
    return j["n"].get<int>();
}

inline int require_n(const Options& opt, const char* what) {
    if (!opt.n) throw ParseError(std::string(what) + ": the codomain must be given with --n");
    return *opt.n;
}

inline void check_n(const Options& opt, int n) {
    if (opt.n && *opt.n != n)
        throw PreconditionError("--n " + std::to_string(*opt.n) + " disagrees with the JSON field n = " + std::to_string(n));
}

class Runner {
public:
    Runner(Options opt, std::istream& in, std::ostream& out) : opt_(std::move(opt)), in_(in), out_(out) {}

    /// The i-th textual input: positional argument, "-" for standard input, or --file.
    std::string input(std::size_t i) {
        if (i == 0 && !opt_.file.empty()) {
            std::ifstream f(opt_.file);
            if (!f) throw ParseError("cannot read " + opt_.file);
            return trim(slurp(f));
        }
        std::size_t k = opt_.file.empty() ? i : i - 1;
        if (k >= opt_.inputs.size()) {
            if (opt_.inputs.empty() && i == 0) return trim(slurp(in_));
            throw ParseError("missing input argument");
        }
        if (opt_.inputs[k] == "-") return trim(slurp(in_));
        return trim(opt_.inputs[k]);
    }

    ZMorphism morphism(const std::string& text, std::optional<int> codomain, const char* what) {
        if (looks_like_json(text)) {
            auto x = zmorphism_from_json(parse_json(text));
            if (codomain && *codomain != x.codomain())
                throw PreconditionError(std::string(what) + ": codomain " + std::to_string(x.codomain()) + " where " +
                                        std::to_string(*codomain) + " was expected");
            return x;
        }
        if (!codomain) throw ParseError(std::string(what) + ": the codomain must be given with --n");
        return parse_zmorphism(text, *codomain);
    }

    int check() {
        auto text = input(0);
        if (looks_like_json(text)) check_n(opt_, json_n(parse_json(text)));
        auto x = morphism(text, opt_.n, "check");
        auto r = is_oriental_morphism(x);
        const auto group = "O(" + std::to_string(x.domain()) + "," + std::to_string(x.codomain()) + ")";
        if (opt_.json) {
            auto j = to_json(r);
            j["m"] = x.domain();
            j["n"] = x.codomain();
            out_ << j.dump() << "\n";
        } else if (r.member) {
            out_ << "member of " << group << "\n";
        } else if (r.witness) {
            out_ << "not a member of " << group << ": f = " << r.witness->probe.tuple_string() << ", term "
                 << r.witness->term.tuple_string() << " has coefficient " << r.witness->coefficient << " in x o f\n";
        } else {
            out_ << "not a member of " << group << ": coefficients sum to " << r.coefficient_sum << ", not 1\n";
        }
        return r.member ? ok : not_member;
    }

    int compose() {
        auto ytext = input(0);
        auto xtext = input(1);
        if (looks_like_json(ytext)) check_n(opt_, json_n(parse_json(ytext)));
        auto y = morphism(ytext, looks_like_json(ytext) ? std::nullopt : opt_.n, "compose");
        auto x = morphism(xtext, y.domain(), "compose");
        print(zcompose(y, x));
        return ok;
    }

    int factor() {
        auto text = input(0);
        if (looks_like_json(text)) check_n(opt_, json_n(parse_json(text)));
        auto x = morphism(text, opt_.n, "factor");
        require_oriental(x, "factor");
        auto e = factorize(x);
        bool verified = false;
        if (opt_.verify) {
            verified = eval_expr(e) == x;
            if (!verified) throw InternalError("factor: evaluation of " + e.to_string() + " does not reproduce the input");
        }
        if (opt_.json) {
            Json j{{"n", x.codomain()}, {"expr", to_json(e)}};
            if (opt_.verify) j["verified"] = verified;
            out_ << j.dump() << "\n";
        } else {
            out_ << e.to_string() << "\n";
            if (opt_.verify) out_ << "verified: evaluates to " << x.to_string() << "\n";
        }
        return ok;
    }

    int eval() {
        auto text = input(0);
        FillerExpr e = [&] {
            if (looks_like_json(text)) {
                auto j = parse_json(text);
                int n = json_n(j);
                check_n(opt_, n);
                return filler_expr_from_json(j.at("expr"), n);
            }
            return parse_filler_expr(text, require_n(opt_, "eval"));
        }();
        print(eval_expr(e));
        return ok;
    }

    int enumerate(bool atoms_only) {
        int n = dimension_argument();
        std::vector<DoubleSeq> cells;
        if (atoms_only) {
            cells = atoms(n);
        } else {
            EnumerationLimits limits;
            if (opt_.max_cells) {
                limits.max_n = n;
                limits.max_cells = *opt_.max_cells;
            }
            cells = enumerate_nu(n, limits);
        }
        if (opt_.json) {
            Json list = Json::array();
            for (const auto& c : cells) list.push_back(to_json(c));
            out_ << Json{{"n", n}, {"count", cells.size()}, {"cells", list}}.dump() << "\n";
        } else {
            out_ << cells.size() << (atoms_only ? " atoms" : " cells") << " in nuK[" << n << "]\n";
            for (const auto& c : cells) out_ << c.to_string() << "\n";
        }
        return ok;
    }

    int verify_basis() {
        int n = dimension_argument();
        auto unital = check_unital(n);
        auto loopfree = check_strongly_loopfree(n);
        if (opt_.json) {
            out_ << Json{{"n", n}, {"unital", unital.unital}, {"strongly_loop_free", loopfree.strongly_loop_free}}.dump() << "\n";
        } else {
            out_ << "unital: " << (unital.unital ? "yes" : "no") << "; strongly loop-free: "
                 << (loopfree.strongly_loop_free ? "yes" : "no") << "\n";
        }
        return unital.unital && loopfree.strongly_loop_free ? ok : not_member;
    }

private:
    void print(const ZMorphism& x) {
        if (opt_.json)
            out_ << to_json(x).dump() << "\n";
        else
            out_ << x.to_string() << "\n";
    }

    int dimension_argument() {
        std::optional<int> n = opt_.n;
        if (!opt_.inputs.empty()) {
            orientals::detail::Scanner s(opt_.inputs.front());
            s.skip_space();
            int v = s.small_int();
            s.skip_space();
            if (!s.at_end()) s.fail("expected a dimension");
            if (n && *n != v) throw PreconditionError("positional dimension disagrees with --n");
            n = v;
        }
        if (!n) throw ParseError("a dimension is required");
        if (*n < 0) throw PreconditionError("dimension must be nonnegative");
        return *n;
    }

    Options opt_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations with orientals: membership, composition, factorisation, cells of nuK[n]."};
    app.name("orientals");
    app.require_subcommand(1);

    detail::Options opt;
    auto add_common = [&](CLI::App* sub, bool takes_input) {
        sub->add_option("--n", opt.n, "codomain n, or the dimension for enumerate/atoms/verify-basis");
        sub->add_flag("--json", opt.json, "JSON input/output");
        if (takes_input) sub->add_option("--file", opt.file, "read the (first) input from a file");
    };

    auto* check = app.add_subcommand("check", "decide membership in O(m,n)");
    check->add_option("x", opt.inputs, "morphism, '-' for stdin");
    add_common(check, true);

    auto* compose = app.add_subcommand("compose", "compose y o x in ZDelta");
    compose->add_option("inputs", opt.inputs, "y then x");
    add_common(compose, true);

    auto* factor = app.add_subcommand("factor", "factorise an oriental morphism");
    factor->add_option("x", opt.inputs, "morphism, '-' for stdin");
    factor->add_flag("--verify", opt.verify, "re-evaluate the result and confirm equality");
    add_common(factor, true);

    auto* eval = app.add_subcommand("eval", "evaluate a filler/pasting expression");
    eval->add_option("expr", opt.inputs, "expression, '-' for stdin");
    add_common(eval, true);

    auto* enumerate = app.add_subcommand("enumerate", "list the cells of nuK[n]");
    enumerate->add_option("dim", opt.inputs, "n");
    enumerate->add_option("--max-cells", opt.max_cells, "lift the default n <= 3 cap and stop after this many cells");
    add_common(enumerate, false);

    auto* atoms_cmd = app.add_subcommand("atoms", "list the atoms of nuK[n]");
    atoms_cmd->add_option("dim", opt.inputs, "n");
    add_common(atoms_cmd, false);

    auto* verify = app.add_subcommand("verify-basis", "check the basis of K[n] is unital and strongly loop-free");
    verify->add_option("dim", opt.inputs, "n");
    add_common(verify, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_failure;
    }

    detail::Runner runner(std::move(opt), in, out);
    try {
        if (check->parsed()) return runner.check();
        if (compose->parsed()) return runner.compose();
        if (factor->parsed()) return runner.factor();
        if (eval->parsed()) return runner.eval();
        if (enumerate->parsed()) return runner.enumerate(false);
        if (atoms_cmd->parsed()) return runner.enumerate(true);
        if (verify->parsed()) return runner.verify_basis();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_failure;
    } catch (const OverflowError& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_failure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return precondition_failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_failure;
    }
    return internal_failure;
}

}  // namespace orientals::cli
