#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orientals/error.hpp"

namespace orientals::detail {

/// Minimal cursor over a text buffer, shared by the text parsers.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t position() const noexcept { return pos_; }
    std::string_view rest() const noexcept { return text_.substr(pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool consume(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    /// Accepts ASCII '-' and U+2212 MINUS SIGN.
    bool consume_minus() { return consume('-') || consume("\xE2\x88\x92"); }

    bool peek_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::int64_t integer() {
        skip_space();
        bool negative = consume_minus();
        skip_space();
        std::int64_t value = 0;
        auto first = text_.data() + pos_;
        auto last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        if (ec != std::errc() || ptr == first) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return negative ? -value : value;
    }

    int small_int() {
        auto v = integer();
        if (v < -(1 << 30) || v > (1 << 30)) fail("integer out of range");
        return static_cast<int>(v);
    }

    /// Parses `open int (, int)* close`.
    std::vector<int> int_tuple(char open, char close) {
        expect(open);
        std::vector<int> out;
        if (consume(close)) return out;
        do {
            out.push_back(small_int());
        } while (consume(','));
        expect(close);
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace orientals::detail
