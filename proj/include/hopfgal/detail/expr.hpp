#pragma once

// Recursive-descent parser for ring expressions such as "3/4*x^2 - z^-1 + 2(T+1)".
// The grammar is shared by scalars and base-ring elements; the context decides
// what integers and identifiers mean.

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hopfgal/error.hpp"

namespace hopfgal::detail {

template <class Ctx>
class ExprParser {
public:
    using Value = typename Ctx::value_type;

    ExprParser(std::string_view text, const Ctx& ctx) : text_(text), ctx_(ctx) {}

    Value parse() {
        skip();
        if (pos_ == text_.size()) fail("empty expression");
        Value v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::BadScalar,
                    msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v = v + term();
            } else if (peek('-')) {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v = v * unary();
            } else if (peek('/')) {
                ++pos_;
                v = v * ctx_.inverse(unary());
            } else if (starts_factor()) {
                v = v * power();  // juxtaposition, e.g. "2x"
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            bool negative = false;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                negative = text_[pos_] == '-';
                ++pos_;
            }
            skip();
            if (peek('(')) {
                // allow x^(-1)
                ++pos_;
                skip();
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    negative = !negative;
                    ++pos_;
                }
                const long e = integer_literal();
                if (!peek(')')) fail("expected ')'");
                ++pos_;
                return ctx_.power(base, negative ? -e : e);
            }
            const long e = integer_literal();
            return ctx_.power(base, negative ? -e : e);
        }
        return base;
    }

    long integer_literal() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 9) fail("exponent too large");
        return std::stol(digits);
    }

    Value atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ctx_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            try {
                return ctx_.identifier(name);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::BadScalar) fail("unknown identifier '" + std::string(name) + "'");
                throw;
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const Ctx& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace hopfgal::detail
