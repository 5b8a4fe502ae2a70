#pragma once

#include <cctype>
#include <string>

#include "syzcurve/errors.hpp"
#include "syzcurve/poly.hpp"
#include "syzcurve/rational.hpp"

namespace syzcurve {

// Recursive-descent parser for polynomial expressions in x, y, z with
// rational coefficients.  Grammar (multiplication is always explicit):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := '(' expr ')' | 'x' | 'y' | 'z' | integer ['/' integer]
// The Unicode minus sign is accepted as '-'.
class PolyParser {
  public:
    explicit PolyParser(std::string src) : s_(std::move(src)) { normalize(); }

    Poly parse() {
        skip_ws();
        if (eof()) throw ParseError("empty polynomial expression");
        Poly p = expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return p;
    }

  private:
    void normalize() {
        // map U+2212 (minus sign) to '-'
        std::string out;
        for (std::size_t i = 0; i < s_.size();) {
            if (i + 2 < s_.size() && static_cast<unsigned char>(s_[i]) == 0xE2 &&
                static_cast<unsigned char>(s_[i + 1]) == 0x88 &&
                static_cast<unsigned char>(s_[i + 2]) == 0x92) {
                out += '-';
                i += 3;
            } else {
                out += s_[i];
                ++i;
            }
        }
        s_ = std::move(out);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    Poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = take() == '-';
        Poly p = term();
        if (neg) p *= Rat(-1);
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const bool minus = take() == '-';
                Poly q = term();
                if (minus)
                    p -= q;
                else
                    p += q;
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                p *= factor();
            } else if (peek() == 'x' || peek() == 'y' || peek() == 'z' || peek() == '(' ||
                       std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("missing '*' before '" + std::string(1, peek()) + "'");
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        Poly p = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            const long e = integer_literal("exponent");
            if (e < 0) fail("negative exponent");
            p = p.pow(e);
        }
        return p;
    }

    Poly atom() {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            take();
            Poly p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (c == 'x') {
            take();
            return Poly::variable(0);
        }
        if (c == 'y') {
            take();
            return Poly::variable(1);
        }
        if (c == 'z') {
            take();
            return Poly::variable(2);
        }
        if (c == '-') { // unary minus inside a term, e.g. 2*(-3)
            take();
            Poly p = atom();
            return p * Rat(-1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long num = integer_literal("number");
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                const long den = integer_literal("denominator");
                if (den == 0) fail("division by zero");
                return Poly(rat(num, den));
            }
            return Poly(Rat(num));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_literal(const std::string& what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what);
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        if (digits.size() > 18) fail(what + " too large");
        return std::stol(digits);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(const std::string& src) { return PolyParser(src).parse(); }

// Parse and validate a homogeneous curve equation; errors carry the
// offending term when homogeneity fails.
inline HomogeneousPoly parse_curve(const std::string& src) {
    Poly p = parse_poly(src);
    if (p.is_zero()) throw ParseError("curve equation is identically zero");
    return HomogeneousPoly::from_poly(p);
}

inline LinearForm parse_line(const std::string& src) {
    Poly p = parse_poly(src);
    try {
        return LinearForm::from_poly(p);
    } catch (const BadParameters& e) {
        throw ParseError(e.what());
    }
}

} // namespace syzcurve
