#pragma once

#include <cctype>
#include <string>

#include "syzcurve/poly.hpp"

namespace syz {

/// Recursive-descent parser for the textual polynomial syntax used in config
/// files, fixtures and CLI output. Supported: integers, fractions "p/q", the
/// root-of-unity symbol "e" (zeta of the given order), named variables,
/// "+", "-", "*", "^", parentheses, and juxtaposition as multiplication
/// (e.g. "5b^4c" or "49*x^3*y - 49*x*y^3").
template <int N>
class PolyParser {
public:
    PolyParser(std::string text, std::array<std::string, N> names, int order)
        : text_(std::move(text)), names_(std::move(names)), order_(order) {}

    Poly<N> parse() {
        Poly<N> p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string text_;
    std::array<std::string, N> names_;
    int order_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw math_error("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<N> expr() {
        Poly<N> p;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        p = term();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    // Product of factors, joined by '*' or juxtaposition.
    Poly<N> term() {
        Poly<N> p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= factor();
            } else if (c == '(' || c == 'e' || std::isalnum((unsigned char)c)) {
                p *= factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly<N> factor() {
        Poly<N> base = atom();
        if (peek() == '^') {
            ++pos_;
            bool neg = eat('-');
            long e = integer();
            if (neg) fail("negative exponents are not supported");
            base = base.pow((int)e);
        }
        return base;
    }

    Poly<N> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly<N> p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            long num = integer();
            if (peek() == '/') {
                ++pos_;
                long den = integer();
                if (den == 0) fail("zero denominator");
                Rat r(num, den);
                r.canonicalize();
                return Poly<N>::constant(Cyclo(r));
            }
            return Poly<N>::constant(Cyclo(num));
        }
        if (c == 'e' && !is_variable("e")) {
            ++pos_;
            return Poly<N>::constant(Cyclo::zeta(order_));
        }
        if (std::isalpha((unsigned char)c)) {
            std::string name(1, c);
            for (int i = 0; i < N; ++i) {
                if (names_[i] == name) {
                    ++pos_;
                    return Poly<N>::variable(i);
                }
            }
            fail("unknown variable '" + name + "'");
        }
        fail("expected a factor");
    }

    bool is_variable(const std::string& name) const {
        for (int i = 0; i < N; ++i)
            if (names_[i] == name) return true;
        return false;
    }

    long integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_])) fail("expected an integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }
};

template <int N>
Poly<N> parse_poly(const std::string& text, const std::array<std::string, N>& names, int order) {
    return PolyParser<N>(text, names, order).parse();
}

// Scalar syntax: integers, fractions "p/q", polynomials in "e" such as
// "e^2", "1+e", "-3/2*e".
inline Cyclo parse_scalar(const std::string& text, int order) {
    Poly<1> p = parse_poly<1>(text, {"_"}, order);
    if (p.degree() > 0) throw math_error("expected a scalar, got a polynomial");
    return p.coeff(Expo<1>{});
}

inline const std::array<std::string, 3>& xyz_names() {
    static const std::array<std::string, 3> n{"x", "y", "z"};
    return n;
}

inline const std::array<std::string, 2>& lm_names() {
    static const std::array<std::string, 2> n{"l", "m"};
    return n;
}

// Variables of a curve fixture: general point (a,b,c) and coordinates (x,y,z).
inline const std::array<std::string, 6>& abcxyz_names() {
    static const std::array<std::string, 6> n{"a", "b", "c", "x", "y", "z"};
    return n;
}

}  // namespace syz
