#include "jacinf/mapio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jacinf {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char advance() {
        char c = text[pos++];
        ++col;
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    Int number() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits.push_back(advance());
        if (digits.empty()) fail("expected a number");
        return Int(digits);
    }
};

struct Parser {
    Lexer lex;
    VarsPtr space = PolyMap::xy();

    explicit Parser(const std::string& t) : lex(t) {}

    Poly parse() {
        Poly e = expr();
        if (!lex.eof()) lex.fail(std::string("unexpected character '") + lex.peek() + "'");
        return e;
    }

    Poly expr() {
        bool neg = false;
        if (lex.peek() == '-') {
            lex.advance();
            neg = true;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = lex.peek();
            if (c == '+' || c == '-') {
                lex.advance();
                Poly t = term();
                if (c == '+')
                    acc += t;
                else
                    acc -= t;
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                lex.advance();
                acc *= factor();
            } else if (c == '(' || c == 'x' || c == 'y' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc *= factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (lex.peek() == '^') {
            lex.advance();
            if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                lex.fail("exponent must be a nonnegative integer literal");
            Int e = lex.number();
            if (e > 64) lex.fail("exponent too large");
            b = pow(b, static_cast<uint32_t>(e.get_ui()));
        }
        return b;
    }

    Poly base() {
        char c = lex.peek();
        if (c == '(') {
            lex.advance();
            Poly e = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.advance();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = lex.number();
            if (lex.peek() == '/') {
                lex.advance();
                if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                    lex.fail("expected denominator digits");
                Int den = lex.number();
                if (den == 0) lex.fail("zero denominator");
                return Poly::constant(space, make_rat(num, den));
            }
            return Poly::constant(space, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = lex.line, k = lex.col;
            lex.advance();
            if (c == 'x') return Poly::variable(space, 0);
            if (c == 'y') return Poly::variable(space, 1);
            throw ParseError(std::string("unknown variable '") + c + "'", l, k);
        }
        if (c == '\0') lex.fail("unexpected end of input");
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parse_poly_xy(const std::string& text) { return Parser(text).parse(); }

PolyMap parse_map(const std::string& source) {
    std::string text = source;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw ParseError("cannot open map file " + text.substr(1), 1, 1);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("expected ';' separating the two map components", 1, 1);
    if (text.find(';', semi + 1) != std::string::npos)
        throw ParseError("more than one ';' in map source", 1, 1);
    Poly p = parse_poly_xy(text.substr(0, semi));
    Poly q = parse_poly_xy(text.substr(semi + 1));
    try {
        return PolyMap(std::move(p), std::move(q));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

}  // namespace jacinf
