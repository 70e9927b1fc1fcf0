#include "lsv/parse.hpp"

#include <cctype>

namespace lsv {

namespace {

struct Cursor {
    const std::string& s;
    int nvars;
    int base;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void die(const std::string& msg) { die_at(msg, pos); }
    [[noreturn]] void die_at(const std::string& msg, std::size_t at) {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    // digit run starting exactly at pos
    long digits_here(const char* what) {
        std::size_t start = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) die_at(std::string("expected ") + what, start);
        if (pos - start > 9) die_at("number has too many digits", start);
        return std::stol(s.substr(start, pos - start));
    }
};

Polynomial parse_expr(Cursor& c);

Polynomial parse_primary(Cursor& c) {
    char ch = c.peek();
    if (ch == '\0') c.die("unexpected end of input");
    if (ch == '(') {
        ++c.pos;
        Polynomial e = parse_expr(c);
        if (!c.eat(')')) c.die("expected ')'");
        return e;
    }
    if (ch == 'x') {
        std::size_t at = c.pos;
        ++c.pos;
        if (c.pos >= c.s.size() ||
            !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            c.die_at("expected digits after 'x'", at);
        long idx = c.digits_here("a variable index") - c.base;
        if (idx < 0 || idx >= c.nvars)
            c.die_at("variable index out of range", at);
        return Polynomial::variable(c.nvars, static_cast<int>(idx));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        long num = c.digits_here("a number");
        if (c.eat('/')) {
            c.skip();
            std::size_t at = c.pos;
            long den = c.digits_here("a denominator");
            if (den == 0) c.die_at("zero denominator", at);
            return Polynomial::constant(c.nvars, rat(num, den));
        }
        return Polynomial::constant(c.nvars, Rational(num));
    }
    c.die("expected a number, a variable, or '('");
}

Polynomial parse_factor(Cursor& c) {
    Polynomial base = parse_primary(c);
    if (!c.eat('^')) return base;
    c.skip();
    std::size_t at = c.pos;
    long e = c.digits_here("an exponent");
    if (e > 200) c.die_at("exponent too large", at);
    Polynomial r = Polynomial::constant(base.nvars(), Rational(1));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

Polynomial parse_term(Cursor& c) {
    Polynomial p = parse_factor(c);
    while (c.eat('*')) p = p * parse_factor(c);
    return p;
}

Polynomial parse_expr(Cursor& c) {
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    Polynomial p = parse_term(c);
    if (neg) p = -p;
    for (;;) {
        if (c.eat('+'))
            p += parse_term(c);
        else if (c.eat('-'))
            p -= parse_term(c);
        else
            break;
    }
    return p;
}

}  // namespace

Polynomial parse_poly(const std::string& text, int nvars,
                      int first_var_index) {
    if (nvars < 0) throw Error("negative variable count");
    Cursor c{text, nvars, first_var_index};
    if (c.peek() == '\0') c.die("empty input");
    Polynomial p = parse_expr(c);
    if (c.peek() != '\0') c.die("unexpected trailing input");
    return p;
}

}  // namespace lsv
