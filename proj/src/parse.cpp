#include "ratdist/parse.hpp"

#include <cctype>
#include <sstream>

#include "ratdist/factor.hpp"

namespace ratdist {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = std::string(w).size();
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    BigInt integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ParseError("expected integer at '" + s.substr(start) + "'");
        return BigInt(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

QuadExt parse_expr(Cursor& c);

long long checked_d(const BigInt& d) {
    if (d <= 1) throw ParseError("sqrt argument must be > 1");
    Factorization f = factorize(d);
    for (const auto& [p, e] : f.factors)
        if (e > 1) throw ParseError("sqrt argument must be squarefree: " + d.str());
    return static_cast<long long>(d);
}

QuadExt parse_factor(Cursor& c) {
    if (c.eat('(')) {
        QuadExt e = parse_expr(c);
        if (!c.eat(')')) throw ParseError("missing ')'");
        return e;
    }
    if (c.eat_word("sqrt")) {
        long long d = checked_d(c.integer());
        return QuadExt(0, 1, d);
    }
    BigInt n = c.integer();
    Rational coeff(n);
    if (c.eat('/')) {
        // either a pure rational or rational coefficient of sqrt
        BigInt den = c.integer();
        if (den == 0) throw ParseError("zero denominator");
        coeff = Rational(n, den);
    }
    if (c.eat_word("sqrt")) {
        long long d = checked_d(c.integer());
        return QuadExt(0, coeff, d);
    }
    return QuadExt(coeff);
}

QuadExt parse_term(Cursor& c) {
    QuadExt e = parse_factor(c);
    if (c.eat('/')) {
        BigInt den = c.integer();
        if (den == 0) throw ParseError("zero denominator");
        e = e / QuadExt(Rational(den));
    }
    return e;
}

QuadExt parse_expr(Cursor& c) {
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    QuadExt acc = parse_term(c);
    if (neg) acc = -acc;
    while (true) {
        if (c.eat('+'))
            acc += parse_term(c);
        else if (c.eat('-'))
            acc -= parse_term(c);
        else
            break;
    }
    return acc;
}

} // namespace

QuadExt parse_quadext(const std::string& text) {
    Cursor c{text};
    QuadExt e = parse_expr(c);
    if (!c.done()) throw ParseError("trailing input in '" + text + "'");
    return e;
}

std::vector<PlanePoint> parse_points(const std::string& text) {
    std::vector<PlanePoint> pts;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw ParseError("point must be 'x,y': " + tok);
        QuadExt x = parse_quadext(tok.substr(0, comma));
        QuadExt y = parse_quadext(tok.substr(comma + 1));
        pts.emplace_back(x, y);
    }
    return pts;
}

Triangle parse_sides_sq(const std::string& text) {
    std::vector<QuadExt> sides;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) sides.push_back(parse_quadext(tok));
    if (sides.size() != 3) throw ParseError("expected three squared side lengths");
    return Triangle::from_sides_sq(sides[0], sides[1], sides[2]);
}

} // namespace ratdist
