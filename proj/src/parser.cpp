#include "realnf/parser.hpp"

#include <cctype>

namespace realnf {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return Int(s.substr(start, pos - start));
    }

    int exponent() {
        skip_ws();
        if (peek() == '-') throw ParseError("negative exponents are not allowed", pos);
        Int e = integer();
        if (e > 64) throw ParseError("exponent too large", pos);
        return static_cast<int>(e.get_si());
    }

    BiPoly<Rat> atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            BiPoly<Rat> e = expression();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (c == 'x' || c == 'y') {
            ++pos;
            return c == 'x' ? BiPoly<Rat>::var_x() : BiPoly<Rat>::var_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (peek() == '/') {
                ++pos;
                Int den = integer();
                if (den == 0) throw ParseError("zero denominator", pos);
                Rat r(num, den);
                r.canonicalize();
                return BiPoly<Rat>::monomial(0, 0, r);
            }
            return BiPoly<Rat>::monomial(0, 0, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown variable '") + c + "' (only x and y)", pos);
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    BiPoly<Rat> power() {
        BiPoly<Rat> base = atom();
        if (eat('^')) {
            int e = exponent();
            return base.pow(e);
        }
        return base;
    }

    BiPoly<Rat> term() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos;
        }
        BiPoly<Rat> p = power();
        while (eat('*')) p = p * power();
        return neg ? -p : p;
    }

    BiPoly<Rat> expression() {
        BiPoly<Rat> p = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p = p + term();
            } else if (c == '-') {
                ++pos;
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

BiPoly<Rat> parse_polynomial(const std::string& text) {
    Parser p(text);
    BiPoly<Rat> f = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return f;
}

std::string render_poly(const BiPoly<Rat>& f) {
    if (f.is_zero()) return "0";
    // descending total degree, then by x-exponent
    std::vector<std::pair<Mon, Rat>> terms(f.terms.begin(), f.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [m, v] : terms) {
        Rat av = rat_abs(v);
        std::string piece;
        bool unit = (av == 1) && (m.first > 0 || m.second > 0);
        if (!unit) piece += rat_str(av);
        auto app = [&](const char* var, int e) {
            if (e == 0) return;
            if (!piece.empty()) piece += "*";
            piece += var;
            if (e > 1) piece += "^" + std::to_string(e);
        };
        app("x", m.first);
        app("y", m.second);
        if (out.empty())
            out += (v < 0 ? "-" : "");
        else
            out += (v < 0 ? "-" : "+");
        out += piece;
    }
    return out;
}

}  // namespace realnf
