#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realnf/rational.hpp"

namespace realnf {

// Univariate polynomial over Q, dense coefficient vector, no trailing zeros.
struct QPoly {
    std::vector<Rat> c;  // c[i] is the coefficient of z^i

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static QPoly zero() { return QPoly(); }
    static QPoly constant(const Rat& v) {
        QPoly p;
        if (v != 0) p.c = {v};
        return p;
    }
    static QPoly monomial(int deg, const Rat& v) {
        QPoly p;
        if (v != 0) {
            p.c.assign(deg + 1, Rat(0));
            p.c[deg] = v;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lc() const {
        if (is_zero()) throw std::domain_error("QPoly: lc of zero");
        return c.back();
    }
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
        return c[i];
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a) {
        QPoly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        QPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend QPoly operator*(const QPoly& a, const Rat& s) {
        if (s == 0) return QPoly();
        QPoly r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend QPoly operator*(const Rat& s, const QPoly& a) { return a * s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // division with remainder over Q; divisor nonzero
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw std::domain_error("QPoly: division by zero");
        QPoly q, r = a;
        int db = b.degree();
        if (a.degree() >= db) q.c.assign(a.degree() - db + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= db) {
            Rat f = r.lc() / b.lc();
            int k = r.degree() - db;
            q.c[k] = f;
            for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
    friend QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

    bool divides(const QPoly& a) const { return divmod(a, *this).second.is_zero(); }

    QPoly derivative() const {
        QPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Rat(static_cast<long>(i));
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    QPoly monic() const {
        if (is_zero()) return *this;
        return *this * (1 / lc());
    }

    // substitute z -> u z + v
    QPoly compose_linear(const Rat& u, const Rat& v) const {
        QPoly r, pw = QPoly::constant(Rat(1));
        QPoly lin(std::vector<Rat>{v, u});
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] != 0) r = r + pw * c[i];
            if (i + 1 < c.size()) pw = pw * lin;
        }
        return r;
    }

    // substitute z -> -z
    QPoly negate_var() const {
        QPoly r = *this;
        for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }

    std::string str(const std::string& var = "z") const;
};

QPoly gcd(const QPoly& a, const QPoly& b);

// squarefree part p / gcd(p, p')
inline QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return p.monic();
    QPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return (p / g).monic();
}

// clears denominators and content: returns primitive integer coefficients with
// positive leading coefficient, plus the rational multiplier c with p = c * result
struct ZPoly {
    std::vector<Int> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline std::pair<ZPoly, Rat> primitive_z(const QPoly& p) {
    ZPoly z;
    if (p.is_zero()) return {z, Rat(1)};
    Int den(1);
    for (const auto& x : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> v(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        Rat t = p.c[i] * Rat(den);
        v[i] = t.get_num();
    }
    Int cont(0);
    for (const auto& x : v) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
    if (sgn(v.back()) < 0) cont = -cont;
    for (auto& x : v) x /= cont;
    z.c = std::move(v);
    Rat mult(cont, den);
    mult.canonicalize();
    return {z, mult};
}

inline QPoly from_z(const ZPoly& z) {
    std::vector<Rat> v(z.c.size());
    for (size_t i = 0; i < z.c.size(); ++i) v[i] = Rat(z.c[i]);
    return QPoly(std::move(v));
}

inline std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat v = coeff(i);
        if (v == 0) continue;
        bool first = out.empty();
        if (v > 0 && !first) out += "+";
        Rat av = rat_abs(v);
        if (v < 0) out += "-";
        if (i == 0) {
            out += rat_str(av);
        } else {
            if (av != 1) out += rat_str(av) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace realnf
