#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realnf/quadext.hpp"
#include "realnf/rational.hpp"
#include "realnf/upoly.hpp"

namespace realnf {

using Mon = std::pair<int, int>;  // exponents of x and y

// Sparse bivariate polynomial over F (Rat or ExtElem); no stored zeros.
template <class F>
struct BiPoly {
    std::map<Mon, F> terms;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly monomial(int i, int j, const F& v) {
        BiPoly p;
        if (!coeff_is_zero(v)) p.terms[{i, j}] = v;
        return p;
    }
    static BiPoly var_x() { return monomial(1, 0, F(1)); }
    static BiPoly var_y() { return monomial(0, 1, F(1)); }

    bool is_zero() const { return terms.empty(); }
    F coeff(int i, int j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? F(0) : it->second;
    }
    void set(int i, int j, const F& v) {
        if (coeff_is_zero(v))
            terms.erase({i, j});
        else
            terms[{i, j}] = v;
    }
    void add_term(int i, int j, const F& v) {
        auto it = terms.find({i, j});
        if (it == terms.end()) {
            if (!coeff_is_zero(v)) terms[{i, j}] = v;
        } else {
            it->second += v;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, v] : terms) d = std::max(d, m.first + m.second);
        return d;
    }
    int low_degree() const {
        int d = -1;
        for (const auto& [m, v] : terms)
            if (d < 0 || m.first + m.second < d) d = m.first + m.second;
        return d;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, v] : b.terms) r.add_term(m.first, m.second, v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, v] : b.terms) r.add_term(m.first, m.second, -v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r = a;
        for (auto& [m, v] : r.terms) v = -v;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, va] : a.terms)
            for (const auto& [mb, vb] : b.terms)
                r.add_term(ma.first + mb.first, ma.second + mb.second, va * vb);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const F& s) {
        BiPoly r;
        if (coeff_is_zero(s)) return r;
        for (const auto& [m, v] : a.terms) r.terms[m] = v * s;
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const {
        BiPoly r = monomial(0, 0, F(1));
        BiPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // standard jet: terms of total degree <= d
    BiPoly jet(int d) const {
        BiPoly r;
        for (const auto& [m, v] : terms)
            if (m.first + m.second <= d) r.terms[m] = v;
        return r;
    }

    BiPoly derivative_x() const {
        BiPoly r;
        for (const auto& [m, v] : terms)
            if (m.first > 0) r.terms[{m.first - 1, m.second}] = v * F(m.first);
        return r;
    }
    BiPoly derivative_y() const {
        BiPoly r;
        for (const auto& [m, v] : terms)
            if (m.second > 0) r.terms[{m.first, m.second - 1}] = v * F(m.second);
        return r;
    }

    BiPoly swap_vars() const {
        BiPoly r;
        for (const auto& [m, v] : terms) r.terms[{m.second, m.first}] = v;
        return r;
    }

    // exact division by the monomial x^i y^j; throws if some term is not divisible
    BiPoly divide_monomial(int i, int j, const F& cdiv) const {
        BiPoly r;
        for (const auto& [m, v] : terms) {
            if (m.first < i || m.second < j)
                throw std::domain_error("BiPoly: term not divisible by monomial");
            r.terms[{m.first - i, m.second - j}] = v / cdiv;
        }
        return r;
    }
};

template <class F>
struct Automorphism {
    BiPoly<F> xi, yi;  // images of x and y

    void validate() const {
        if (!coeff_is_zero(xi.coeff(0, 0)) || !coeff_is_zero(yi.coeff(0, 0)))
            throw std::invalid_argument("Automorphism: image has nonzero constant term");
        F a = xi.coeff(1, 0), b = xi.coeff(0, 1);
        F c = yi.coeff(1, 0), d = yi.coeff(0, 1);
        if (coeff_is_zero(a * d - b * c))
            throw std::invalid_argument("Automorphism: singular linear part");
    }

    static Automorphism identity() { return {BiPoly<F>::var_x(), BiPoly<F>::var_y()}; }

    // linear map from a 2x2 matrix: x -> m00 x + m01 y, y -> m10 x + m11 y
    static Automorphism linear(const F& m00, const F& m01, const F& m10, const F& m11) {
        Automorphism phi;
        phi.xi = BiPoly<F>::monomial(1, 0, m00) + BiPoly<F>::monomial(0, 1, m01);
        phi.yi = BiPoly<F>::monomial(1, 0, m10) + BiPoly<F>::monomial(0, 1, m11);
        phi.validate();
        return phi;
    }
};

// f with x replaced by phi.xi and y replaced by phi.yi, fully expanded
template <class F>
BiPoly<F> apply_substitution(const BiPoly<F>& f, const Automorphism<F>& phi) {
    phi.validate();
    int dx = 0, dy = 0;
    for (const auto& [m, v] : f.terms) {
        dx = std::max(dx, m.first);
        dy = std::max(dy, m.second);
    }
    std::vector<BiPoly<F>> px(dx + 1), py(dy + 1);
    px[0] = BiPoly<F>::monomial(0, 0, F(1));
    py[0] = px[0];
    for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * phi.xi;
    for (int j = 1; j <= dy; ++j) py[j] = py[j - 1] * phi.yi;
    BiPoly<F> r;
    for (const auto& [m, v] : f.terms) r = r + px[m.first] * py[m.second] * v;
    return r;
}

// composition such that apply(f, compose(outer, inner)) == apply(apply(f, inner), outer)
template <class F>
Automorphism<F> compose(const Automorphism<F>& outer, const Automorphism<F>& inner) {
    Automorphism<F> r;
    r.xi = apply_substitution(inner.xi, outer);
    r.yi = apply_substitution(inner.yi, outer);
    return r;
}

inline BiPoly<ExtElem> to_ext(const BiPoly<Rat>& f, const QuadFieldPtr& K) {
    BiPoly<ExtElem> r;
    for (const auto& [m, v] : f.terms) r.terms[m] = ExtElem(K, v, Rat(0));
    return r;
}

inline BiPoly<Rat> to_rational(const BiPoly<ExtElem>& f) {
    BiPoly<Rat> r;
    for (const auto& [m, v] : f.terms) r.terms[m] = v.rat_value();
    return r;
}

// restriction f(x, 0) as a univariate polynomial in x
inline QPoly restrict_y0(const BiPoly<Rat>& f) {
    std::vector<Rat> c;
    for (const auto& [m, v] : f.terms) {
        if (m.second != 0) continue;
        if (static_cast<int>(c.size()) <= m.first) c.resize(m.first + 1, Rat(0));
        c[m.first] = v;
    }
    return QPoly(std::move(c));
}

// restriction f(0, y) as a univariate polynomial in y
inline QPoly restrict_x0(const BiPoly<Rat>& f) {
    std::vector<Rat> c;
    for (const auto& [m, v] : f.terms) {
        if (m.first != 0) continue;
        if (static_cast<int>(c.size()) <= m.second) c.resize(m.second + 1, Rat(0));
        c[m.second] = v;
    }
    return QPoly(std::move(c));
}

// specialization f(1, y) as a univariate polynomial in y
inline QPoly specialize_x1(const BiPoly<Rat>& f) {
    std::vector<Rat> c;
    for (const auto& [m, v] : f.terms) {
        if (static_cast<int>(c.size()) <= m.second) c.resize(m.second + 1, Rat(0));
        c[m.second] += v;
    }
    QPoly p(std::move(c));
    p.trim();
    return p;
}

std::string render_poly(const BiPoly<Rat>& f);

}  // namespace realnf
