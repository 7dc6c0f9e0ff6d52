#pragma once

#include <memory>
#include <stdexcept>

#include "realnf/rational.hpp"

namespace realnf {

// Quadratic extension Q[t]/(t^2 + p t + q), modulus irreducible over Q.
struct QuadField {
    Rat p, q;

    Rat disc() const { return p * p - 4 * q; }
    bool is_real() const { return disc() > 0; }

    // Throws if t^2 + p t + q has a rational root.
    static std::shared_ptr<const QuadField> make(const Rat& p, const Rat& q);
};

using QuadFieldPtr = std::shared_ptr<const QuadField>;

// Element a + b t of a quadratic extension.  A null field pointer denotes the
// rational embedding (b must then be zero); arithmetic promotes as needed.
struct ExtElem {
    QuadFieldPtr F;
    Rat a, b;

    ExtElem() : a(0), b(0) {}
    ExtElem(int v) : a(v), b(0) {}
    ExtElem(const Rat& v) : a(v), b(0) {}
    ExtElem(QuadFieldPtr f, Rat a_, Rat b_) : F(std::move(f)), a(std::move(a_)), b(std::move(b_)) {
        if (!F && b != 0) throw std::logic_error("ExtElem: t-part without a field");
        normalize();
    }

    void normalize() {
        if (F && b == 0) {
            // keep the field tag: elements may become rational mid-computation
        }
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    Rat rat_value() const {
        if (!is_rational()) throw std::domain_error("ExtElem: not rational");
        return a;
    }

    static QuadFieldPtr common_field(const ExtElem& x, const ExtElem& y) {
        if (!x.F) return y.F;
        if (!y.F) return x.F;
        if (x.F == y.F || (x.F->p == y.F->p && x.F->q == y.F->q)) return x.F;
        throw std::logic_error("ExtElem: mixing distinct extensions");
    }

    friend ExtElem operator+(const ExtElem& x, const ExtElem& y) {
        return ExtElem(common_field(x, y), x.a + y.a, x.b + y.b);
    }
    friend ExtElem operator-(const ExtElem& x, const ExtElem& y) {
        return ExtElem(common_field(x, y), x.a - y.a, x.b - y.b);
    }
    friend ExtElem operator-(const ExtElem& x) { return ExtElem(x.F, -x.a, -x.b); }
    friend ExtElem operator*(const ExtElem& x, const ExtElem& y) {
        QuadFieldPtr f = common_field(x, y);
        // (a1 + b1 t)(a2 + b2 t) with t^2 = -p t - q
        Rat tt = x.b * y.b;
        Rat a = x.a * y.a;
        Rat b = x.a * y.b + x.b * y.a;
        if (tt != 0) {
            a -= f->q * tt;
            b -= f->p * tt;
        }
        return ExtElem(f, a, b);
    }
    friend bool operator==(const ExtElem& x, const ExtElem& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const ExtElem& x, const ExtElem& y) { return !(x == y); }

    ExtElem& operator+=(const ExtElem& y) { return *this = *this + y; }
    ExtElem& operator-=(const ExtElem& y) { return *this = *this - y; }
    ExtElem& operator*=(const ExtElem& y) { return *this = *this * y; }

    // image under the nontrivial Galois automorphism t |-> -p - t
    ExtElem conj() const {
        if (!F || b == 0) return *this;
        return ExtElem(F, a - F->p * b, -b);
    }

    Rat norm() const {
        if (!F) return a * a;
        return a * a - F->p * a * b + F->q * b * b;
    }

    ExtElem inverse() const {
        if (is_zero()) throw std::domain_error("ExtElem: division by zero");
        if (b == 0) return ExtElem(F, 1 / a, Rat(0));
        Rat n = norm();  // nonzero: modulus irreducible
        ExtElem c = conj();
        return ExtElem(F, c.a / n, c.b / n);
    }
    friend ExtElem operator/(const ExtElem& x, const ExtElem& y) { return x * y.inverse(); }
};

inline std::shared_ptr<const QuadField> QuadField::make(const Rat& p, const Rat& q) {
    // rational root test on t^2 + p t + q: discriminant must not be a square
    Rat d = p * p - 4 * q;
    if (d == 0) throw std::invalid_argument("QuadField: reducible modulus (double root)");
    Int num = d.get_num(), den = d.get_den();
    if (d > 0) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        if (sn * sn == num && sd * sd == den)
            throw std::invalid_argument("QuadField: reducible modulus (rational roots)");
    }
    auto f = std::make_shared<QuadField>();
    f->p = p;
    f->q = q;
    return f;
}

inline bool coeff_is_zero(const Rat& x) { return x == 0; }
inline bool coeff_is_zero(const ExtElem& x) { return x.is_zero(); }

}  // namespace realnf
