#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realnf/rational.hpp"
#include "realnf/upoly.hpp"

namespace realnf {

// Interval with rational or infinite endpoints; infinite endpoints are open.
struct Interval {
    std::optional<Rat> lo, hi;
    bool lo_closed = false, hi_closed = false;

    static Interval whole() { return Interval{}; }
    static Interval open(const Rat& a, const Rat& b) { return {a, b, false, false}; }
    static Interval closed(const Rat& a, const Rat& b) { return {a, b, true, true}; }
    static Interval point(const Rat& a) { return {a, a, true, true}; }
    static Interval left_of(const Rat& b, bool closed) { return {std::nullopt, b, false, closed}; }
    static Interval right_of(const Rat& a, bool closed) { return {a, std::nullopt, closed, false}; }

    bool is_point() const { return lo && hi && *lo == *hi; }
    bool contains(const Rat& x) const {
        if (lo) {
            if (x < *lo) return false;
            if (x == *lo && !lo_closed) return false;
        }
        if (hi) {
            if (x > *hi) return false;
            if (x == *hi && !hi_closed) return false;
        }
        return true;
    }
    // reflection around 0, realizing the sign * interval notation
    Interval negate() const {
        Interval r;
        r.lo = hi ? std::optional<Rat>(-*hi) : std::nullopt;
        r.hi = lo ? std::optional<Rat>(-*lo) : std::nullopt;
        r.lo_closed = hi_closed;
        r.hi_closed = lo_closed;
        return r;
    }
    Interval scaled_by_sign(int s) const { return s >= 0 ? *this : negate(); }

    std::string str() const;
};

// Exact real algebraic number: monic irreducible minpoly over Q plus an
// isolating interval containing exactly one of its real roots.
struct AlgebraicNumber {
    QPoly minpoly;
    Interval iv;

    bool is_rational() const { return minpoly.degree() == 1; }
    Rat rat_value() const { return -minpoly.coeff(0); }  // monic z - v
    int sign() const;
};

// number of distinct real roots of p in I (p != 0)
int sturm_count(const QPoly& p, const Interval& I);

// pairwise disjoint isolating intervals for all distinct real roots, ascending
std::vector<Interval> isolate_real_roots(const QPoly& p);

// monic irreducible factors over Q with multiplicities; product times a
// rational constant reproduces p
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& p);

// the unique monic irreducible divisor of p with a root in I, together with a
// refined isolating interval inside I
AlgebraicNumber minpoly_in_interval(const QPoly& p, const Interval& I);

// halve the width of the isolating interval
void refine_step(AlgebraicNumber& a);

bool same_root(const AlgebraicNumber& a, const AlgebraicNumber& b);
// -1, 0, 1 as the real number a compares to b
int compare_roots(const AlgebraicNumber& a, const AlgebraicNumber& b);

// exact sign of p at the algebraic number (p rational univariate)
int sign_at(const QPoly& p, const AlgebraicNumber& a);

}  // namespace realnf
