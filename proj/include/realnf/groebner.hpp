#pragma once

#include <map>
#include <vector>

#include "realnf/rational.hpp"
#include "realnf/realroots.hpp"

namespace realnf {

enum class TermOrder { Lex, DegRevLex };

using Expv = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
struct MPoly {
    int nvars = 0;
    std::map<Expv, Rat> terms;

    explicit MPoly(int nv = 0) : nvars(nv) {}
    static MPoly constant(int nv, const Rat& v) {
        MPoly p(nv);
        if (v != 0) p.terms[Expv(nv, 0)] = v;
        return p;
    }
    static MPoly variable(int nv, int i, int e = 1) {
        MPoly p(nv);
        Expv m(nv, 0);
        m[i] = e;
        p.terms[m] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Expv& m, const Rat& v);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const Rat& s);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
};

bool term_less(const Expv& a, const Expv& b, TermOrder ord);

// Buchberger's algorithm with the product and chain criteria; result is reduced
std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, TermOrder ord);

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb, TermOrder ord);

// monomial basis of the quotient algebra for a zero-dimensional ideal;
// throws if the staircase is infinite or exceeds the cap
std::vector<Expv> quotient_basis(const std::vector<MPoly>& gb, TermOrder ord, int cap = 512);

// number of distinct real points of V(I) with weight(point) > 0, where the
// weight is an arbitrary polynomial; weight = 1 counts all real points.
// Uses Hermite trace-form signatures; exact over Q.
int count_real_points(const std::vector<MPoly>& gb, TermOrder ord, const MPoly& weight);

}  // namespace realnf
