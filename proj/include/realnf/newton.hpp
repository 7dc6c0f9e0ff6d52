#pragma once

#include <string>
#include <vector>

#include "realnf/bipoly.hpp"
#include "realnf/rational.hpp"

namespace realnf {

enum class Family { E12, E13, E14, Z11, Z12, Z13, W12, W13, X9, J10, X9k, J10k, Yrs, Ytilde };

std::string family_name(Family f);

// Real singularity type: family with indices and, once determined, the sign
// decorations of the Table-1 subtype.
struct SingularityType {
    Family fam;
    int k = 0;          // X9k / J10k
    int r = 0, s = 0;   // Yrs / Ytilde (r == s for Ytilde)
    std::vector<int> signs;  // +1 / -1 per decorated position

    std::string label() const;

    friend bool operator==(const SingularityType& a, const SingularityType& b) {
        return a.fam == b.fam && a.k == b.k && a.r == b.r && a.s == b.s && a.signs == b.signs;
    }
};

// piecewise weight: minimum over the stored (already lambda-scaled) face weights
struct Weight {
    std::vector<std::pair<long, long>> faces;

    long degree(int i, int j) const {
        long best = 0;
        bool first = true;
        for (auto [wx, wy] : faces) {
            long v = wx * i + wy * j;
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        return best;
    }
    long degree(const Mon& m) const { return degree(m.first, m.second); }
};

inline long weighted_degree(const Weight& w, const Mon& m) { return w.degree(m); }

template <class F>
BiPoly<F> weighted_jet(const BiPoly<F>& f, const Weight& w, long j) {
    BiPoly<F> r;
    for (const auto& [m, v] : f.terms)
        if (w.degree(m.first, m.second) <= j) r.terms[m] = v;
    return r;
}

// terms of weighted degree exactly j
template <class F>
BiPoly<F> weighted_slice(const BiPoly<F>& f, const Weight& w, long j) {
    BiPoly<F> r;
    for (const auto& [m, v] : f.terms)
        if (w.degree(m.first, m.second) == j) r.terms[m] = v;
    return r;
}

enum class PolygonPos { Below, On, Above };

enum class Restriction { None, ANonzero, ASquaredNot4 };

// Static per-type geometry of the normal form.
struct TypeData {
    SingularityType type;       // family + indices, no signs
    Weight w;                   // w(T)
    long d_w = 0;               // d(T)
    std::vector<Mon> support;   // non-moduli monomials of NF(T)
    Mon moduli{0, 0};           // Arnold system element m1
    long d_moduli = 0;          // w(T)-degree of m1
    int low_jet_degree = 0;     // maximum filtration d w.r.t. the standard degree
    Restriction restriction = Restriction::None;
    int sign_arity = 0;         // number of +- decorations of the subtype
    int mu = 0;                 // Milnor number of the type

    bool two_faces() const { return w.faces.size() == 2; }
};

// total on supported tags; throws std::invalid_argument otherwise
TypeData type_data(const SingularityType& t);

PolygonPos polygon_position(const TypeData& td, const Mon& m);

// The Table-1 normal form equation of the (sign-decorated) subtype with the
// moduli coefficient set to `a`.
BiPoly<Rat> normal_form_poly(const SingularityType& subtype, const Rat& a);

// same template with the literal parameter name "a"
std::string normal_form_string(const SingularityType& subtype);

}  // namespace realnf
