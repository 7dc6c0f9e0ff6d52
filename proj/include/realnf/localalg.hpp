#pragma once

#include <optional>
#include <vector>

#include "realnf/bipoly.hpp"
#include "realnf/newton.hpp"
#include "realnf/rational.hpp"

namespace realnf {

// 2 - rank of the Hessian at the origin; input must vanish at 0 with no linear part
int corank(const BiPoly<Rat>& f);

// dimension of Q[x,y]_loc / (f_x, f_y) via a local standard basis (Mora);
// nullopt encodes an infinite Milnor number (non-isolated singularity)
std::optional<int> milnor_number(const BiPoly<Rat>& f);

struct TermDivision {
    char axis;          // 'x' or 'y'
    BiPoly<Rat> cofactor;
};

// Algorithm-3 style division of the term t by the lowest term of a partial of f0
std::optional<TermDivision> jacobian_term_division(const BiPoly<Rat>& f0, const Mon& t_mon,
                                                   const Rat& t_coeff);

struct GradedReduction {
    BiPoly<Rat> v1, v2;
    std::vector<std::pair<Mon, Rat>> system_coeffs;
};

// Writes the w-degree-j slice of f as v1 * df0/dx + v2 * df0/dy + sum c_i e_i
// over the given system monomials, preferring solutions with v2 = 0.
// Throws std::domain_error when the slice is not representable.
GradedReduction reduce_mod_jacobian_graded(const BiPoly<Rat>& f, const BiPoly<Rat>& f0,
                                           const Weight& w, long j,
                                           const std::vector<Mon>& system);

// gcd of two bivariate polynomials over Q (primitive, content-normalized);
// used to pre-detect non-isolated critical loci
BiPoly<Rat> bivariate_gcd(const BiPoly<Rat>& a, const BiPoly<Rat>& b);

}  // namespace realnf
