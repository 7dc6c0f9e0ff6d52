#pragma once

#include <optional>
#include <vector>

#include "realnf/bipoly.hpp"
#include "realnf/errors.hpp"
#include "realnf/newton.hpp"
#include "realnf/upoly.hpp"

namespace realnf {

struct LinForm {
    Rat a, b;  // a x + b y
};

// factorization data for a nonzero homogeneous binary form
struct BinaryForm {
    int degree = 0;
    Rat lead;                                    // coefficient pattern constant
    int y_mult = 0;                              // multiplicity of the factor y
    std::vector<std::pair<QPoly, int>> factors;  // irreducible monic in t with F(t,1)
    std::vector<int> pattern;                    // root multiplicities over C, sorted desc

    // the unique rational linear form of the given multiplicity (or y^mult)
    std::optional<LinForm> linear_of_multiplicity(int m) const;
};

BinaryForm analyze_binary_form(const BiPoly<Rat>& form);

// complex main type of the germ (family plus k; Y indices resolved later).
// mu must be the finite Milnor number of f.
SingularityType detect_main_type(const BiPoly<Rat>& f, int mu);

enum class YSplit { YrsReal, Ytilde };

// Ytilde iff jet(f,4)(1,y) has no real roots
YSplit split_real_Y(const BiPoly<Rat>& f);

}  // namespace realnf
