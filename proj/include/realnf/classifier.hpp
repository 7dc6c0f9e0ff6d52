#pragma once

#include <string>
#include <vector>

#include "realnf/bipoly.hpp"
#include "realnf/determinator.hpp"
#include "realnf/errors.hpp"
#include "realnf/newton.hpp"
#include "realnf/realroots.hpp"

namespace realnf {

struct NormalFormRecord {
    SingularityType subtype;  // family, indices, and sign vector
    std::string normal_form;  // Table-1 template with the literal parameter a
    AlgebraicNumber parameter;
};

struct Diagnostics {
    int mu = 0;
    int corank = 0;
    std::string complex_type;
};

// Pipeline state threading the germ, its type geometry, and (for internal
// soundness checks) the substitutions composed since the last truncation.
template <class F>
struct PipelineStateT {
    BiPoly<F> current;
    TypeData td;
    BiPoly<F> check_base;
    Automorphism<F> phi_since = Automorphism<F>::identity();
    bool verify = true;

    void apply(const Automorphism<F>& step) {
        current = apply_substitution(current, step);
        if (verify) {
            phi_since = compose(step, phi_since);
            if (apply_substitution(check_base, phi_since) != current)
                throw ClassifyError(FailKind::Internal, "transformation soundness check failed");
        }
    }
    void reset_checkpoint() {
        check_base = current;
        phi_since = Automorphism<F>::identity();
    }
    void truncate_weighted(long j) {
        current = weighted_jet(current, td.w, j);
        reset_checkpoint();
    }
};

using PipelineState = PipelineStateT<Rat>;

// Step II linear normalization for one-face types and J10/J10k (Alg. 1 pattern)
PipelineState normalize_low_jet_exceptional(const BiPoly<Rat>& f, const TypeData& td);

// Step II linear normalization for X9k (Alg. 2 pattern: c f1^2 f2, then shear)
PipelineState normalize_low_jet_X9k(const BiPoly<Rat>& f, const TypeData& td);

// Remove one term via the Jacobian division of Algorithm 3; throws if neither
// partial's lowest term divides it.
void eliminate_term(PipelineState& st, const Mon& mon);

// J10+k helper: shear x -> x + q y^2 with q the double root of the weighted jet cubic
void kill_double_root_J10k(PipelineState& st);

struct ScalingResult {
    QPoly p;   // z^N - rational
    int sign;  // sign of the moduli parameter (0 if the coefficient vanishes)
};

// closed-form positive-scaling elimination: returns the polynomial whose root
// the moduli parameter is, plus the parameter's sign
ScalingResult scaling_minpoly(const std::vector<std::pair<Mon, Rat>>& nonmoduli,
                              const std::pair<Mon, Rat>& moduli);

// true iff a real linear transformation takes the quartic f4 to the normal form
// of the target subtype with the given parameter value
bool x9_real_solvable(const BiPoly<Rat>& f4, const SingularityType& target,
                      const AlgebraicNumber& a);

std::vector<NormalFormRecord> classify_exceptional(PipelineState st);
std::vector<NormalFormRecord> classify_J10(PipelineState st);
std::vector<NormalFormRecord> classify_X9(const BiPoly<Rat>& f);
std::vector<NormalFormRecord> classify_X9k_J10k(PipelineState st);
std::vector<NormalFormRecord> classify_Y(const BiPoly<Rat>& f, int mu);

// top-level entry: every Table-1 normal form equation in the real right
// equivalence class of f, sorted deterministically
std::vector<NormalFormRecord> classify(const BiPoly<Rat>& f, Diagnostics* diag = nullptr);

bool records_equivalent(const NormalFormRecord& a, const NormalFormRecord& b);

}  // namespace realnf
