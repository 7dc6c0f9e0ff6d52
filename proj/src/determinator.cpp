#include "realnf/determinator.hpp"

#include <algorithm>

#include "realnf/realroots.hpp"

namespace realnf {

std::optional<LinForm> BinaryForm::linear_of_multiplicity(int m) const {
    if (y_mult == m) return LinForm{Rat(0), Rat(1)};
    for (const auto& [g, mult] : factors)
        if (mult == m && g.degree() == 1) return LinForm{Rat(1), g.coeff(0)};  // x + c0 y
    return std::nullopt;
}

BinaryForm analyze_binary_form(const BiPoly<Rat>& form) {
    BinaryForm out;
    if (form.is_zero()) throw std::invalid_argument("analyze_binary_form: zero form");
    int n = form.total_degree();
    if (form.low_degree() != n) throw std::invalid_argument("analyze_binary_form: not homogeneous");
    out.degree = n;
    // q(t) = form(t, 1); y-multiplicity is the degree drop
    std::vector<Rat> c(n + 1, Rat(0));
    for (const auto& [m, v] : form.terms) c[m.first] = v;
    QPoly q(std::move(c));
    out.y_mult = n - q.degree();
    out.factors = factor_rational(q);
    out.lead = q.lc();
    for (const auto& [g, mult] : out.factors)
        for (int i = 0; i < g.degree(); ++i) out.pattern.push_back(mult);
    if (out.y_mult > 0) out.pattern.push_back(out.y_mult);
    std::sort(out.pattern.rbegin(), out.pattern.rend());
    return out;
}

namespace {

// root-multiplicity structure of the cubic C, C with nonzero leading coefficient
// returns 1 = squarefree, 2 = exactly one double root, 3 = triple root
int cubic_root_structure(const QPoly& C, Rat* double_root) {
    QPoly g = gcd(C, C.derivative());
    if (g.degree() == 0) return 1;
    if (g.degree() == 1) {
        if (double_root) *double_root = -g.coeff(0);  // monic z + c0
        return 2;
    }
    return 3;
}

[[noreturn]] void out_of_scope_simple(const std::string& family, int mu) {
    throw ClassifyError(FailKind::OutOfScope,
                        "simple singularity of type " + family + std::to_string(mu) +
                            " (modality 0), outside the modality-1 classifier");
}

}  // namespace

SingularityType detect_main_type(const BiPoly<Rat>& f, int mu) {
    BiPoly<Rat> j3 = weighted_slice(f, Weight{{{1, 1}}}, 3);
    if (!j3.is_zero()) {
        BinaryForm b3 = analyze_binary_form(j3);
        if (b3.pattern == std::vector<int>{3}) {
            // cubic is a perfect cube of a linear form: J/E branch
            auto l = b3.linear_of_multiplicity(3);
            if (!l) throw ClassifyError(FailKind::Internal, "cube without rational linear factor");
            // move the cube onto x^3
            BiPoly<Rat> g;
            if (l->a != 0) {
                Automorphism<Rat> phi =
                    Automorphism<Rat>::linear(1 / l->a, -l->b / l->a, Rat(0), Rat(1));
                g = apply_substitution(f, phi);
            } else {
                Automorphism<Rat> phi =
                    Automorphism<Rat>::linear(Rat(0), Rat(1), 1 / l->b, Rat(0));
                g = apply_substitution(f, phi);
            }
            if (mu <= 9) {
                if (mu >= 6 && mu <= 8) out_of_scope_simple("E", mu);
                out_of_scope_simple("corank-2 simple, mu=", mu);
            }
            // weighted (2,1)-degree-6 slice as a cubic in x/y^2
            Weight w21{{{2, 1}}};
            for (const auto& [m, v] : g.terms)
                if (w21.degree(m.first, m.second) < 6 && m != Mon{3, 0})
                    throw ClassifyError(FailKind::Internal,
                                        "unexpected low-order term in the cube branch");
            Rat c3 = g.coeff(3, 0), c2 = g.coeff(2, 2), c1 = g.coeff(1, 4), c0 = g.coeff(0, 6);
            QPoly C(std::vector<Rat>{c0, c1, c2, c3});
            int structure = cubic_root_structure(C, nullptr);
            if (structure == 1) {
                if (mu != 10)
                    throw ClassifyError(FailKind::Internal, "nondegenerate J-slice with mu != 10");
                return {Family::J10};
            }
            if (structure == 2) {
                if (mu < 11)
                    throw ClassifyError(FailKind::Degenerate,
                                        "degenerate J10 germ (double root in the weighted jet)");
                SingularityType t{Family::J10k};
                t.k = mu - 10;
                return t;
            }
            // triple root: exceptional E family by mu
            if (mu == 12) return {Family::E12};
            if (mu == 13) return {Family::E13};
            if (mu == 14) return {Family::E14};
            throw ClassifyError(FailKind::OutOfScope,
                                "corank-2 germ with cubic 3-jet and mu=" + std::to_string(mu) +
                                    ": modality exceeds 1");
        }
        // non-cube cubic part: simple D series
        out_of_scope_simple("D", mu);
    }

    BiPoly<Rat> j4 = weighted_slice(f, Weight{{{1, 1}}}, 4);
    if (j4.is_zero())
        throw ClassifyError(FailKind::OutOfScope,
                            "zero 4-jet with corank 2: modality exceeds 1 (mu=" +
                                std::to_string(mu) + ")");
    BinaryForm b4 = analyze_binary_form(j4);
    const auto& pat = b4.pattern;
    if (pat == std::vector<int>{1, 1, 1, 1}) {
        if (mu != 9) throw ClassifyError(FailKind::Internal, "X9 jet with mu != 9");
        return {Family::X9};
    }
    if (pat == std::vector<int>{2, 1, 1}) {
        if (mu <= 9)
            throw ClassifyError(FailKind::Degenerate, "degenerate X9-type quartic jet");
        SingularityType t{Family::X9k};
        t.k = mu - 9;
        return t;
    }
    if (pat == std::vector<int>{2, 2}) {
        SingularityType t{Family::Yrs};  // indices resolved during classification
        return t;
    }
    if (pat == std::vector<int>{3, 1}) {
        if (mu == 11) return {Family::Z11};
        if (mu == 12) return {Family::Z12};
        if (mu == 13) return {Family::Z13};
        throw ClassifyError(FailKind::OutOfScope,
                            "Z-series germ with mu=" + std::to_string(mu) +
                                ": modality exceeds 1");
    }
    if (pat == std::vector<int>{4}) {
        if (mu == 12) return {Family::W12};
        if (mu == 13) return {Family::W13};
        throw ClassifyError(FailKind::OutOfScope,
                            "W-series germ with mu=" + std::to_string(mu) +
                                ": modality exceeds 1");
    }
    throw ClassifyError(FailKind::Internal, "unrecognized quartic jet pattern");
}

YSplit split_real_Y(const BiPoly<Rat>& f) {
    BiPoly<Rat> j4 = weighted_slice(f, Weight{{{1, 1}}}, 4);
    QPoly q = specialize_x1(j4);
    if (q.degree() <= 0) {
        // pure power of y: specialize the other way
        q = restrict_x0(j4);
    }
    if (q.degree() <= 0) throw ClassifyError(FailKind::Internal, "split_real_Y: trivial 4-jet");
    return sturm_count(q, Interval::whole()) == 0 ? YSplit::Ytilde : YSplit::YrsReal;
}

}  // namespace realnf
