#include "realnf/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "realnf/groebner.hpp"
#include "realnf/localalg.hpp"

namespace realnf {

namespace {

NormalFormRecord make_record(const SingularityType& st, const QPoly& p, const Interval& I) {
    NormalFormRecord r;
    r.subtype = st;
    r.normal_form = normal_form_string(st);
    r.parameter = minpoly_in_interval(p, I);
    return r;
}

NormalFormRecord make_rational_record(const SingularityType& st, const Rat& a) {
    NormalFormRecord r;
    r.subtype = st;
    r.normal_form = normal_form_string(st);
    r.parameter = AlgebraicNumber{QPoly(std::vector<Rat>{-a, Rat(1)}), Interval::point(a)};
    return r;
}

Interval half_line(int sign) {
    return sign > 0 ? Interval::right_of(Rat(0), false) : Interval::left_of(Rat(0), false);
}

// Algorithm-1/2 low-jet factorization: jet = c * f1^alpha * f2^beta with f1, f2
// rational linear forms; for odd alpha the constant is normalized positive.
struct LowJetFactors {
    Rat c;
    LinForm f1;
    std::optional<LinForm> f2;
};

LowJetFactors factor_low_jet(const BiPoly<Rat>& jet, int alpha, int beta) {
    BinaryForm bf = analyze_binary_form(jet);
    LowJetFactors out;
    auto l1 = bf.linear_of_multiplicity(alpha);
    if (!l1)
        throw ClassifyError(FailKind::Internal,
                            "low jet does not factor with the expected multiplicity");
    out.f1 = *l1;
    if (beta > 0) {
        // remaining simple linear factor
        std::optional<LinForm> l2;
        if (bf.y_mult == beta && !(out.f1.a == 0)) l2 = LinForm{Rat(0), Rat(1)};
        for (const auto& [g, mult] : bf.factors)
            if (mult == beta && g.degree() == 1) {
                LinForm cand{Rat(1), g.coeff(0)};
                if (!(cand.a == out.f1.a && cand.b == out.f1.b)) l2 = cand;
            }
        if (!l2)
            throw ClassifyError(FailKind::Internal, "low jet is missing its simple linear factor");
        out.f2 = *l2;
    }
    // constant by coefficient comparison
    BiPoly<Rat> prod = (BiPoly<Rat>::monomial(1, 0, out.f1.a) +
                        BiPoly<Rat>::monomial(0, 1, out.f1.b))
                           .pow(alpha);
    if (out.f2)
        prod = prod * (BiPoly<Rat>::monomial(1, 0, out.f2->a) +
                       BiPoly<Rat>::monomial(0, 1, out.f2->b))
                          .pow(beta);
    Mon probe = prod.terms.begin()->first;
    out.c = jet.coeff(probe.first, probe.second) / prod.coeff(probe.first, probe.second);
    if (alpha % 2 == 1 && out.c < 0) {
        out.c = -out.c;
        out.f1.a = -out.f1.a;
        out.f1.b = -out.f1.b;
    }
    return out;
}

// the substitution sending f1 -> x (keeping y), or the swap variant when f1 ~ y;
// with f2 present, the full inverse-matrix map (f1 -> x, f2 -> y)
template <class F>
Automorphism<F> low_jet_map(const LinForm& f1, const std::optional<LinForm>& f2) {
    auto fe = [](const Rat& v) { return F(v); };
    if (f2) {
        F a1 = fe(f1.a), b1 = fe(f1.b), a2 = fe(f2->a), b2 = fe(f2->b);
        F det = a1 * b2 - b1 * a2;
        return Automorphism<F>::linear(b2 / det, -b1 / det, -a2 / det, a1 / det);
    }
    if (f1.a != 0)
        return Automorphism<F>::linear(fe(1 / f1.a), fe(-f1.b / f1.a), F(0), F(1));
    return Automorphism<F>::linear(F(0), F(1), fe(1 / f1.b), F(0));
}

// largest standard degree of a lattice point strictly under the polygon
int max_subpolygon_degree(const TypeData& td) {
    int best = 0;
    for (int i = 0; i <= 2 * static_cast<int>(td.d_w); ++i)
        for (int j = 0; j <= 2 * static_cast<int>(td.d_w); ++j) {
            if (i + j > 64) continue;
            if (td.w.degree(i, j) < td.d_w) best = std::max(best, i + j);
        }
    return best;
}

bool in_support(const TypeData& td, const Mon& m) {
    if (m == td.moduli) return true;
    return std::find(td.support.begin(), td.support.end(), m) != td.support.end();
}

// Step II for one-face types: remove all terms strictly under the polygon by
// increasing standard degree, batching each degree into one shear
void remove_subpolygon_terms(PipelineState& st) {
    const TypeData& td = st.td;
    Mon m0 = td.support.front();
    int alpha = m0.first, beta = m0.second;
    Rat lead = st.current.coeff(m0.first, m0.second);
    int top = max_subpolygon_degree(td);
    for (int j = td.low_jet_degree + 1; j <= top; ++j) {
        BiPoly<Rat> v1;
        for (const auto& [m, v] : st.current.terms) {
            if (m.first + m.second != j || in_support(td, m)) continue;
            if (polygon_position(td, m) != PolygonPos::Below) continue;
            if (m.first < alpha - 1 || m.second < beta)
                throw ClassifyError(FailKind::Internal,
                                    "sub-polygon term is outside the Jacobian ideal; "
                                    "the germ is not of the detected type");
            v1.add_term(m.first - (alpha - 1), m.second - beta, v / (Rat(alpha) * lead));
        }
        if (v1.is_zero()) continue;
        Automorphism<Rat> step{BiPoly<Rat>::var_x() - v1, BiPoly<Rat>::var_y()};
        st.apply(step);
    }
    for (const auto& [m, v] : st.current.terms)
        if (!in_support(td, m) && polygon_position(td, m) == PolygonPos::Below)
            throw ClassifyError(FailKind::Internal, "sub-polygon terms survived elimination");
}

// Step III for one-face types: clear the weighted slices above the polygon up
// to the Arnold monomial, then read off its coefficient
Rat reduce_above_polygon(PipelineState& st) {
    const TypeData& td = st.td;
    BiPoly<Rat> f0 = weighted_jet(st.current, td.w, td.d_w);
    Rat t(0);
    for (long j = td.d_w + 1; j <= td.d_moduli; ++j) {
        BiPoly<Rat> slice = weighted_slice(st.current, td.w, j);
        if (slice.is_zero()) continue;
        std::vector<Mon> system;
        if (j == td.d_moduli) system.push_back(td.moduli);
        GradedReduction gr = reduce_mod_jacobian_graded(st.current, f0, td.w, j, system);
        if (!gr.v1.is_zero() || !gr.v2.is_zero()) {
            Automorphism<Rat> step{BiPoly<Rat>::var_x() - gr.v1, BiPoly<Rat>::var_y() - gr.v2};
            st.apply(step);
        }
        if (j == td.d_moduli)
            for (const auto& [m, c] : gr.system_coeffs)
                if (m == td.moduli) t = c;
    }
    st.truncate_weighted(td.d_moduli);
    return t;
}

void guard_restrictions(const std::vector<NormalFormRecord>& recs) {
    for (const auto& r : recs) {
        TypeData td = type_data(r.subtype);
        if (td.restriction == Restriction::ANonzero && r.parameter.is_rational() &&
            r.parameter.rat_value() == 0)
            throw ClassifyError(FailKind::Degenerate,
                                "moduli parameter a = 0 violates the a != 0 restriction");
        if (td.restriction == Restriction::ASquaredNot4 && r.parameter.is_rational()) {
            // a^2 != 4 constrains X9++, X9--, and J10+ only;
            // the mixed-sign subtypes carry the vacuous a^2 != -4 instead
            bool applies = (r.subtype.fam == Family::X9 &&
                            r.subtype.signs[0] == r.subtype.signs[1]) ||
                           (r.subtype.fam == Family::J10 && r.subtype.signs[0] == 1);
            Rat v = r.parameter.rat_value();
            if (applies && (v == 2 || v == -2))
                throw ClassifyError(FailKind::Degenerate,
                                    "moduli parameter violates the a^2 != 4 restriction");
        }
    }
}

int family_rank(Family f) { return static_cast<int>(f); }

void sort_records(std::vector<NormalFormRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const NormalFormRecord& a, const NormalFormRecord& b) {
        if (a.subtype.fam != b.subtype.fam)
            return family_rank(a.subtype.fam) < family_rank(b.subtype.fam);
        if (a.subtype.k != b.subtype.k) return a.subtype.k < b.subtype.k;
        if (a.subtype.r != b.subtype.r) return a.subtype.r < b.subtype.r;
        if (a.subtype.s != b.subtype.s) return a.subtype.s < b.subtype.s;
        // sign vectors lexicographically, + before -
        if (a.subtype.signs != b.subtype.signs) {
            for (size_t i = 0; i < std::min(a.subtype.signs.size(), b.subtype.signs.size()); ++i)
                if (a.subtype.signs[i] != b.subtype.signs[i])
                    return a.subtype.signs[i] > b.subtype.signs[i];
            return a.subtype.signs.size() < b.subtype.signs.size();
        }
        // interval lower bound, -inf first
        const auto& ia = a.parameter.iv;
        const auto& ib = b.parameter.iv;
        if (!ia.lo && ib.lo) return true;
        if (ia.lo && !ib.lo) return false;
        return compare_roots(a.parameter, b.parameter) < 0;
    });
}

}  // namespace

// ---------------------------------------------------------------------------
// Step II entry points
// ---------------------------------------------------------------------------

PipelineState normalize_low_jet_exceptional(const BiPoly<Rat>& f, const TypeData& td) {
    Mon m0 = td.support.front();
    int alpha = m0.first, beta = m0.second;
    BiPoly<Rat> jet = f.jet(td.low_jet_degree);
    if (jet.is_zero() || jet.low_degree() != td.low_jet_degree)
        throw ClassifyError(FailKind::Internal, "low jet has unexpected filtration");
    LowJetFactors fac = factor_low_jet(jet, alpha, beta);
    PipelineState st;
    st.td = td;
    st.current = f;
    st.reset_checkpoint();
    st.apply(low_jet_map<Rat>(fac.f1, fac.f2));
    // after the change of coordinates the low jet is c * m0
    BiPoly<Rat> expect = BiPoly<Rat>::monomial(m0.first, m0.second, fac.c);
    if (st.current.jet(td.low_jet_degree) != expect)
        throw ClassifyError(FailKind::Internal, "low-jet normalization failed");
    return st;
}

PipelineState normalize_low_jet_X9k(const BiPoly<Rat>& f, const TypeData& td) {
    BiPoly<Rat> jet = f.jet(4);
    BinaryForm bf = analyze_binary_form(jet);
    auto l1 = bf.linear_of_multiplicity(2);
    if (!l1) throw ClassifyError(FailKind::Internal, "X9+k jet has no rational double line");
    PipelineState st;
    st.td = td;
    st.current = f;
    st.reset_checkpoint();
    st.apply(low_jet_map<Rat>(*l1, std::nullopt));
    Rat a1 = st.current.coeff(3, 1), a2 = st.current.coeff(2, 2);
    if (a2 == 0) throw ClassifyError(FailKind::Internal, "X9+k jet lost its x^2y^2 term");
    if (a1 != 0) {
        Automorphism<Rat> shear{BiPoly<Rat>::var_x(),
                                BiPoly<Rat>::var_y() -
                                    BiPoly<Rat>::monomial(1, 0, a1 / (2 * a2))};
        st.apply(shear);
    }
    if (st.current.coeff(3, 1) != 0 || st.current.coeff(1, 3) != 0 || st.current.coeff(0, 4) != 0)
        throw ClassifyError(FailKind::Internal, "X9+k 4-jet normalization failed");
    if (st.current.coeff(4, 0) == 0)
        throw ClassifyError(FailKind::Internal, "X9+k jet lost its x^4 term");
    return st;
}

void eliminate_term(PipelineState& st, const Mon& mon) {
    Rat c = st.current.coeff(mon.first, mon.second);
    if (c == 0) return;
    BiPoly<Rat> f0 = weighted_jet(st.current, st.td.w, st.td.d_w);
    auto div = jacobian_term_division(f0, mon, c);
    if (!div)
        throw ClassifyError(FailKind::Internal, "term is not divisible by either lowest partial");
    Automorphism<Rat> step = Automorphism<Rat>::identity();
    if (div->axis == 'x')
        step.xi = BiPoly<Rat>::var_x() - div->cofactor;
    else
        step.yi = BiPoly<Rat>::var_y() - div->cofactor;
    st.apply(step);
    if (st.current.coeff(mon.first, mon.second) != 0)
        throw ClassifyError(FailKind::Internal, "eliminate_term left the term in place");
}

void kill_double_root_J10k(PipelineState& st) {
    Rat c3 = st.current.coeff(3, 0), c2 = st.current.coeff(2, 2), c1 = st.current.coeff(1, 4),
        c0 = st.current.coeff(0, 6);
    QPoly cubic(std::vector<Rat>{c0, c1, c2, c3});
    QPoly g = gcd(cubic, cubic.derivative());
    if (g.degree() == 0)
        throw ClassifyError(FailKind::Internal, "J10+k weighted jet has no double root");
    if (g.degree() >= 2)
        throw ClassifyError(FailKind::Internal, "J10+k weighted jet has a triple root");
    Rat q = -g.coeff(0);  // monic z + c
    if (q != 0) {
        Automorphism<Rat> shear{BiPoly<Rat>::var_x() + BiPoly<Rat>::monomial(0, 2, q),
                                BiPoly<Rat>::var_y()};
        st.apply(shear);
    }
    if (st.current.coeff(1, 4) != 0 || st.current.coeff(0, 6) != 0)
        throw ClassifyError(FailKind::Internal, "double-root shear failed");
    if (st.current.coeff(2, 2) == 0)
        throw ClassifyError(FailKind::Degenerate,
                            "J10+k germ degenerates: x^2y^2 coefficient vanished");
}

// ---------------------------------------------------------------------------
// Step IV scaling
// ---------------------------------------------------------------------------

ScalingResult scaling_minpoly(const std::vector<std::pair<Mon, Rat>>& nonmoduli,
                              const std::pair<Mon, Rat>& moduli) {
    if (nonmoduli.size() != 2)
        throw std::invalid_argument("scaling_minpoly: need exactly two non-moduli terms");
    long i0 = nonmoduli[0].first.first, j0 = nonmoduli[0].first.second;
    long i1 = nonmoduli[1].first.first, j1 = nonmoduli[1].first.second;
    long im = moduli.first.first, jm = moduli.first.second;
    long D = i0 * j1 - i1 * j0;
    if (D == 0) throw std::invalid_argument("scaling_minpoly: dependent exponent vectors");
    // a = t * |c0|^p * |b0|^q with rational exponents
    Rat p(jm * i1 - im * j1, D), q(im * j0 - jm * i0, D);
    p.canonicalize();
    q.canonicalize();
    long N = std::lcm(p.get_den().get_si(), q.get_den().get_si());
    Rat c0 = rat_abs(nonmoduli[0].second), b0 = rat_abs(nonmoduli[1].second);
    const Rat& t = moduli.second;
    Rat pN = p * Rat(N), qN = q * Rat(N);
    Rat C = rat_pow(t, N) * rat_pow(c0, pN.get_num().get_si()) *
            rat_pow(b0, qN.get_num().get_si());
    QPoly poly = QPoly::monomial(static_cast<int>(N), Rat(1)) - QPoly::constant(C);
    return {poly, sign_of(t)};
}

// ---------------------------------------------------------------------------
// exceptional families
// ---------------------------------------------------------------------------

std::vector<NormalFormRecord> classify_exceptional(PipelineState st) {
    const TypeData& td = st.td;
    Mon m0 = td.support[0], m1 = td.support[1], mm = td.moduli;
    Rat c = st.current.coeff(m0.first, m0.second);
    // work with the monic germ; the constant is restored before Step IV
    st.current = st.current * (1 / c);
    st.reset_checkpoint();
    remove_subpolygon_terms(st);
    Rat t = reduce_above_polygon(st);
    st.current = st.current * c;
    st.reset_checkpoint();

    Rat c0 = st.current.coeff(m0.first, m0.second);
    Rat b0 = st.current.coeff(m1.first, m1.second);
    if (c0 == 0 || b0 == 0)
        throw ClassifyError(FailKind::Internal, "support coefficient vanished in Step IV");
    t = t * c;

    // sign normalization over the four sign maps x -> e1 x, y -> e2 y
    int best_score = -1;
    Rat nc0, nb0, nt;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            auto act = [&](const Mon& m, const Rat& v) {
                Rat r = v;
                if (e1 < 0 && m.first % 2 == 1) r = -r;
                if (e2 < 0 && m.second % 2 == 1) r = -r;
                return r;
            };
            Rat a = act(m0, c0), b = act(m1, b0);
            int score = (a > 0 ? 2 : 0) + (b > 0 ? 1 : 0);
            if (score > best_score) {
                best_score = score;
                nc0 = a;
                nb0 = b;
                nt = act(mm, t);
            }
        }

    SingularityType subtype = td.type;
    if (td.sign_arity == 0) {
        if (nc0 < 0 || nb0 < 0)
            throw ClassifyError(FailKind::Internal, "sign normalization failed");
    } else {
        int pinned = (nc0 < 0) ? -1 : (nb0 < 0 ? -1 : 1);
        subtype.signs = {pinned};
    }

    ScalingResult sc = scaling_minpoly({{m0, nc0}, {m1, nb0}}, {mm, nt});
    Interval I = sc.sign > 0 ? Interval::right_of(Rat(0), false) : Interval::left_of(Rat(0), true);
    if (sc.sign == 0) {
        // zero moduli coefficient: parameter is exactly 0 (closed negative side)
        return {make_rational_record(subtype, Rat(0))};
    }
    return {make_record(subtype, sc.p, I)};
}

// ---------------------------------------------------------------------------
// J10
// ---------------------------------------------------------------------------

std::vector<NormalFormRecord> classify_J10(PipelineState st) {
    const TypeData& td = st.td;
    st.truncate_weighted(td.d_w);
    for (const auto& [m, v] : st.current.terms)
        if (td.w.degree(m.first, m.second) < td.d_w)
            throw ClassifyError(FailKind::Internal, "J10 germ has terms under the polygon");
    Rat c = st.current.coeff(3, 0);
    if (c <= 0) throw ClassifyError(FailKind::Internal, "J10 x^3 coefficient not positive");
    st.current = st.current * (1 / c);
    st.reset_checkpoint();

    Rat a2 = st.current.coeff(2, 2);
    if (a2 != 0) {
        Automorphism<Rat> shear{BiPoly<Rat>::var_x() - BiPoly<Rat>::monomial(0, 2, a2 / 3),
                                BiPoly<Rat>::var_y()};
        st.apply(shear);
    }
    Rat d = st.current.coeff(1, 4), e = st.current.coeff(0, 6);
    if (st.current.coeff(2, 2) != 0)
        throw ClassifyError(FailKind::Internal, "J10 depression failed");

    QPoly k(std::vector<Rat>{e, d, Rat(0), Rat(1)});
    if (gcd(k, k.derivative()).degree() > 0)
        throw ClassifyError(FailKind::Degenerate,
                            "J10 cubic has a multiple root: the a^2 != 4 restriction fails");

    auto p_sigma = [&](int sigma) {
        Rat d3 = d * d * d, e2 = e * e;
        std::vector<Rat> cs(7, Rat(0));
        cs[6] = Rat(sigma) * (4 * d3 + 27 * e2);
        cs[4] = -36 * d3 - 243 * e2;
        cs[2] = Rat(sigma) * (81 * d3 + 729 * e2);
        cs[0] = -729 * e2;
        return QPoly(std::move(cs));
    };
    QPoly pp = p_sigma(1), pm = p_sigma(-1);

    SingularityType jplus = td.type, jminus = td.type;
    jplus.signs = {1};
    jminus.signs = {-1};

    int nreal = sturm_count(k, Interval::whole());
    std::vector<NormalFormRecord> out;
    if (nreal == 1) {
        // sign(a) = sign of the real root of k = -sign(e)
        if (e == 0)
            out.push_back(make_rational_record(jplus, Rat(0)));
        else if (e > 0)
            out.push_back(make_record(jplus, pp, half_line(-1)));
        else
            out.push_back(make_record(jplus, pp, half_line(+1)));
        return out;
    }
    if (nreal != 3) throw ClassifyError(FailKind::Internal, "J10 cubic root count out of range");

    if (e == 0) {
        QPoly z2(std::vector<Rat>{Rat(-9, 2), Rat(0), Rat(1)});
        out.push_back(make_record(jplus, z2, half_line(-1)));
        out.push_back(make_rational_record(jminus, Rat(0)));
        out.push_back(make_record(jplus, z2, half_line(+1)));
        return out;
    }

    auto roots = isolate_real_roots(pp);
    if (roots.size() != 4)
        throw ClassifyError(FailKind::Internal, "p+ does not have four real roots");
    if (e > 0) {
        out.push_back(make_record(jminus, pm, half_line(+1)));
        out.push_back(make_record(jplus, pp, roots[1]));
        out.push_back(make_record(jplus, pp, roots[3]));
    } else {
        out.push_back(make_record(jminus, pm, half_line(-1)));
        out.push_back(make_record(jplus, pp, roots[0]));
        out.push_back(make_record(jplus, pp, roots[2]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// X9
// ---------------------------------------------------------------------------

namespace {

// coefficient of x^(4-m) y^m in f4(ax + by, cx + dy), as a polynomial in the
// transformation unknowns (vars 0..3 = a, b, c, d of an nv-variable ring)
MPoly transformed_coeff(const BiPoly<Rat>& f4, int m, int nv) {
    MPoly out(nv);
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
        return r;
    };
    for (const auto& [mono, coef] : f4.terms) {
        int i = mono.first, j = mono.second;
        // (a x + b y)^i (c x + d y)^j, pick y-degree m overall
        for (int r = 0; r <= i; ++r) {
            int s = m - r;
            if (s < 0 || s > j) continue;
            Expv e(nv, 0);
            e[0] = i - r;  // a
            e[1] = r;      // b
            e[2] = j - s;  // c
            e[3] = s;      // d
            out.add_term(e, coef * Rat(binom(i, r)) * Rat(binom(j, s)));
        }
    }
    return out;
}

}  // namespace

bool x9_real_solvable(const BiPoly<Rat>& f4, const SingularityType& target,
                      const AlgebraicNumber& a) {
    if (target.signs.size() != 2)
        throw std::invalid_argument("x9_real_solvable: target needs two signs");
    bool rational = a.is_rational();
    int nv = rational ? 4 : 5;

    std::vector<MPoly> eqs;
    MPoly c0 = transformed_coeff(f4, 0, nv);
    MPoly c1 = transformed_coeff(f4, 1, nv);
    MPoly c2 = transformed_coeff(f4, 2, nv);
    MPoly c3 = transformed_coeff(f4, 3, nv);
    MPoly c4 = transformed_coeff(f4, 4, nv);
    eqs.push_back(c0 - MPoly::constant(nv, Rat(target.signs[0])));
    eqs.push_back(c1);
    if (rational) {
        eqs.push_back(c2 - MPoly::constant(nv, a.rat_value()));
    } else {
        eqs.push_back(c2 - MPoly::variable(nv, 4));
        MPoly m(nv);
        for (int i = 0; i <= a.minpoly.degree(); ++i) {
            if (a.minpoly.coeff(i) == 0) continue;
            Expv e(nv, 0);
            e[4] = i;
            m.add_term(e, a.minpoly.coeff(i));
        }
        eqs.push_back(m);
    }
    eqs.push_back(c3);
    eqs.push_back(c4 - MPoly::constant(nv, Rat(target.signs[1])));

    // Any admissible order yields the same quotient algebra for the Hermite
    // count; degrevlex keeps the basis small where lex explodes.
    const TermOrder ord = TermOrder::DegRevLex;
    auto gb = groebner_basis(eqs, ord);
    if (gb.size() == 1 && gb[0].terms.size() == 1 &&
        gb[0].terms.count(Expv(nv, 0)))
        return false;  // inconsistent system, no complex solution at all

    MPoly weight = MPoly::constant(nv, Rat(1));
    if (!rational) {
        // localize the parameter to its isolating interval via (a-lo)(hi-a) > 0
        AlgebraicNumber loc = a;
        while (!loc.iv.lo || !loc.iv.hi || loc.iv.is_point()) refine_step(loc);
        // widen endpoints off the conjugate roots is unnecessary: the interval
        // isolates the designated root already
        MPoly av = MPoly::variable(nv, 4);
        MPoly lo = MPoly::constant(nv, *loc.iv.lo), hi = MPoly::constant(nv, *loc.iv.hi);
        weight = (av - lo) * (hi - av);
    }
    return count_real_points(gb, ord, weight) > 0;
}

std::vector<NormalFormRecord> classify_X9(const BiPoly<Rat>& f) {
    BiPoly<Rat> f4 = f.jet(4);
    // make the x^4 coefficient nonzero
    std::vector<Automorphism<Rat>> candidates = {
        Automorphism<Rat>::identity(),
        Automorphism<Rat>::linear(Rat(0), Rat(1), Rat(1), Rat(0)),
        Automorphism<Rat>::linear(Rat(1), Rat(0), Rat(1), Rat(1)),
        Automorphism<Rat>::linear(Rat(1), Rat(0), Rat(2), Rat(1)),
        Automorphism<Rat>::linear(Rat(1), Rat(0), Rat(3), Rat(1))};
    bool found = false;
    for (const auto& phi : candidates) {
        BiPoly<Rat> g = apply_substitution(f4, phi);
        if (g.coeff(4, 0) != 0) {
            f4 = g;
            found = true;
            break;
        }
    }
    if (!found) throw ClassifyError(FailKind::Internal, "X9 quartic vanished at all probes");

    Rat b = f4.coeff(4, 0), a1 = f4.coeff(3, 1);
    if (a1 != 0) {
        Automorphism<Rat> shear{BiPoly<Rat>::var_x() - BiPoly<Rat>::monomial(0, 1, a1 / (4 * b)),
                                BiPoly<Rat>::var_y()};
        f4 = apply_substitution(f4, shear);
    }
    if (f4.coeff(3, 1) != 0) throw ClassifyError(FailKind::Internal, "X9 shear failed");
    b = f4.coeff(4, 0);
    Rat c = f4.coeff(2, 2), d = f4.coeff(1, 3), e = f4.coeff(0, 4);

    QPoly fx1(std::vector<Rat>{e, d, c, Rat(0), b});
    if (gcd(fx1, fx1.derivative()).degree() > 0)
        throw ClassifyError(FailKind::Degenerate, "X9 quartic has a repeated root");
    int r = sturm_count(fx1, Interval::whole());

    auto p_sigma = [&](int s) {
        Rat b2 = b * b, b3 = b2 * b, c2 = c * c, c3 = c2 * c, c4 = c3 * c, c6 = c3 * c3;
        Rat d2 = d * d, d4 = d2 * d2, e2 = e * e, e3 = e2 * e;
        Rat sg(s);
        std::vector<Rat> cs(7, Rat(0));
        cs[6] = -256 * b3 * e3 + 128 * b2 * c2 * e2 - 144 * b2 * c * d2 * e + 27 * b2 * d4 -
                16 * b * c4 * e + 4 * b * c3 * d2;
        cs[4] = sg * (18432 * b3 * e3 + 11520 * b2 * c2 * e2 - 5184 * b2 * c * d2 * e +
                      972 * b2 * d4 + 144 * b * c3 * d2 + 16 * c6);
        cs[2] = -331776 * b3 * e3 - 62208 * b2 * c * d2 * e + 11664 * b2 * d4 -
                11520 * b * c4 * e + 1728 * b * c3 * d2 - 128 * c6;
        cs[0] = sg * (331776 * b2 * c2 * e2 - 248832 * b2 * c * d2 * e + 46656 * b2 * d4 -
                      18432 * b * c4 * e + 6912 * b * c3 * d2 + 256 * c6);
        return QPoly(std::move(cs));
    };
    QPoly pp = p_sigma(1), pm = p_sigma(-1);

    auto subtype = [&](int s0, int s1) {
        SingularityType t{Family::X9};
        t.signs = {s0, s1};
        return t;
    };

    std::vector<NormalFormRecord> out;
    if (r == 0 && b > 0) {
        AlgebraicNumber probe = minpoly_in_interval(pp, Interval{Rat(0), Rat(2), true, false});
        bool first = x9_real_solvable(f4, subtype(1, 1), probe);
        Interval i1 = first ? Interval{Rat(0), Rat(2), true, false}
                            : Interval{Rat(-2), Rat(0), false, false};
        Interval i2 = first ? Interval{Rat(2), Rat(6), false, true}
                            : Interval::right_of(Rat(6), false);
        out.push_back(make_record(subtype(1, 1), pp, i1));
        out.push_back(make_record(subtype(1, 1), pp, i2));
    } else if (r == 0) {
        AlgebraicNumber probe = minpoly_in_interval(pp, Interval{Rat(-2), Rat(0), false, true});
        bool first = x9_real_solvable(f4, subtype(-1, -1), probe);
        Interval i1 = first ? Interval{Rat(-6), Rat(-2), true, false}
                            : Interval::left_of(Rat(-6), false);
        Interval i2 = first ? Interval{Rat(-2), Rat(0), false, true}
                            : Interval{Rat(0), Rat(2), false, false};
        out.push_back(make_record(subtype(-1, -1), pp, i1));
        out.push_back(make_record(subtype(-1, -1), pp, i2));
    } else if (r == 2) {
        AlgebraicNumber probe = minpoly_in_interval(pm, Interval::left_of(Rat(0), true));
        bool neg = x9_real_solvable(f4, subtype(1, -1), probe);
        Interval i = neg ? Interval::left_of(Rat(0), true) : Interval::right_of(Rat(0), false);
        out.push_back(make_record(subtype(1, -1), pm, i));
        out.push_back(make_record(subtype(-1, 1), pm, i));
    } else if (r == 4) {
        AlgebraicNumber probe = minpoly_in_interval(pp, Interval::left_of(Rat(-6), true));
        bool first = x9_real_solvable(f4, subtype(1, 1), probe);
        Interval i1 = first ? Interval::left_of(Rat(-6), true)
                            : Interval{Rat(-6), Rat(-2), false, false};
        Interval i2 = first ? Interval{Rat(2), Rat(6), false, true}
                            : Interval::right_of(Rat(6), false);
        out.push_back(make_record(subtype(1, 1), pp, i1));
        out.push_back(make_record(subtype(-1, -1), pp, i2));
    } else {
        throw ClassifyError(FailKind::Internal, "X9 real root count must be 0, 2, or 4");
    }
    return out;
}

// ---------------------------------------------------------------------------
// X9+k and J10+k
// ---------------------------------------------------------------------------

std::vector<NormalFormRecord> classify_X9k_J10k(PipelineState st) {
    const TypeData& td = st.td;
    bool xfam = td.type.fam == Family::X9k;
    Mon m0 = td.support[0];
    int m = td.moduli.second;

    for (int i = 4; i <= (m + 2) / 2; ++i) {
        Rat t = st.current.coeff(1, i);
        if (t == 0) continue;
        Rat c = st.current.coeff(2, 2);
        if (c == 0) throw ClassifyError(FailKind::Internal, "x^2y^2 coefficient vanished");
        Automorphism<Rat> shear{
            BiPoly<Rat>::var_x() - BiPoly<Rat>::monomial(0, i - 2, t / (2 * c)),
            BiPoly<Rat>::var_y()};
        st.apply(shear);
        if (st.current.coeff(1, i) != 0)
            throw ClassifyError(FailKind::Internal, "xy^i elimination failed");
    }
    st.truncate_weighted(td.d_w);
    for (const auto& [mon, v] : st.current.terms)
        if (!in_support(td, mon))
            throw ClassifyError(FailKind::Internal,
                                "unexpected on/under-polygon term after hyper elimination");

    Rat b0 = st.current.coeff(m0.first, m0.second);
    Rat b1 = st.current.coeff(2, 2);
    Rat b2 = st.current.coeff(0, m);
    if (b0 == 0 || b1 == 0)
        throw ClassifyError(FailKind::Internal, "hyperbolic support coefficient vanished");
    if (b2 == 0)
        throw ClassifyError(FailKind::Degenerate,
                            "pure y-power coefficient vanished: the a != 0 restriction fails");

    SingularityType subtype = td.type;
    if (xfam)
        subtype.signs = {sign_of(b0), sign_of(b1)};
    else {
        if (b0 < 0)
            throw ClassifyError(FailKind::Internal, "J10+k x^3 coefficient not positive");
        subtype.signs = {sign_of(b1)};
    }

    ScalingResult sc = scaling_minpoly({{m0, b0}, {Mon{2, 2}, b1}}, {td.moduli, b2});
    Interval i1 = half_line(sign_of(b2));
    std::vector<NormalFormRecord> out;
    out.push_back(make_record(subtype, sc.p, i1));
    if (m % 2 == 1)  // odd exponent: y -> -y flips the parameter sign
        out.push_back(make_record(subtype, sc.p, half_line(-sign_of(b2))));
    return out;
}

// ---------------------------------------------------------------------------
// Y families
// ---------------------------------------------------------------------------

namespace {

template <class F>
void y_elimination_loop(PipelineStateT<F>& st, int mu, int& r_out, int& s_out) {
    int n1 = 4, n2 = 4;
    int guard = 0;
    while (coeff_is_zero(st.current.coeff(n1, 0)) || coeff_is_zero(st.current.coeff(0, n2))) {
        if (++guard > mu + 8)
            throw ClassifyError(FailKind::Internal, "Y elimination loop did not terminate");
        F b = st.current.coeff(2, 2);
        if (coeff_is_zero(b))
            throw ClassifyError(FailKind::Internal, "Y germ lost its x^2y^2 term");
        if (coeff_is_zero(st.current.coeff(n1, 0))) {
            F t = st.current.coeff(n1, 1);
            if (!coeff_is_zero(t)) {
                Automorphism<F> shear{
                    BiPoly<F>::var_x(),
                    BiPoly<F>::var_y() - BiPoly<F>::monomial(n1 - 2, 0, t / (F(2) * b))};
                st.apply(shear);
            }
            ++n1;
        }
        if (coeff_is_zero(st.current.coeff(0, n2))) {
            F t = st.current.coeff(1, n2);
            if (!coeff_is_zero(t)) {
                Automorphism<F> shear{
                    BiPoly<F>::var_x() - BiPoly<F>::monomial(0, n2 - 2, t / (F(2) * b)),
                    BiPoly<F>::var_y()};
                st.apply(shear);
            }
            ++n2;
        }
    }
    r_out = n1;
    s_out = n2;
}

std::vector<NormalFormRecord> classify_Y_rational(const BiPoly<Rat>& f, int mu,
                                                  const LinForm& l1, const LinForm& l2) {
    PipelineState st;
    st.current = f;
    st.reset_checkpoint();
    st.apply(low_jet_map<Rat>(l1, std::optional<LinForm>(l2)));
    int r = 0, s = 0;
    // provisional geometry for the soundness checks; fixed once r, s are known
    st.td = type_data(SingularityType{Family::Yrs, 0, 5, 5, {}});
    y_elimination_loop(st, mu, r, s);
    if (r + s + 1 != mu)
        throw ClassifyError(FailKind::Internal, "Y indices disagree with the Milnor number");
    if (r <= 4 || s <= 4) throw ClassifyError(FailKind::Internal, "Y indices out of range");
    st.td = type_data(SingularityType{Family::Yrs, 0, r, s, {}});
    st.truncate_weighted(st.td.d_w);
    for (const auto& [mon, v] : st.current.terms)
        if (!in_support(st.td, mon))
            throw ClassifyError(FailKind::Internal, "Y germ support check failed");

    Rat b = st.current.coeff(2, 2), d = st.current.coeff(r, 0), e = st.current.coeff(0, s);
    if (b == 0 || d == 0 || e == 0)
        throw ClassifyError(FailKind::Degenerate, "Y support coefficient vanished");

    if (r % 2 == 1 && s % 2 == 0) {
        std::swap(r, s);
        std::swap(d, e);
    }

    Rat C = rat_pow(rat_abs(b), -static_cast<long>(r) * s) * rat_pow(d, 2 * s) * rat_pow(e, 2 * r);
    QPoly p = QPoly::monomial(2 * r, Rat(1)) - QPoly::constant(C);
    QPoly pt = QPoly::monomial(2 * s, Rat(1)) - QPoly::constant(C);
    int s1 = sign_of(b), s2 = sign_of(d), s3 = sign_of(e);

    auto ytype = [&](int rr, int ss, int g1, int g2) {
        SingularityType t{Family::Yrs};
        t.r = rr;
        t.s = ss;
        t.signs = {g1, g2};
        return t;
    };

    std::vector<NormalFormRecord> out;
    if (r % 2 == 0 && s % 2 == 0) {
        out.push_back(make_record(ytype(r, s, s1, s2), p, half_line(s3)));
        if (!(r == s && s2 == s3))
            out.push_back(make_record(ytype(s, r, s1, s3), pt, half_line(s2)));
    } else if (r % 2 == 0 && s % 2 == 1) {
        out.push_back(make_record(ytype(r, s, s1, s2), p, half_line(-1)));
        out.push_back(make_record(ytype(r, s, s1, s2), p, half_line(+1)));
        out.push_back(make_record(ytype(s, r, s1, -1), pt, half_line(s2)));
        out.push_back(make_record(ytype(s, r, s1, +1), pt, half_line(s2)));
    } else {
        for (int i : {-1, +1})
            for (int j : {-1, +1}) out.push_back(make_record(ytype(r, s, s1, i), p, half_line(j)));
        if (r != s)
            for (int i : {-1, +1})
                for (int j : {-1, +1})
                    out.push_back(make_record(ytype(s, r, s1, i), pt, half_line(j)));
    }
    return out;
}

std::vector<NormalFormRecord> classify_Y_extension(const BiPoly<Rat>& f, int mu, const QPoly& gq,
                                                   YSplit split) {
    // K = Q[t] / (t^2 + p t + q), the field of the two blown-up points
    QuadFieldPtr K = QuadField::make(gq.coeff(1), gq.coeff(0));
    if ((split == YSplit::Ytilde) == K->is_real())
        throw ClassifyError(FailKind::Internal, "Y split disagrees with the field discriminant");
    ExtElem t(K, Rat(0), Rat(1));
    ExtElem tbar = t.conj();
    ExtElem det = t - tbar;
    PipelineStateT<ExtElem> st;
    st.current = to_ext(f, K);
    st.reset_checkpoint();
    // g1 = x - t y maps to x, g2 = x - tbar y maps to y
    Automorphism<ExtElem> lin = Automorphism<ExtElem>::linear(
        -tbar / det, t / det, ExtElem(Rat(-1)) / det, ExtElem(Rat(1)) / det);
    st.apply(lin);
    int r = 0, s = 0;
    st.td = type_data(SingularityType{Family::Yrs, 0, 5, 5, {}});
    y_elimination_loop(st, mu, r, s);
    if (r != s)
        throw ClassifyError(FailKind::Internal, "conjugate Y indices differ");
    if (2 * r + 1 != mu)
        throw ClassifyError(FailKind::Internal, "Y r,r indices disagree with the Milnor number");
    st.td = type_data(SingularityType{Family::Yrs, 0, r, r, {}});
    st.truncate_weighted(st.td.d_w);

    ExtElem bE = st.current.coeff(2, 2);
    ExtElem dE = st.current.coeff(r, 0), eE = st.current.coeff(0, r);
    if (!bE.is_rational())
        throw ClassifyError(FailKind::Internal, "x^2y^2 coefficient left the rationals");
    Rat b = bE.rat_value();
    if (b == 0 || dE.is_zero() || eE.is_zero())
        throw ClassifyError(FailKind::Degenerate, "Y support coefficient vanished");
    ExtElem deE = dE * eE;
    if (!deE.is_rational())
        throw ClassifyError(FailKind::Internal, "d*e is not conjugation invariant");
    Rat de = deE.rat_value();

    std::vector<NormalFormRecord> out;
    if (split == YSplit::Ytilde) {
        Rat x4 = f.coeff(4, 0);
        if (x4 == 0) throw ClassifyError(FailKind::Internal, "Ytilde germ without x^4 term");
        int sigma = sign_of(x4);
        if (sigma != sign_of(b))
            throw ClassifyError(FailKind::Internal, "Ytilde sign bookkeeping failed");
        SingularityType ty{Family::Ytilde};
        ty.r = r;
        ty.s = r;
        ty.signs = {sigma};
        if (r % 2 == 1) {
            Rat C = rat_pow(de, 4) * rat_pow(16 / b, 2 * r);
            QPoly p = QPoly::monomial(8, Rat(1)) - QPoly::constant(C);
            out.push_back(make_record(ty, p, half_line(+1)));
            out.push_back(make_record(ty, p, half_line(-1)));
        } else {
            Rat C = rat_pow(de, 2) * rat_pow(16 / rat_abs(b), r);
            QPoly p = QPoly::monomial(4, Rat(1)) - QPoly::constant(C);
            // degree-r truncation: the axis restrictions then carry only data on
            // or under the polygon, so the sign test is insensitive to junk
            // above the weighted determinacy
            BiPoly<Rat> fr = f.jet(r);
            QPoly tx = QPoly::constant(Rat(sigma)) + restrict_y0(fr);
            QPoly ty0 = QPoly::constant(Rat(sigma)) + restrict_x0(fr);
            bool has_root = (tx.degree() > 0 && sturm_count(tx, Interval::whole()) > 0) ||
                            (ty0.degree() > 0 && sturm_count(ty0, Interval::whole()) > 0);
            out.push_back(make_record(ty, p, half_line(has_root ? -sigma : sigma)));
        }
        return out;
    }

    // real quadratic extension: Y_{r,r}
    int sigma = sign_of(b);
    auto ytype = [&](int g2) {
        SingularityType ty{Family::Yrs};
        ty.r = r;
        ty.s = r;
        ty.signs = {sigma, g2};
        return ty;
    };
    if (r % 2 == 1) {
        Rat C = rat_pow(rat_abs(b), -static_cast<long>(r)) * de * de;
        QPoly p = QPoly::monomial(2, Rat(1)) - QPoly::constant(C);
        for (int g2 : {+1, -1})
            for (int i : {-1, +1}) out.push_back(make_record(ytype(g2), p, half_line(i)));
        return out;
    }
    Rat mag = rat_pow(rat_abs(b), -static_cast<long>(r) / 2) * de;
    if (de < 0) {
        out.push_back(make_rational_record(ytype(-1), -mag));
        out.push_back(make_rational_record(ytype(+1), mag));
        return out;
    }
    QPoly tx = QPoly::constant(Rat(sigma)) + restrict_y0(f.jet(r));
    if (tx.degree() > 0 && sturm_count(tx, Interval::whole()) > 0)
        out.push_back(make_rational_record(ytype(-sigma), -Rat(sigma) * mag));
    else
        out.push_back(make_rational_record(ytype(sigma), Rat(sigma) * mag));
    return out;
}

}  // namespace

std::vector<NormalFormRecord> classify_Y(const BiPoly<Rat>& f, int mu) {
    BiPoly<Rat> h = f.jet(4);
    BinaryForm bf = analyze_binary_form(h);
    if (bf.pattern != std::vector<int>{2, 2})
        throw ClassifyError(FailKind::Internal, "Y germ without double-double 4-jet");
    YSplit split = split_real_Y(f);

    // rational double lines?
    std::vector<LinForm> lines;
    if (bf.y_mult == 2) lines.push_back({Rat(0), Rat(1)});
    for (const auto& [g, m] : bf.factors)
        if (m == 2 && g.degree() == 1) lines.push_back({Rat(1), g.coeff(0)});
    if (lines.size() == 2) {
        if (split != YSplit::YrsReal)
            throw ClassifyError(FailKind::Internal, "rational double lines but no real roots");
        return classify_Y_rational(f, mu, lines[0], lines[1]);
    }
    // irreducible quadratic squared
    for (const auto& [g, m] : bf.factors)
        if (m == 2 && g.degree() == 2) return classify_Y_extension(f, mu, g, split);
    throw ClassifyError(FailKind::Internal, "Y 4-jet factorization shape not recognized");
}

// ---------------------------------------------------------------------------
// top level
// ---------------------------------------------------------------------------

std::vector<NormalFormRecord> classify(const BiPoly<Rat>& f_in, Diagnostics* diag) {
    if (f_in.is_zero()) throw ClassifyError(FailKind::NotIsolated, "zero polynomial");
    if (f_in.coeff(0, 0) != 0)
        throw ClassifyError(FailKind::NotSingular, "nonzero constant term: f(0,0) != 0");
    if (f_in.coeff(1, 0) != 0 || f_in.coeff(0, 1) != 0)
        throw ClassifyError(FailKind::NotSingular, "nonzero linear part: the origin is regular");
    int cr = corank(f_in);
    if (diag) diag->corank = cr;
    if (cr < 2)
        throw ClassifyError(FailKind::NotCorank2,
                            "corank " + std::to_string(cr) + " germ (A/D/E splitting applies)");
    auto mu_opt = milnor_number(f_in);
    if (!mu_opt) throw ClassifyError(FailKind::NotIsolated, "non-isolated singularity");
    int mu = *mu_opt;
    if (diag) diag->mu = mu;

    BiPoly<Rat> f = f_in.jet(mu + 2);
    SingularityType main = detect_main_type(f, mu);

    std::vector<NormalFormRecord> recs;
    switch (main.fam) {
        case Family::E12:
        case Family::E13:
        case Family::E14:
        case Family::Z11:
        case Family::Z12:
        case Family::Z13:
        case Family::W12:
        case Family::W13:
            recs = classify_exceptional(normalize_low_jet_exceptional(f, type_data(main)));
            break;
        case Family::J10:
            recs = classify_J10(normalize_low_jet_exceptional(f, type_data(main)));
            break;
        case Family::X9:
            recs = classify_X9(f);
            break;
        case Family::X9k:
            recs = classify_X9k_J10k(normalize_low_jet_X9k(f, type_data(main)));
            break;
        case Family::J10k: {
            PipelineState st = normalize_low_jet_exceptional(f, type_data(main));
            kill_double_root_J10k(st);
            recs = classify_X9k_J10k(std::move(st));
            break;
        }
        case Family::Yrs:
        case Family::Ytilde:
            recs = classify_Y(f, mu);
            break;
    }

    guard_restrictions(recs);
    sort_records(recs);
    if (diag && !recs.empty()) {
        const SingularityType& t = recs.front().subtype;
        switch (t.fam) {
            case Family::Ytilde:
                diag->complex_type =
                    "Y" + std::to_string(t.r) + "," + std::to_string(t.r);
                break;
            default: {
                SingularityType bare = t;
                bare.signs.clear();
                diag->complex_type = bare.label();
            }
        }
    }
    return recs;
}

bool records_equivalent(const NormalFormRecord& a, const NormalFormRecord& b) {
    return a.subtype == b.subtype && same_root(a.parameter, b.parameter);
}

}  // namespace realnf
