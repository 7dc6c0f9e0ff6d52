#include "realnf/newton.hpp"

#include <numeric>
#include <stdexcept>

namespace realnf {

std::string family_name(Family f) {
    switch (f) {
        case Family::E12: return "E12";
        case Family::E13: return "E13";
        case Family::E14: return "E14";
        case Family::Z11: return "Z11";
        case Family::Z12: return "Z12";
        case Family::Z13: return "Z13";
        case Family::W12: return "W12";
        case Family::W13: return "W13";
        case Family::X9: return "X9";
        case Family::J10: return "J10";
        case Family::X9k: return "X9k";
        case Family::J10k: return "J10k";
        case Family::Yrs: return "Yrs";
        case Family::Ytilde: return "Ytilde";
    }
    return "?";
}

std::string SingularityType::label() const {
    std::string base;
    switch (fam) {
        case Family::X9k: base = "X" + std::to_string(9 + k); break;
        case Family::J10k: base = "J" + std::to_string(10 + k); break;
        case Family::Yrs: base = "Y" + std::to_string(r) + "," + std::to_string(s); break;
        case Family::Ytilde: base = "Ytilde" + std::to_string(r); break;
        default: base = family_name(fam); break;
    }
    for (int s_ : signs) base += (s_ > 0 ? "+" : "-");
    return base;
}

namespace {

Weight one_face(long wx, long wy) { return Weight{{{wx, wy}}}; }

// two faces through the listed vertices, ordered by increasing slope, with the
// minimal lambda scaling that makes the piecewise weight constant on the polygon
Weight two_face(Mon v_low_slope_a, Mon v_low_slope_b, Mon v_high_a, Mon v_high_b, long& d_out) {
    auto face = [](Mon p, Mon q) {
        long dx = q.first - p.first, dy = q.second - p.second;
        // slope -wx/wy with wx = |dy|, wy = |dx|
        long wx = dy < 0 ? -dy : dy, wy = dx < 0 ? -dx : dx;
        long g = std::gcd(wx, wy);
        return std::pair<long, long>{wx / g, wy / g};
    };
    auto f1 = face(v_low_slope_a, v_low_slope_b);
    auto f2 = face(v_high_a, v_high_b);
    long d1 = f1.first * v_low_slope_a.first + f1.second * v_low_slope_a.second;
    long d2 = f2.first * v_high_a.first + f2.second * v_high_a.second;
    long d = std::lcm(d1, d2);
    d_out = d;
    return Weight{{{f1.first * (d / d1), f1.second * (d / d1)},
                   {f2.first * (d / d2), f2.second * (d / d2)}}};
}

}  // namespace

TypeData type_data(const SingularityType& t) {
    TypeData td;
    td.type = t;
    td.type.signs.clear();
    switch (t.fam) {
        case Family::E12:
            td.w = one_face(7, 3); td.d_w = 21;
            td.support = {{3, 0}, {0, 7}}; td.moduli = {1, 5}; td.d_moduli = 22;
            td.low_jet_degree = 3; td.sign_arity = 0; td.mu = 12;
            break;
        case Family::E13:
            td.w = one_face(5, 2); td.d_w = 15;
            td.support = {{3, 0}, {1, 5}}; td.moduli = {0, 8}; td.d_moduli = 16;
            td.low_jet_degree = 3; td.sign_arity = 0; td.mu = 13;
            break;
        case Family::E14:
            td.w = one_face(8, 3); td.d_w = 24;
            td.support = {{3, 0}, {0, 8}}; td.moduli = {1, 6}; td.d_moduli = 26;
            td.low_jet_degree = 3; td.sign_arity = 1; td.mu = 14;
            break;
        case Family::Z11:
            td.w = one_face(4, 3); td.d_w = 15;
            td.support = {{3, 1}, {0, 5}}; td.moduli = {1, 4}; td.d_moduli = 16;
            td.low_jet_degree = 4; td.sign_arity = 0; td.mu = 11;
            break;
        case Family::Z12:
            td.w = one_face(3, 2); td.d_w = 11;
            td.support = {{3, 1}, {1, 4}}; td.moduli = {2, 3}; td.d_moduli = 12;
            td.low_jet_degree = 4; td.sign_arity = 0; td.mu = 12;
            break;
        case Family::Z13:
            td.w = one_face(5, 3); td.d_w = 18;
            td.support = {{3, 1}, {0, 6}}; td.moduli = {1, 5}; td.d_moduli = 20;
            td.low_jet_degree = 4; td.sign_arity = 1; td.mu = 13;
            break;
        case Family::W12:
            td.w = one_face(5, 4); td.d_w = 20;
            td.support = {{4, 0}, {0, 5}}; td.moduli = {2, 3}; td.d_moduli = 22;
            td.low_jet_degree = 4; td.sign_arity = 1; td.mu = 12;
            break;
        case Family::W13:
            td.w = one_face(4, 3); td.d_w = 16;
            td.support = {{4, 0}, {1, 4}}; td.moduli = {0, 6}; td.d_moduli = 18;
            td.low_jet_degree = 4; td.sign_arity = 1; td.mu = 13;
            break;
        case Family::X9:
            td.w = one_face(1, 1); td.d_w = 4;
            td.support = {{4, 0}, {0, 4}}; td.moduli = {2, 2}; td.d_moduli = 4;
            td.low_jet_degree = 4; td.sign_arity = 2; td.mu = 9;
            td.restriction = Restriction::ASquaredNot4;
            break;
        case Family::J10:
            td.w = one_face(6, 3); td.d_w = 18;
            td.support = {{3, 0}, {1, 4}}; td.moduli = {2, 2}; td.d_moduli = 18;
            td.low_jet_degree = 3; td.sign_arity = 1; td.mu = 10;
            td.restriction = Restriction::ASquaredNot4;
            break;
        case Family::X9k: {
            if (t.k <= 0) throw std::invalid_argument("type_data: X9k needs k > 0");
            int m = 4 + t.k;
            td.w = two_face({2, 2}, {4, 0}, {2, 2}, {0, m}, td.d_w);
            td.support = {{4, 0}, {2, 2}}; td.moduli = {0, m};
            td.d_moduli = td.d_w;
            td.low_jet_degree = 4; td.sign_arity = 2; td.mu = 9 + t.k;
            td.restriction = Restriction::ANonzero;
            break;
        }
        case Family::J10k: {
            if (t.k <= 0) throw std::invalid_argument("type_data: J10k needs k > 0");
            int m = 6 + t.k;
            td.w = two_face({2, 2}, {3, 0}, {2, 2}, {0, m}, td.d_w);
            td.support = {{3, 0}, {2, 2}}; td.moduli = {0, m};
            td.d_moduli = td.d_w;
            td.low_jet_degree = 3; td.sign_arity = 1; td.mu = 10 + t.k;
            td.restriction = Restriction::ANonzero;
            break;
        }
        case Family::Yrs:
        case Family::Ytilde: {
            int r = t.r, s = (t.fam == Family::Ytilde) ? t.r : t.s;
            if (r <= 4 || s <= 4) throw std::invalid_argument("type_data: Y needs r, s > 4");
            td.w = two_face({2, 2}, {r, 0}, {2, 2}, {0, s}, td.d_w);
            td.support = {{2, 2}, {r, 0}}; td.moduli = {0, s};
            td.d_moduli = td.d_w;
            td.low_jet_degree = 4;
            td.sign_arity = (t.fam == Family::Ytilde) ? 1 : 2;
            td.mu = (t.fam == Family::Ytilde) ? 2 * r + 1 : r + s + 1;
            td.restriction = Restriction::ANonzero;
            break;
        }
    }
    return td;
}

PolygonPos polygon_position(const TypeData& td, const Mon& m) {
    long v = td.w.degree(m.first, m.second);
    if (v < td.d_w) return PolygonPos::Below;
    if (v == td.d_w) return PolygonPos::On;
    return PolygonPos::Above;
}

namespace {

int sig(const SingularityType& t, size_t i) {
    if (i >= t.signs.size()) throw std::invalid_argument("normal form: missing sign decoration");
    return t.signs[i];
}

struct NfTerm {
    int sign;  // +-1, or 0 for the moduli slot
    Mon mon;
};

// ordered term list of the Table-1 normal form; sign 0 marks the a-term
std::vector<NfTerm> nf_terms(const SingularityType& t) {
    switch (t.fam) {
        case Family::E12: return {{1, {3, 0}}, {1, {0, 7}}, {0, {1, 5}}};
        case Family::E13: return {{1, {3, 0}}, {1, {1, 5}}, {0, {0, 8}}};
        case Family::E14: return {{1, {3, 0}}, {sig(t, 0), {0, 8}}, {0, {1, 6}}};
        case Family::Z11: return {{1, {3, 1}}, {1, {0, 5}}, {0, {1, 4}}};
        case Family::Z12: return {{1, {3, 1}}, {1, {1, 4}}, {0, {2, 3}}};
        case Family::Z13: return {{1, {3, 1}}, {sig(t, 0), {0, 6}}, {0, {1, 5}}};
        case Family::W12: return {{sig(t, 0), {4, 0}}, {1, {0, 5}}, {0, {2, 3}}};
        case Family::W13: return {{sig(t, 0), {4, 0}}, {1, {1, 4}}, {0, {0, 6}}};
        case Family::X9: return {{sig(t, 0), {4, 0}}, {0, {2, 2}}, {sig(t, 1), {0, 4}}};
        case Family::J10: return {{1, {3, 0}}, {0, {2, 2}}, {sig(t, 0), {1, 4}}};
        case Family::X9k:
            return {{sig(t, 0), {4, 0}}, {sig(t, 1), {2, 2}}, {0, {0, 4 + t.k}}};
        case Family::J10k: return {{1, {3, 0}}, {sig(t, 0), {2, 2}}, {0, {0, 6 + t.k}}};
        case Family::Yrs:
            return {{sig(t, 0), {2, 2}}, {sig(t, 1), {t.r, 0}}, {0, {0, t.s}}};
        case Family::Ytilde: return {};  // handled separately
    }
    return {};
}

std::string mon_str(const Mon& m) {
    std::string s;
    auto app = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app("x", m.first);
    app("y", m.second);
    return s;
}

}  // namespace

BiPoly<Rat> normal_form_poly(const SingularityType& subtype, const Rat& a) {
    if (subtype.fam == Family::Ytilde) {
        BiPoly<Rat> q = BiPoly<Rat>::monomial(2, 0, Rat(1)) + BiPoly<Rat>::monomial(0, 2, Rat(1));
        BiPoly<Rat> f = (q * q) * Rat(sig(subtype, 0));
        f.add_term(subtype.r, 0, a);
        return f;
    }
    BiPoly<Rat> f;
    for (const auto& t : nf_terms(subtype))
        f.add_term(t.mon.first, t.mon.second, t.sign == 0 ? a : Rat(t.sign));
    return f;
}

std::string normal_form_string(const SingularityType& subtype) {
    if (subtype.fam == Family::Ytilde) {
        std::string s = sig(subtype, 0) > 0 ? "" : "-";
        s += "(x^2+y^2)^2+a*" + mon_str({subtype.r, 0});
        return s;
    }
    std::string out;
    for (const auto& t : nf_terms(subtype)) {
        std::string piece;
        if (t.sign == 0)
            piece = "a*" + mon_str(t.mon);
        else
            piece = mon_str(t.mon);
        if (out.empty()) {
            if (t.sign < 0) out += "-";
        } else {
            out += (t.sign < 0) ? "-" : "+";
        }
        out += piece;
    }
    return out;
}

}  // namespace realnf
