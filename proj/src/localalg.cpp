#include "realnf/localalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "realnf/upoly.hpp"

namespace realnf {

int corank(const BiPoly<Rat>& f) {
    if (f.coeff(0, 0) != 0 || f.coeff(1, 0) != 0 || f.coeff(0, 1) != 0)
        throw std::invalid_argument("corank: nonzero constant or linear part");
    Rat a = 2 * f.coeff(2, 0), b = f.coeff(1, 1), c = 2 * f.coeff(0, 2);
    if (a == 0 && b == 0 && c == 0) return 2;
    if (a * c - b * b != 0) return 0;
    return 1;
}

// ---------------------------------------------------------------------------
// Mora normal form and local standard bases (negative degree ordering)
// ---------------------------------------------------------------------------

namespace {

// local ordering: lower total degree leads; ties broken by higher x exponent
bool local_leads(const Mon& a, const Mon& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first > b.first;
}

Mon lead_mon(const BiPoly<Rat>& f) {
    bool first = true;
    Mon best{0, 0};
    for (const auto& [m, v] : f.terms) {
        if (first || local_leads(m, best)) {
            best = m;
            first = false;
        }
    }
    if (first) throw std::logic_error("lead_mon of zero");
    return best;
}

bool divides(const Mon& a, const Mon& b) { return a.first <= b.first && a.second <= b.second; }

void make_primitive(BiPoly<Rat>& h) {
    if (h.is_zero()) return;
    Int den(1);
    for (const auto& [m, v] : h.terms)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    Int cont(0);
    for (const auto& [m, v] : h.terms) {
        Rat t = v * Rat(den);
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), t.get_num().get_mpz_t());
    }
    Rat scale(den, cont);
    scale.canonicalize();
    h = h * scale;
}

struct MoraEntry {
    BiPoly<Rat> poly;
    Mon lead;
    Rat lc;
    int ecart;
};

MoraEntry make_entry(BiPoly<Rat> p) {
    Mon l = lead_mon(p);
    Rat c = p.coeff(l.first, l.second);
    int e = p.total_degree() - (l.first + l.second);
    return {std::move(p), l, c, e};
}

constexpr int kMoraCap = 200000;
constexpr int kNoBound = 1 << 20;

// Highest-corner style truncation: once pure powers x^px and y^py lie in the
// lead ideal, every monomial of total degree >= px+py is in the lead ideal as
// well, so m^(px+py) is contained in the localized ideal (Nakayama) and terms
// of that degree can be dropped from every polynomial.
BiPoly<Rat> hc_truncate(const BiPoly<Rat>& f, int bound) {
    if (bound >= kNoBound) return f;
    return f.jet(bound - 1);
}

BiPoly<Rat> mora_nf(BiPoly<Rat> h, const std::vector<MoraEntry>& basis, int bound) {
    std::vector<MoraEntry> extra;  // reducers recruited from intermediate results
    int guard = 0;
    h = hc_truncate(std::move(h), bound);
    make_primitive(h);
    while (!h.is_zero()) {
        if (++guard > kMoraCap) throw std::runtime_error("mora_nf: iteration cap exceeded");
        Mon lh = lead_mon(h);
        const MoraEntry* pick = nullptr;
        for (const auto& g : basis)
            if (divides(g.lead, lh) && (!pick || g.ecart < pick->ecart)) pick = &g;
        for (const auto& g : extra)
            if (divides(g.lead, lh) && (!pick || g.ecart < pick->ecart)) pick = &g;
        if (!pick) break;
        int eh = h.total_degree() - (lh.first + lh.second);
        Rat c = h.coeff(lh.first, lh.second) / pick->lc;
        BiPoly<Rat> mult =
            BiPoly<Rat>::monomial(lh.first - pick->lead.first, lh.second - pick->lead.second, c);
        BiPoly<Rat> next = hc_truncate(h - mult * pick->poly, bound);
        if (pick->ecart > eh) extra.push_back(make_entry(h));
        h = std::move(next);
        make_primitive(h);
    }
    return h;
}

std::vector<BiPoly<Rat>> standard_basis(std::vector<BiPoly<Rat>> gens) {
    std::vector<MoraEntry> basis;
    int bound = kNoBound;
    auto refresh_bound = [&]() {
        int px = -1, py = -1;
        for (const auto& e : basis) {
            if (e.lead.second == 0 && (px < 0 || e.lead.first < px)) px = e.lead.first;
            if (e.lead.first == 0 && (py < 0 || e.lead.second < py)) py = e.lead.second;
        }
        if (px < 0 || py < 0) return;
        int nb = px + py;
        if (nb >= bound) return;
        bound = nb;
        for (auto& e : basis) {
            BiPoly<Rat> t = hc_truncate(e.poly, bound);
            if (t.is_zero()) continue;  // lead degree below the bound keeps it nonzero
            e = make_entry(std::move(t));
        }
    };
    for (auto& g : gens)
        if (!g.is_zero()) {
            make_primitive(g);
            basis.push_back(make_entry(std::move(g)));
        }
    refresh_bound();
    struct Pair {
        size_t i, j;
        int deg;
    };
    std::vector<Pair> pairs;
    auto push_pair = [&](size_t i, size_t j) {
        Mon l{std::max(basis[i].lead.first, basis[j].lead.first),
              std::max(basis[i].lead.second, basis[j].lead.second)};
        pairs.push_back({i, j, l.first + l.second});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);
    int guard = 0;
    while (!pairs.empty()) {
        if (++guard > 20000) throw std::runtime_error("standard_basis: pair cap exceeded");
        size_t best = 0;
        for (size_t t = 1; t < pairs.size(); ++t)
            if (pairs[t].deg < pairs[best].deg) best = t;
        auto [i, j, deg] = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        Mon li = basis[i].lead, lj = basis[j].lead;
        // product criterion: coprime lead monomials reduce to zero
        if (std::min(li.first, lj.first) == 0 && std::min(li.second, lj.second) == 0) continue;
        Mon l{std::max(li.first, lj.first), std::max(li.second, lj.second)};
        if (l.first + l.second >= bound) continue;  // s-poly lives below the corner
        BiPoly<Rat> mf = BiPoly<Rat>::monomial(l.first - li.first, l.second - li.second,
                                               Rat(1) / basis[i].lc);
        BiPoly<Rat> mg = BiPoly<Rat>::monomial(l.first - lj.first, l.second - lj.second,
                                               Rat(1) / basis[j].lc);
        BiPoly<Rat> h = mora_nf(mf * basis[i].poly - mg * basis[j].poly, basis, bound);
        if (h.is_zero()) continue;
        make_primitive(h);
        size_t n = basis.size();
        basis.push_back(make_entry(std::move(h)));
        for (size_t k = 0; k < n; ++k) push_pair(k, n);
        refresh_bound();
    }
    std::vector<BiPoly<Rat>> out;
    out.reserve(basis.size());
    for (auto& e : basis) out.push_back(std::move(e.poly));
    return out;
}

// cheap coprimality filter: constant specialized gcds on two generic lines.
// Only used to skip the exact bivariate gcd; a wrong "coprime" verdict is
// harmless because the staircase still detects infinite quotients.
bool likely_coprime(const BiPoly<Rat>& a, const BiPoly<Rat>& b) {
    auto specialize_y = [](const BiPoly<Rat>& f, const Rat& t) {
        std::vector<Rat> c;
        for (const auto& [m, v] : f.terms) {
            if (static_cast<int>(c.size()) <= m.first) c.resize(m.first + 1, Rat(0));
            c[m.first] += v * rat_pow(t, m.second);
        }
        return QPoly(std::move(c));
    };
    auto specialize_x = [](const BiPoly<Rat>& f, const Rat& t) {
        std::vector<Rat> c;
        for (const auto& [m, v] : f.terms) {
            if (static_cast<int>(c.size()) <= m.second) c.resize(m.second + 1, Rat(0));
            c[m.second] += v * rat_pow(t, m.first);
        }
        return QPoly(std::move(c));
    };
    for (const Rat& t : {Rat(7), Rat(-5)}) {
        QPoly ga = specialize_y(a, t), gb = specialize_y(b, t);
        if (!ga.is_zero() && !gb.is_zero() && gcd(ga, gb).degree() == 0) {
            QPoly ha = specialize_x(a, t), hb = specialize_x(b, t);
            if (!ha.is_zero() && !hb.is_zero() && gcd(ha, hb).degree() == 0) return true;
        }
    }
    return false;
}

}  // namespace

BiPoly<Rat> bivariate_gcd(const BiPoly<Rat>& a, const BiPoly<Rat>& b) {
    // primitive PRS in y over the UFD Q[x]
    using YVec = std::vector<QPoly>;  // index = y-exponent, entry in Q[x]
    auto to_vec = [](const BiPoly<Rat>& f) {
        YVec v;
        for (const auto& [m, c] : f.terms) {
            if (static_cast<int>(v.size()) <= m.second) v.resize(m.second + 1);
            v[m.second] = v[m.second] + QPoly::monomial(m.first, c);
        }
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    auto content = [](const YVec& v) {
        QPoly g;
        for (const auto& c : v) g = gcd(g, c);
        return g;
    };
    auto primitive = [&](YVec v) {
        QPoly c = content(v);
        if (c.degree() >= 1)
            for (auto& x : v) x = QPoly::divmod(x, c).first;
        return v;
    };
    auto from_vec = [](const YVec& v) {
        BiPoly<Rat> f;
        for (size_t j = 0; j < v.size(); ++j)
            for (int i = 0; i <= v[j].degree(); ++i)
                f.add_term(i, static_cast<int>(j), v[j].coeff(i));
        return f;
    };
    auto prem = [](const YVec& u, const YVec& w) {
        YVec r = u;
        const QPoly& lcw = w.back();
        int dw = static_cast<int>(w.size()) - 1;
        while (static_cast<int>(r.size()) - 1 >= dw && !r.empty()) {
            int k = static_cast<int>(r.size()) - 1;
            QPoly coef = r[k];
            for (auto& x : r) x = x * lcw;
            for (int i = 0; i <= dw; ++i) r[k - dw + i] = r[k - dw + i] - coef * w[i];
            while (!r.empty() && r.back().is_zero()) r.pop_back();
        }
        return r;
    };

    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    YVec u = to_vec(a), w = to_vec(b);
    QPoly cont = gcd(content(u), content(w));
    u = primitive(std::move(u));
    w = primitive(std::move(w));
    if (u.size() < w.size()) std::swap(u, w);
    while (w.size() > 1) {
        YVec r = prem(u, w);
        u = std::move(w);
        w = primitive(std::move(r));
        if (u.size() < w.size()) std::swap(u, w);
    }
    YVec g;
    if (!w.empty())  // nonzero y-free remainder: primitive parts are coprime in y
        g = {QPoly::constant(Rat(1))};
    else
        g = u;
    if (cont.degree() >= 1)
        for (auto& x : g) x = x * cont;
    return from_vec(g);
}

std::optional<int> milnor_number(const BiPoly<Rat>& f) {
    if (f.coeff(0, 0) != 0) throw std::invalid_argument("milnor_number: f(0,0) != 0");
    BiPoly<Rat> fx = f.derivative_x(), fy = f.derivative_y();
    // f depending on a single variable has a non-isolated critical locus in the plane
    if (fx.is_zero() || fy.is_zero()) return std::nullopt;
    // non-isolatedness pre-test: a common factor vanishing at the origin; the
    // exact gcd runs only when cheap specializations hint at a common factor
    if (!likely_coprime(fx, fy)) {
        BiPoly<Rat> g = bivariate_gcd(fx, fy);
        if (!g.is_zero() && g.total_degree() >= 1 && g.coeff(0, 0) == 0) return std::nullopt;
    }

    auto basis = standard_basis({fx, fy});
    // staircase of lead monomials
    std::vector<Mon> leads;
    for (const auto& b : basis) leads.push_back(lead_mon(b));
    int px = -1, py = -1;  // minimal pure powers in the lead ideal
    for (const auto& m : leads) {
        if (m.second == 0 && (px < 0 || m.first < px)) px = m.first;
        if (m.first == 0 && (py < 0 || m.second < py)) py = m.second;
    }
    if (px < 0 || py < 0) return std::nullopt;
    int count = 0;
    for (int i = 0; i < px; ++i)
        for (int j = 0; j < py; ++j) {
            bool in_ideal = false;
            for (const auto& m : leads)
                if (divides(m, {i, j})) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) ++count;
        }
    return count;
}

std::optional<TermDivision> jacobian_term_division(const BiPoly<Rat>& f0, const Mon& t_mon,
                                                   const Rat& t_coeff) {
    auto lowest_by = [](const BiPoly<Rat>& g, bool by_y) -> std::optional<std::pair<Mon, Rat>> {
        std::optional<std::pair<Mon, Rat>> best;
        for (const auto& [m, v] : g.terms) {
            int key = by_y ? m.second : m.first;
            if (!best || key < (by_y ? best->first.second : best->first.first) ||
                (key == (by_y ? best->first.second : best->first.first) &&
                 local_leads(m, best->first)))
                best = {{m, v}};
        }
        return best;
    };
    BiPoly<Rat> fx = f0.derivative_x(), fy = f0.derivative_y();
    // a proper divisor is required: a constant cofactor would give an affine,
    // non-local substitution
    if (!fx.is_zero()) {
        auto mx = lowest_by(fx, true);  // lowest y-degree term of df0/dx
        if (mx && divides(mx->first, t_mon) && t_mon != mx->first) {
            return TermDivision{'x', BiPoly<Rat>::monomial(t_mon.first - mx->first.first,
                                                           t_mon.second - mx->first.second,
                                                           t_coeff / mx->second)};
        }
    }
    if (!fy.is_zero()) {
        auto my = lowest_by(fy, false);  // lowest x-degree term of df0/dy
        if (my && divides(my->first, t_mon) && t_mon != my->first) {
            return TermDivision{'y', BiPoly<Rat>::monomial(t_mon.first - my->first.first,
                                                           t_mon.second - my->first.second,
                                                           t_coeff / my->second)};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// graded reduction modulo the Jacobian ideal
// ---------------------------------------------------------------------------

namespace {

// all monomials of w-degree exactly d with exponents bounded by cap
std::vector<Mon> monomials_of_wdegree(const Weight& w, long d, int cap = 128) {
    std::vector<Mon> out;
    if (d < 0) return out;
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; j <= cap; ++j)
            if (w.degree(i, j) == d) out.push_back({i, j});
    return out;
}

bool gauss_solve(std::vector<std::vector<Rat>>& A, std::vector<Rat>& b, std::vector<Rat>& x) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<int> where(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && A[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[row]);
        std::swap(b[sel], b[row]);
        Rat inv = 1 / A[row][col];
        for (size_t c = col; c < cols; ++c) A[row][c] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        where[col] = static_cast<int>(row);
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (b[r] != 0) return false;
    x.assign(cols, Rat(0));
    for (size_t c = 0; c < cols; ++c)
        if (where[c] >= 0) x[c] = b[where[c]];
    return true;
}

}  // namespace

GradedReduction reduce_mod_jacobian_graded(const BiPoly<Rat>& f, const BiPoly<Rat>& f0,
                                           const Weight& w, long j,
                                           const std::vector<Mon>& system) {
    BiPoly<Rat> slice = weighted_slice(f, w, j);
    BiPoly<Rat> fx = f0.derivative_x(), fy = f0.derivative_y();

    // the partials of a w-homogeneous f0 are w-homogeneous; pick v-monomial
    // candidates so products land in degree j
    auto wdeg_poly = [&](const BiPoly<Rat>& g) -> long {
        long d = -1;
        for (const auto& [m, v] : g.terms) {
            long dv = w.degree(m.first, m.second);
            if (d < 0 || dv < d) d = dv;
        }
        return d;
    };

    std::vector<Mon> v1cands, v2cands;
    if (!fx.is_zero()) v1cands = monomials_of_wdegree(w, j - wdeg_poly(fx));
    if (!fy.is_zero()) v2cands = monomials_of_wdegree(w, j - wdeg_poly(fy));
    // drop constant candidates: coordinate changes must vanish at the origin
    auto drop_unit = [](std::vector<Mon>& v) {
        v.erase(std::remove(v.begin(), v.end(), Mon{0, 0}), v.end());
    };
    drop_unit(v1cands);
    drop_unit(v2cands);

    // slice monomial row index
    std::vector<Mon> rows;
    auto row_of = [&](const Mon& m) {
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i] == m) return i;
        rows.push_back(m);
        return rows.size() - 1;
    };
    for (const auto& [m, v] : slice.terms) row_of(m);

    auto build = [&](bool with_v2) -> std::optional<GradedReduction> {
        std::vector<std::vector<std::pair<size_t, Rat>>> colpatterns;  // per unknown
        struct ColInfo {
            int kind;  // 0 = v1, 1 = v2, 2 = system
            Mon mon;
        };
        std::vector<ColInfo> cols;
        auto add_product_col = [&](const Mon& vm, const BiPoly<Rat>& part, int kind) {
            std::vector<std::pair<size_t, Rat>> pat;
            for (const auto& [pm, pc] : part.terms) {
                Mon target{vm.first + pm.first, vm.second + pm.second};
                if (w.degree(target.first, target.second) != j) continue;
                pat.emplace_back(row_of(target), pc);
            }
            if (!pat.empty()) {
                colpatterns.push_back(std::move(pat));
                cols.push_back({kind, vm});
            }
        };
        for (const auto& vm : v1cands) add_product_col(vm, fx, 0);
        if (with_v2)
            for (const auto& vm : v2cands) add_product_col(vm, fy, 1);
        for (const auto& sm : system) {
            colpatterns.push_back({{row_of(sm), Rat(1)}});
            cols.push_back({2, sm});
        }
        size_t nrows = rows.size(), ncols = cols.size();
        std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(ncols, Rat(0)));
        std::vector<Rat> b(nrows, Rat(0)), x;
        for (size_t c = 0; c < ncols; ++c)
            for (const auto& [r, v] : colpatterns[c]) A[r][c] += v;
        for (const auto& [m, v] : slice.terms) b[row_of(m)] = v;
        if (!gauss_solve(A, b, x)) return std::nullopt;
        GradedReduction gr;
        for (size_t c = 0; c < ncols; ++c) {
            if (x[c] == 0) continue;
            if (cols[c].kind == 0)
                gr.v1.add_term(cols[c].mon.first, cols[c].mon.second, x[c]);
            else if (cols[c].kind == 1)
                gr.v2.add_term(cols[c].mon.first, cols[c].mon.second, x[c]);
            else
                gr.system_coeffs.emplace_back(cols[c].mon, x[c]);
        }
        return gr;
    };

    if (auto r = build(false)) return *r;
    if (auto r = build(true)) return *r;
    throw std::domain_error("reduce_mod_jacobian_graded: slice not representable");
}

}  // namespace realnf
