#include "realnf/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace realnf {

void MPoly::add_term(const Expv& m, const Rat& v) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (v != 0) terms[m] = v;
    } else {
        it->second += v;
        if (it->second == 0) terms.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, v] : b.terms) r.add_term(m, v);
    return r;
}
MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, v] : b.terms) r.add_term(m, -v);
    return r;
}
MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars);
    Expv m(a.nvars);
    for (const auto& [ma, va] : a.terms)
        for (const auto& [mb, vb] : b.terms) {
            for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, va * vb);
        }
    return r;
}
MPoly operator*(const MPoly& a, const Rat& s) {
    MPoly r(a.nvars);
    if (s == 0) return r;
    for (const auto& [m, v] : a.terms) r.terms[m] = v * s;
    return r;
}

bool term_less(const Expv& a, const Expv& b, TermOrder ord) {
    if (ord == TermOrder::Lex) return a < b;  // map key order is lex already
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

Expv lead_exp(const MPoly& f, TermOrder ord) {
    auto it = f.terms.begin();
    Expv best = it->first;
    for (++it; it != f.terms.end(); ++it)
        if (term_less(best, it->first, ord)) best = it->first;
    return best;
}

bool exp_divides(const Expv& a, const Expv& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expv exp_lcm(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Expv exp_sub(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

MPoly mono_times(const MPoly& f, const Expv& m, const Rat& c) {
    MPoly r(f.nvars);
    Expv e(f.nvars);
    for (const auto& [mf, vf] : f.terms) {
        for (int i = 0; i < f.nvars; ++i) e[i] = mf[i] + m[i];
        r.terms[e] = vf * c;
    }
    return r;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb, TermOrder ord) {
    std::vector<Expv> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(lead_exp(g, ord));
    MPoly rem(f.nvars), p = f;
    while (!p.is_zero()) {
        Expv lt = lead_exp(p, ord);
        Rat lc = p.terms.at(lt);
        bool reduced = false;
        for (size_t k = 0; k < gb.size(); ++k) {
            if (!exp_divides(leads[k], lt)) continue;
            p = p - mono_times(gb[k], exp_sub(lt, leads[k]), lc / gb[k].terms.at(leads[k]));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt, lc);
            p.terms.erase(lt);
        }
    }
    return rem;
}

std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, TermOrder ord) {
    std::vector<MPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g * (Rat(1) / g.terms.at(lead_exp(g, ord))));
    if (basis.empty()) return basis;

    std::vector<Expv> leads;
    for (const auto& g : basis) leads.push_back(lead_exp(g, ord));

    auto spoly = [&](size_t i, size_t j) {
        Expv l = exp_lcm(leads[i], leads[j]);
        MPoly a = mono_times(basis[i], exp_sub(l, leads[i]), Rat(1));
        MPoly b = mono_times(basis[j], exp_sub(l, leads[j]), Rat(1));
        return a - b;  // both monic
    };

    struct Pair {
        size_t i, j;
        long deg;
    };
    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> pending_keys;
    auto push_pair = [&](size_t i, size_t j) {
        Expv l = exp_lcm(leads[i], leads[j]);
        pending.push_back({i, j, std::accumulate(l.begin(), l.end(), 0L)});
        pending_keys.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    int guard = 0;
    while (!pending.empty()) {
        if (++guard > 60000) throw std::runtime_error("groebner_basis: pair cap exceeded");
        // normal selection: smallest lcm degree first
        size_t best = 0;
        for (size_t t = 1; t < pending.size(); ++t)
            if (pending[t].deg < pending[best].deg) best = t;
        auto [i, j, deg] = pending[best];
        pending[best] = pending.back();
        pending.pop_back();
        pending_keys.erase({i, j});

        Expv l = exp_lcm(leads[i], leads[j]);
        // product criterion
        bool coprime = true;
        for (size_t k = 0; k < l.size(); ++k)
            if (std::min(leads[i][k], leads[j][k]) > 0) coprime = false;
        if (coprime) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!exp_divides(leads[k], l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (!pending_keys.count({p1.first, p1.second}) &&
                !pending_keys.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        MPoly h = normal_form(spoly(i, j), basis, ord);
        if (h.is_zero()) continue;
        h = h * (Rat(1) / h.terms.at(lead_exp(h, ord)));
        size_t n = basis.size();
        basis.push_back(h);
        leads.push_back(lead_exp(h, ord));
        for (size_t k = 0; k < n; ++k) push_pair(k, n);
    }

    // inter-reduce and normalize
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        // drop if the lead is reducible by another lead
        Expv li = lead_exp(basis[i], ord);
        bool drop = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (j == i) continue;
            Expv lj = lead_exp(basis[j], ord);
            if (exp_divides(lj, li) && (lj != li || j < i)) {
                drop = true;
                break;
            }
        }
        if (drop) continue;
        MPoly r = normal_form(basis[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r * (Rat(1) / r.terms.at(lead_exp(r, ord))));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return term_less(lead_exp(a, ord), lead_exp(b, ord), ord);
    });
    return reduced;
}

std::vector<Expv> quotient_basis(const std::vector<MPoly>& gb, TermOrder ord, int cap) {
    if (gb.empty()) throw std::invalid_argument("quotient_basis: empty basis");
    int nv = gb[0].nvars;
    std::vector<Expv> leads;
    for (const auto& g : gb) leads.push_back(lead_exp(g, ord));
    // constant in the ideal: empty variety, empty basis
    for (const auto& l : leads)
        if (std::all_of(l.begin(), l.end(), [](int e) { return e == 0; })) return {};
    std::vector<int> bound(nv, -1);
    for (const auto& l : leads) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < nv; ++i)
            if (l[i] > 0) {
                if (nz >= 0) pure = false;
                nz = i;
            }
        if (pure && nz >= 0 && (bound[nz] < 0 || l[nz] < bound[nz])) bound[nz] = l[nz];
    }
    for (int i = 0; i < nv; ++i)
        if (bound[i] < 0)
            throw std::runtime_error("quotient_basis: ideal is not zero-dimensional");

    std::vector<Expv> out;
    Expv cur(nv, 0);
    while (true) {
        bool standard = true;
        for (const auto& l : leads)
            if (exp_divides(l, cur)) {
                standard = false;
                break;
            }
        if (standard) {
            out.push_back(cur);
            if (static_cast<int>(out.size()) > cap)
                throw std::runtime_error("quotient_basis: cap exceeded");
        }
        int i = 0;
        while (i < nv) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == nv) break;
    }
    return out;
}

namespace {

// signature of a symmetric rational matrix by congruence diagonalization
int signature(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            size_t j = i + 1;
            for (; j < n; ++j)
                if (m[j][j] != 0) break;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) break;
                if (j == n) continue;  // zero row and column
                // add row/col j into i: new pivot is 2 m[i][j]
                for (size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
                for (size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
            }
        }
        Rat piv = m[i][i];
        std::vector<Rat> fac(n, Rat(0));
        for (size_t r = i + 1; r < n; ++r) fac[r] = m[r][i] / piv;
        for (size_t r = i + 1; r < n; ++r) {
            if (fac[r] == 0) continue;
            for (size_t c = 0; c < n; ++c) m[r][c] -= fac[r] * m[i][c];
        }
        for (size_t r = i + 1; r < n; ++r) {
            if (fac[r] == 0) continue;
            for (size_t c = 0; c < n; ++c) m[c][r] -= fac[r] * m[c][i];
        }
    }
    int pos = 0, neg = 0;
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i] > 0) ++pos;
        if (m[i][i] < 0) ++neg;
    }
    return pos - neg;
}

}  // namespace

int count_real_points(const std::vector<MPoly>& gb, TermOrder ord, const MPoly& weight) {
    auto basis = quotient_basis(gb, ord);
    size_t d = basis.size();
    if (d == 0) return 0;
    int nv = gb[0].nvars;

    auto coords = [&](const MPoly& f) {
        std::vector<Rat> v(d, Rat(0));
        for (const auto& [m, c] : f.terms) {
            bool found = false;
            for (size_t i = 0; i < d; ++i)
                if (basis[i] == m) {
                    v[i] = c;
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("count_real_points: NF outside quotient basis");
        }
        return v;
    };
    auto mono = [&](const Expv& e) {
        MPoly p(nv);
        p.terms[e] = 1;
        return p;
    };

    // P[i][j] = coordinates of NF(b_i * b_j)
    std::vector<std::vector<std::vector<Rat>>> P(d, std::vector<std::vector<Rat>>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            Expv prod(nv);
            for (int k = 0; k < nv; ++k) prod[k] = basis[i][k] + basis[j][k];
            auto v = coords(normal_form(mono(prod), gb, ord));
            P[i][j] = v;
            if (j != i) P[j][i] = v;
        }

    // trace vector: tau[k] = Tr(multiplication by b_k)
    std::vector<Rat> tau(d, Rat(0));
    for (size_t k = 0; k < d; ++k)
        for (size_t i = 0; i < d; ++i) tau[k] += P[k][i][i];

    auto trace_form_sig = [&](const MPoly& g) {
        // gtau[k] = Tr(multiplication by NF(g * b_k))
        std::vector<Rat> gtau(d, Rat(0));
        for (size_t k = 0; k < d; ++k) {
            auto gv = coords(normal_form(g * mono(basis[k]), gb, ord));
            for (size_t l = 0; l < d; ++l) gtau[k] += gv[l] * tau[l];
        }
        std::vector<std::vector<Rat>> Q(d, std::vector<Rat>(d, Rat(0)));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i; j < d; ++j) {
                Rat s(0);
                for (size_t k = 0; k < d; ++k)
                    if (P[i][j][k] != 0) s += P[i][j][k] * gtau[k];
                Q[i][j] = s;
                Q[j][i] = s;
            }
        return signature(Q);
    };

    bool is_one = weight.terms.size() == 1 && weight.terms.count(Expv(nv, 0)) &&
                  weight.terms.at(Expv(nv, 0)) == 1;
    if (is_one) return trace_form_sig(weight);
    int sig_g = trace_form_sig(weight);
    int sig_g2 = trace_form_sig(weight * weight);
    return (sig_g2 + sig_g) / 2;
}

}  // namespace realnf
