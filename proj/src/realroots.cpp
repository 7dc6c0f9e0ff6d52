#include "realnf/realroots.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace realnf {

// primitive pseudo-remainder sequence over Z: far better coefficient control
// than rational Euclid
QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = primitive_z(a).first.c, v = primitive_z(b).first.c;
    if (u.size() < v.size()) std::swap(u, v);
    auto strip = [](std::vector<Int>& c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        if (c.empty()) return;
        Int cont(0);
        for (const auto& x : c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        if (sgn(c.back()) < 0) cont = -cont;
        for (auto& x : c) x /= cont;
    };
    while (!v.empty() && v.size() > 1) {
        // pseudo-remainder of u by v
        int du = static_cast<int>(u.size()) - 1, dv = static_cast<int>(v.size()) - 1;
        Int mult = int_pow(v.back(), static_cast<unsigned long>(du - dv + 1));
        std::vector<Int> r = u;
        for (auto& x : r) x *= mult;
        for (int k = du; k >= dv; --k) {
            if (r[k] == 0) continue;
            Int q = r[k] / v.back();
            for (int i = 0; i <= dv; ++i) r[k - dv + i] -= q * v[i];
        }
        r.resize(dv);
        strip(r);
        u = std::move(v);
        v = std::move(r);
    }
    if (!v.empty()) return QPoly::constant(Rat(1));  // nonzero constant remainder
    ZPoly z;
    z.c = std::move(u);
    return from_z(z).monic();
}

std::string Interval::str() const {
    std::string s = lo_closed ? "[" : "(";
    s += lo ? rat_str(*lo) : std::string("-inf");
    s += ", ";
    s += hi ? rat_str(*hi) : std::string("+inf");
    s += hi_closed ? "]" : ")";
    return s;
}

// ---------------------------------------------------------------------------
// Sturm chains over Z with content removal
// ---------------------------------------------------------------------------

namespace {

std::vector<ZPoly> sturm_chain(const QPoly& p) {
    std::vector<ZPoly> chain;
    ZPoly p0 = primitive_z(p).first;
    if (p0.c.empty()) throw std::invalid_argument("sturm: zero polynomial");
    chain.push_back(p0);
    ZPoly p1 = primitive_z(from_z(p0).derivative()).first;
    if (p1.c.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        // pseudo-remainder with an even power of lc(b) so the multiplier is positive
        int delta = a.degree() - b.degree() + 1;
        if (delta % 2 == 1) ++delta;
        Int mult = int_pow(b.c.back(), static_cast<unsigned long>(delta));
        std::vector<Int> r(a.c.begin(), a.c.end());
        for (auto& x : r) x *= mult;
        // divide r by b over Z (exact because of the multiplier)
        int db = b.degree();
        for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
            if (r[k] == 0) continue;
            Int q = r[k] / b.c[db];
            for (int i = 0; i <= db; ++i) r[k - db + i] -= q * b.c[i];
        }
        ZPoly rem;
        rem.c.assign(r.begin(), r.begin() + db);
        rem.trim();
        if (rem.c.empty()) break;
        Int cont(0);
        for (const auto& x : rem.c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        for (auto& x : rem.c) x = -(x / cont);
        chain.push_back(rem);
    }
    return chain;
}

int eval_sign(const ZPoly& p, const Rat& x) {
    // sign of p(num/den) = sign of sum p_i num^i den^(d-i)
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Int acc(0), npow(1);
    int d = p.degree();
    std::vector<Int> dpow(d + 1);
    dpow[0] = 1;
    for (int i = 1; i <= d; ++i) dpow[i] = dpow[i - 1] * den;
    for (int i = 0; i <= d; ++i) {
        acc += p.c[i] * npow * dpow[d - i];
        npow *= num;
    }
    return sgn(acc);
}

enum class Place { NegInf, Finite, PosInf };

int sign_at_place(const ZPoly& p, Place pl, const Rat& x) {
    switch (pl) {
        case Place::Finite:
            return eval_sign(p, x);
        case Place::PosInf:
            return sgn(p.c.back());
        case Place::NegInf:
            return p.degree() % 2 == 0 ? sgn(p.c.back()) : -sgn(p.c.back());
    }
    return 0;
}

int variations(const std::vector<ZPoly>& chain, Place pl, const Rat& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at_place(q, pl, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// distinct roots in (a, b], infinite ends handled symbolically
int count_half_open(const std::vector<ZPoly>& chain, Place pa, const Rat& a, Place pb,
                    const Rat& b) {
    return variations(chain, pa, a) - variations(chain, pb, b);
}

Rat cauchy_bound(const ZPoly& p) {
    // 1 + max |a_i| / |a_n|, rounded up to a power of two so that all
    // bisection endpoints are dyadic
    Int mx(0);
    for (const auto& c : p.c) {
        Int a = abs(c);
        if (a > mx) mx = a;
    }
    Rat r = Rat(mx) / Rat(abs(p.c.back())) + 1;
    Int two(2);
    while (two < r) two *= 2;
    return Rat(two);
}

}  // namespace

int sturm_count(const QPoly& p, const Interval& I) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (I.lo && I.hi && (*I.lo > *I.hi)) return 0;
    QPoly q = squarefree_part(p);
    if (I.is_point()) return q.eval(*I.lo) == 0 && I.lo_closed && I.hi_closed ? 1 : 0;
    auto chain = sturm_chain(q);
    Place pa = I.lo ? Place::Finite : Place::NegInf;
    Place pb = I.hi ? Place::Finite : Place::PosInf;
    Rat a = I.lo ? *I.lo : Rat(0);
    Rat b = I.hi ? *I.hi : Rat(0);
    int n = count_half_open(chain, pa, a, pb, b);
    if (I.hi && !I.hi_closed && q.eval(*I.hi) == 0) --n;
    if (I.lo && I.lo_closed && q.eval(*I.lo) == 0) ++n;
    return n;
}

namespace {

// exactly-one-root intervals via bisection; q squarefree
void isolate_rec(const QPoly& q, const std::vector<ZPoly>& chain, const Rat& lo, const Rat& hi,
                 int count, std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1) {
        // shrink until both endpoints are non-roots, then emit closed interval
        Rat a = lo, b = hi;
        if (q.eval(b) == 0) {
            out.push_back(Interval::point(b));
            return;
        }
        while (q.eval(a) == 0) {
            Rat m = (a + b) / 2;
            if (q.eval(m) == 0) {
                out.push_back(Interval::point(m));
                return;
            }
            int c = count_half_open(chain, Place::Finite, a, Place::Finite, m);
            if (c == 1)
                b = m;
            else
                a = m;
        }
        out.push_back(Interval::closed(a, b));
        return;
    }
    Rat m = (lo + hi) / 2;
    int cl = count_half_open(chain, Place::Finite, lo, Place::Finite, m);
    isolate_rec(q, chain, lo, m, cl, out);
    if (q.eval(m) == 0) {
        // root exactly at the midpoint: the left recursion emits it as [m, m]
    }
    isolate_rec(q, chain, m, hi, count - cl, out);
}

// ensure [a, b] with a strictly above the previous interval's upper end
void separate_from_previous(const QPoly& q, const std::vector<ZPoly>& chain, Interval& cur,
                            const Interval& prev) {
    if (!prev.hi || !cur.lo) return;
    while (*cur.lo <= *prev.hi && !cur.is_point()) {
        Rat m = (*cur.lo + *cur.hi) / 2;
        if (q.eval(m) == 0) {
            cur = Interval::point(m);
            return;
        }
        int c = count_half_open(chain, Place::Finite, *cur.lo, Place::Finite, m);
        if (c == 0)
            cur.lo = m;
        else
            cur.hi = m;
    }
}

}  // namespace

std::vector<Interval> isolate_real_roots(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<Interval> out;
    if (p.degree() == 0) return out;
    QPoly q = squarefree_part(p);
    auto chain = sturm_chain(q);
    Rat b = cauchy_bound(chain.front());
    int total = count_half_open(chain, Place::Finite, -b, Place::Finite, b);
    isolate_rec(q, chain, -b, b, total, out);
    for (size_t i = 1; i < out.size(); ++i) separate_from_previous(q, chain, out[i], out[i - 1]);
    return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q: squarefree split, then Zassenhaus on each part
// ---------------------------------------------------------------------------

namespace {

// ----- arithmetic in Fp[x], p a small odd prime, coefficients in [0, p) -----
using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    fp_trim(r);
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, long p) {
    long inv = fp_inv(b.back(), p);
    int db = fp_deg(b);
    for (int k = fp_deg(a); k >= db; --k) {
        if (a[k] == 0) continue;
        long q = a[k] * inv % p;
        for (int i = 0; i <= db; ++i) a[k - db + i] = ((a[k - db + i] - q * b[i]) % p + p) % p;
    }
    fp_trim(a);
    return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, long p) {
    long inv = fp_inv(b.back(), p);
    int db = fp_deg(b);
    FpPoly q;
    if (fp_deg(a) >= db) q.assign(fp_deg(a) - db + 1, 0);
    for (int k = fp_deg(a); k >= db; --k) {
        if (a[k] == 0) continue;
        long f = a[k] * inv % p;
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) a[k - db + i] = ((a[k - db + i] - f * b[i]) % p + p) % p;
    }
    fp_trim(a);
    fp_trim(q);
    return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        long inv = fp_inv(a.back(), p);
        for (auto& x : a) x = x * inv % p;
    }
    return a;
}

FpPoly fp_monic(FpPoly a, long p) {
    if (a.empty()) return a;
    long inv = fp_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& mod, long p) {
    FpPoly r = {1};
    base = fp_mod(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, base, p), mod, p);
        base = fp_mod(fp_mul(base, base, p), mod, p);
        e /= 2;
    }
    return r;
}

FpPoly fp_deriv(const FpPoly& a, long p) {
    FpPoly r;
    if (a.size() <= 1) return r;
    r.resize(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
    fp_trim(r);
    return r;
}

// extended euclid: s*a + t*b = 1 for coprime monic-ish a, b
void fp_bezout(const FpPoly& a, const FpPoly& b, long p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly ns = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly nt = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // r0 = gcd (constant); normalize to 1
    long inv = fp_inv(r0[0], p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    s = s0;
    t = t0;
}

// distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// squarefree monic polynomial mod p
void fp_equal_degree(const FpPoly& f, int d, long p, SplitMix64& rng, std::vector<FpPoly>& out) {
    int n = fp_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int e = (int_pow(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        FpPoly r(n);
        for (auto& x : r) x = static_cast<long>(rng.below(static_cast<std::uint64_t>(p)));
        fp_trim(r);
        if (fp_deg(r) < 1) continue;
        FpPoly g = fp_gcd(f, r, p);
        if (fp_deg(g) > 0 && fp_deg(g) < n) {
            fp_equal_degree(g, d, p, rng, out);
            fp_equal_degree(fp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        FpPoly h = fp_powmod(r, e, f, p);
        h = fp_sub(h, FpPoly{1}, p);
        g = fp_gcd(f, h, p);
        if (fp_deg(g) > 0 && fp_deg(g) < n) {
            fp_equal_degree(g, d, p, rng, out);
            fp_equal_degree(fp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(FpPoly f, long p) {
    std::vector<FpPoly> out;
    f = fp_monic(std::move(f), p);
    SplitMix64 rng(0x5eedULL ^ static_cast<std::uint64_t>(p));
    FpPoly h = {0, 1};  // x
    int d = 0;
    while (fp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Int(p), f, p);
        FpPoly diff = fp_sub(h, FpPoly{0, 1}, p);
        // zero difference: every remaining factor has degree dividing d
        FpPoly g = diff.empty() ? f : fp_gcd(f, diff, p);
        if (fp_deg(g) > 0) {
            fp_equal_degree(g, d, p, rng, out);
            f = fp_divmod(f, g, p).first;
            h = fp_mod(h, f, p);
        }
    }
    if (fp_deg(f) > 0) out.push_back(f);
    return out;
}

// ----- arithmetic on integer polys modulo m (coefficients reduced to [0, m)) -----
using MPolyZ = std::vector<Int>;

void m_trim(MPolyZ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int m_deg(const MPolyZ& a) { return static_cast<int>(a.size()) - 1; }

MPolyZ m_reduce(MPolyZ a, const Int& m) {
    for (auto& x : a) {
        x %= m;
        if (x < 0) x += m;
    }
    m_trim(a);
    return a;
}

MPolyZ m_mul(const MPolyZ& a, const MPolyZ& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    MPolyZ r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return m_reduce(std::move(r), m);
}

MPolyZ m_add(const MPolyZ& a, const MPolyZ& b, const Int& m) {
    MPolyZ r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return m_reduce(std::move(r), m);
}

MPolyZ m_sub(const MPolyZ& a, const MPolyZ& b, const Int& m) {
    MPolyZ r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return m_reduce(std::move(r), m);
}

// division by a monic polynomial mod m
std::pair<MPolyZ, MPolyZ> m_divmod_monic(MPolyZ a, const MPolyZ& b, const Int& m) {
    int db = m_deg(b);
    MPolyZ q;
    if (m_deg(a) >= db) q.assign(m_deg(a) - db + 1, Int(0));
    for (int k = m_deg(a); k >= db; --k) {
        if (a[k] == 0) continue;
        Int f = a[k];
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) {
            a[k - db + i] -= f * b[i];
            a[k - db + i] %= m;
            if (a[k - db + i] < 0) a[k - db + i] += m;
        }
    }
    m_trim(a);
    m_trim(q);
    return {q, a};
}

// one quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m), h monic;
// lifts everything to mod m^2
void hensel_step(const MPolyZ& f, MPolyZ& g, MPolyZ& h, MPolyZ& s, MPolyZ& t, const Int& m) {
    Int m2 = m * m;
    MPolyZ e = m_sub(f, m_mul(g, h, m2), m2);
    auto [q, r] = m_divmod_monic(m_mul(s, e, m2), h, m2);
    MPolyZ g1 = m_add(g, m_add(m_mul(t, e, m2), m_mul(q, g, m2), m2), m2);
    MPolyZ h1 = m_add(h, r, m2);
    MPolyZ b = m_sub(m_add(m_mul(s, g1, m2), m_mul(t, h1, m2), m2), MPolyZ{Int(1)}, m2);
    auto [c, d] = m_divmod_monic(m_mul(s, b, m2), h1, m2);
    s = m_sub(s, d, m2);
    t = m_sub(t, m_add(m_mul(t, b, m2), m_mul(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
}

MPolyZ from_fp(const FpPoly& a) {
    MPolyZ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

// lift the factorization f = lc(f) * prod(facs) (mod p) to mod p^K >= bound;
// returns the lifted monic factors and the modulus
std::pair<std::vector<MPolyZ>, Int> hensel_lift_tree(const MPolyZ& f, std::vector<FpPoly> facs,
                                                     long p, const Int& bound) {
    Int modulus(p);
    while (modulus <= bound) modulus *= modulus;

    struct Lifter {
        long p;
        Int target;
        // lifts target factorization of fcur (== lc * prod facs mod p^k for all k) recursively
        std::vector<MPolyZ> lift(const MPolyZ& fcur, const std::vector<FpPoly>& fs) {
            if (fs.size() == 1) {
                // monic version of fcur mod target
                Int lead = fcur.back();
                Int inv;
                mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), target.get_mpz_t());
                MPolyZ r = fcur;
                for (auto& x : r) {
                    x = x * inv % target;
                    if (x < 0) x += target;
                }
                return {r};
            }
            size_t half = fs.size() / 2;
            std::vector<FpPoly> left(fs.begin(), fs.begin() + half);
            std::vector<FpPoly> right(fs.begin() + half, fs.end());
            // g0 = lc * prod(left) mod p, h0 = prod(right) mod p (monic)
            FpPoly g0 = {static_cast<long>(mpz_fdiv_ui(fcur.back().get_mpz_t(),
                                                       static_cast<unsigned long>(p)))};
            for (const auto& q : left) g0 = fp_mul(g0, q, p);
            FpPoly h0 = {1};
            for (const auto& q : right) h0 = fp_mul(h0, q, p);
            FpPoly s0, t0;
            fp_bezout(g0, h0, p, s0, t0);
            MPolyZ g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
            Int m(p);
            while (m < target) {
                hensel_step(m_reduce(fcur, m * m), g, h, s, t, m);
                m *= m;
            }
            g = m_reduce(std::move(g), target);
            h = m_reduce(std::move(h), target);
            auto lg = lift(g, left);
            auto lh = lift(h, right);
            lg.insert(lg.end(), lh.begin(), lh.end());
            return lg;
        }
    } lifter{p, modulus};

    auto lifted = lifter.lift(m_reduce(f, modulus), facs);
    return {lifted, modulus};
}

Int sym_mod(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    if (2 * x > m) x -= m;
    return x;
}

// exact division test over Z; returns quotient if divisible
bool z_divides(const std::vector<Int>& num, const std::vector<Int>& den, std::vector<Int>& quot) {
    if (den.empty()) return false;
    std::vector<Int> r = num;
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(r.size()) - 1;
    if (dn < dd) return false;
    quot.assign(dn - dd + 1, Int(0));
    for (int k = dn; k >= dd; --k) {
        if (r[k] == 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), den[dd].get_mpz_t());
        if (rem != 0) return false;
        quot[k - dd] = q;
        for (int i = 0; i <= dd; ++i) r[k - dd + i] -= q * den[i];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

std::vector<Int> z_primitive(std::vector<Int> v) {
    Int cont(0);
    for (const auto& x : v) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
    if (cont == 0) return v;
    if (sgn(v.back()) < 0) cont = -cont;
    for (auto& x : v) x /= cont;
    return v;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial
std::vector<QPoly> factor_squarefree_z(const ZPoly& g) {
    std::vector<QPoly> out;
    int n = g.degree();
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(from_z(g).monic());
        return out;
    }

    // pick a prime keeping the reduction squarefree with the same degree
    static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                   47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    long p = 0;
    FpPoly fp;
    for (long cand : kPrimes) {
        if (mpz_fdiv_ui(g.c.back().get_mpz_t(), static_cast<unsigned long>(cand)) == 0) continue;
        FpPoly r(g.c.size());
        for (size_t i = 0; i < g.c.size(); ++i)
            r[i] = static_cast<long>(
                mpz_fdiv_ui(g.c[i].get_mpz_t(), static_cast<unsigned long>(cand)));
        fp_trim(r);
        FpPoly d = fp_deriv(r, cand);
        if (d.empty()) continue;
        FpPoly gg = fp_gcd(r, d, cand);
        if (fp_deg(gg) == 0) {
            p = cand;
            fp = r;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("factor: no suitable small prime found");

    auto modular = fp_factor_squarefree(fp, p);
    if (modular.size() == 1) {
        out.push_back(from_z(g).monic());
        return out;
    }

    // coefficient bound: 2^n * (n+1) * max|coeff| * |lc|, with margin
    Int maxc(0);
    for (const auto& c : g.c) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int bound = int_pow(Int(2), static_cast<unsigned long>(n + 2)) * Int(n + 1) * maxc *
                abs(g.c.back());

    MPolyZ f(g.c.begin(), g.c.end());
    auto [lifted, modulus] = hensel_lift_tree(f, modular, p, 2 * bound);

    // subset recombination
    std::vector<MPolyZ> pool = lifted;
    std::vector<Int> rem(g.c.begin(), g.c.end());
    bool changed = true;
    size_t card = 1;
    while (2 * card <= pool.size()) {
        // iterate over subsets of the given cardinality
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        changed = false;
        while (true) {
            // candidate = lc * prod(pool[idx]) mod modulus, symmetric lift
            MPolyZ cand = {rem.back() % modulus};
            for (size_t i : idx) cand = m_mul(cand, pool[i], modulus);
            std::vector<Int> c2(cand.size());
            for (size_t i = 0; i < cand.size(); ++i) c2[i] = sym_mod(cand[i], modulus);
            c2 = z_primitive(std::move(c2));
            std::vector<Int> quot;
            if (!c2.empty() && z_divides(rem, c2, quot)) {
                out.push_back(from_z(ZPoly{c2}).monic());
                rem = z_primitive(std::move(quot));
                std::vector<MPolyZ> np;
                for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                changed = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!changed) ++card;
    }
    if (static_cast<int>(rem.size()) - 1 > 0) out.push_back(from_z(ZPoly{rem}).monic());
    return out;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's squarefree decomposition
    QPoly f = p.monic();
    QPoly fp_ = f.derivative();
    QPoly a = gcd(f, fp_);
    QPoly b = f / a, c = fp_ / a, d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        QPoly g = gcd(b, d);
        if (g.degree() > 0) {
            auto [zp, _] = primitive_z(g);
            for (auto& irr : factor_squarefree_z(zp)) out.emplace_back(irr, mult);
        }
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++mult;
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.c < y.first.c;
    });
    return out;
}

// ---------------------------------------------------------------------------
// minimal polynomial with designated root
// ---------------------------------------------------------------------------

namespace {

// refine an isolating interval J of the simple root of irreducible g until it
// is contained in I and has non-root endpoints (or is a point)
Interval refine_into(const QPoly& g, Interval J, const Interval& I) {
    // a root exactly on a closed endpoint of I is the designated root
    if (I.hi && I.hi_closed && g.eval(*I.hi) == 0) return Interval::point(*I.hi);
    if (I.lo && I.lo_closed && g.eval(*I.lo) == 0) return Interval::point(*I.lo);
    auto ok = [&](const Interval& cur) {
        if (cur.is_point()) return I.contains(*cur.lo);
        if (I.lo && (!cur.lo || *cur.lo < *I.lo)) return false;
        if (I.hi && (!cur.hi || *cur.hi > *I.hi)) return false;
        if (I.lo && *cur.lo == *I.lo && !I.lo_closed) return false;
        if (I.hi && *cur.hi == *I.hi && !I.hi_closed) return false;
        return true;
    };
    int guard = 0;
    while (!ok(J)) {
        if (++guard > 4096) throw std::logic_error("refine_into: no convergence");
        Rat m = (*J.lo + *J.hi) / 2;
        if (g.eval(m) == 0) {
            J = Interval::point(m);
            continue;
        }
        if (sturm_count(g, Interval{J.lo, m, true, true}) == 1)
            J = Interval{J.lo, m, true, true};
        else
            J = Interval{m, J.hi, true, true};
    }
    return J;
}

}  // namespace

AlgebraicNumber minpoly_in_interval(const QPoly& p, const Interval& I) {
    if (p.is_zero()) throw std::invalid_argument("minpoly_in_interval: zero polynomial");
    int total = sturm_count(p, I);
    if (total == 0) throw std::domain_error("minpoly_in_interval: no root in interval");
    if (total > 1) throw std::domain_error("minpoly_in_interval: interval is not isolating");

    auto factors = factor_rational(p);
    for (const auto& [g, mult] : factors) {
        if (sturm_count(g, I) != 1) continue;
        // isolate that root of g and refine into I
        for (Interval J : isolate_real_roots(g)) {
            // does this isolated root lie in I?  intersect and count
            Interval cap = J;
            if (I.lo && (!cap.lo || *I.lo > *cap.lo)) {
                cap.lo = I.lo;
                cap.lo_closed = I.lo_closed;
            }
            if (I.hi && (!cap.hi || *I.hi < *cap.hi)) {
                cap.hi = I.hi;
                cap.hi_closed = I.hi_closed;
            }
            if (cap.lo && cap.hi && *cap.lo > *cap.hi) continue;
            if (sturm_count(g, cap) != 1) continue;
            Interval iso = refine_into(g, J, I);
            AlgebraicNumber a{g, iso};
            if (sturm_count(g, iso) != 1) throw std::logic_error("minpoly: refinement failed");
            return a;
        }
        throw std::logic_error("minpoly_in_interval: lost the designated root");
    }
    throw std::logic_error("minpoly_in_interval: no factor owns the root");
}

void refine_step(AlgebraicNumber& a) {
    if (a.iv.is_point()) return;
    Rat lo = a.iv.lo ? *a.iv.lo : Rat(0), hi = a.iv.hi ? *a.iv.hi : Rat(0);
    Rat m = (lo + hi) / 2;
    if (a.minpoly.eval(m) == 0) {
        a.iv = Interval::point(m);
        return;
    }
    Interval left{lo, m, true, true};
    if (sturm_count(a.minpoly, left) == 1)
        a.iv = left;
    else
        a.iv = Interval{m, hi, true, true};
}

int AlgebraicNumber::sign() const {
    if (minpoly.degree() == 1) return sign_of(rat_value());
    AlgebraicNumber t = *this;
    // irreducible of degree >= 2 has no rational root, so 0 is never an endpoint issue
    while (true) {
        if (t.iv.lo && *t.iv.lo >= 0) return 1;
        if (t.iv.hi && *t.iv.hi <= 0) return -1;
        refine_step(t);
    }
}

bool same_root(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.minpoly != b.minpoly) return false;
    Interval cap = a.iv;
    if (b.iv.lo && (!cap.lo || *b.iv.lo > *cap.lo)) {
        cap.lo = b.iv.lo;
        cap.lo_closed = b.iv.lo_closed;
    }
    if (b.iv.hi && (!cap.hi || *b.iv.hi < *cap.hi)) {
        cap.hi = b.iv.hi;
        cap.hi_closed = b.iv.hi_closed;
    }
    if (cap.lo && cap.hi && *cap.lo > *cap.hi) return false;
    return sturm_count(a.minpoly, cap) == 1;
}

int compare_roots(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        Rat x = a.rat_value(), y = b.rat_value();
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    if (same_root(a, b)) return 0;
    AlgebraicNumber u = a, v = b;
    while (true) {
        if (u.iv.hi && v.iv.lo && *u.iv.hi < *v.iv.lo) return -1;
        if (v.iv.hi && u.iv.lo && *v.iv.hi < *u.iv.lo) return 1;
        if (u.iv.hi && v.iv.lo && *u.iv.hi == *v.iv.lo && !(u.iv.hi_closed && v.iv.lo_closed))
            return -1;
        if (v.iv.hi && u.iv.lo && *v.iv.hi == *u.iv.lo && !(v.iv.hi_closed && u.iv.lo_closed))
            return 1;
        refine_step(u);
        refine_step(v);
    }
}

int sign_at(const QPoly& p, const AlgebraicNumber& a) {
    if (a.is_rational()) return sign_of(p.eval(a.rat_value()));
    // remove any shared factor: a's minpoly is irreducible, so either it divides p
    // (sign 0) or p has constant sign on a sufficiently refined interval
    if (QPoly::divmod(p, a.minpoly).second.is_zero()) return 0;
    AlgebraicNumber t = a;
    while (true) {
        if (t.iv.lo && t.iv.hi && sturm_count(p, Interval::closed(*t.iv.lo, *t.iv.hi)) == 0) {
            int s = sign_of(p.eval(*t.iv.lo));
            if (s != 0) return s;
        }
        refine_step(t);
    }
}

}  // namespace realnf
