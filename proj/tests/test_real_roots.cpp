#include <doctest.h>

#include "realnf/parser.hpp"
#include "realnf/realroots.hpp"

using namespace realnf;

namespace {

QPoly U(std::initializer_list<long> coeffs_ascending) {
    std::vector<Rat> v;
    for (long c : coeffs_ascending) v.emplace_back(c);
    return QPoly(std::move(v));
}

QPoly random_upoly(SplitMix64& rng, int deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    for (int i = 0; i <= deg; ++i) v[i] = Rat(rng.range(-6, 6));
    if (v[deg] == 0) v[deg] = 1;
    return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("sturm counts") {
    CHECK(sturm_count(U({1, 0, 0, 0, 1}), Interval::whole()) == 0);   // x^4 + 1
    CHECK(sturm_count(U({0, -1, 0, 1}), Interval::whole()) == 3);     // s^3 - s
    CHECK(sturm_count(U({-2, 0, 1}), Interval::open(0, 2)) == 1);     // z^2 - 2
    CHECK(sturm_count(U({0, 1}), Interval::point(0)) == 1);           // z at [0,0]
    CHECK(sturm_count(U({0, 1}), Interval::open(0, 1)) == 0);
    CHECK(sturm_count(U({0, 1}), Interval{Rat(0), Rat(1), true, false}) == 1);
    CHECK(sturm_count(U({0, 0, 1}), Interval::whole()) == 1);  // z^2, distinct roots
}

TEST_CASE("isolation") {
    auto iv = isolate_real_roots(U({-2, 0, 1}));
    REQUIRE(iv.size() == 2);
    CHECK(sturm_count(U({-2, 0, 1}), iv[0]) == 1);
    CHECK(sturm_count(U({-2, 0, 1}), iv[1]) == 1);
    CHECK(*iv[0].hi <= *iv[1].lo);

    CHECK(isolate_real_roots(U({1, 0, 1})).empty());  // z^2 + 1

    // z (z-1)^2: squarefree part first, roots 0 and 1
    QPoly p = U({0, 1}) * U({-1, 1}) * U({-1, 1});
    auto iv2 = isolate_real_roots(p);
    REQUIRE(iv2.size() == 2);
    CHECK(iv2[0].contains(0));
    CHECK(iv2[1].contains(1));
}

TEST_CASE("factorization fixtures") {
    // z^12 - 4096
    QPoly p = QPoly::monomial(12, Rat(1)) - QPoly::constant(Rat(4096));
    auto fs = factor_rational(p);
    REQUIRE(fs.size() == 6);
    QPoly prod = QPoly::constant(Rat(1));
    for (const auto& [g, m] : fs) {
        CHECK(m == 1);
        for (int e = 0; e < m; ++e) prod = prod * g;
    }
    CHECK(prod == p);  // monic input: product reproduces exactly
    // expected factor set
    auto has = [&](const QPoly& q) {
        for (const auto& [g, m] : fs)
            if (g == q) return true;
        return false;
    };
    CHECK(has(U({-2, 1})));
    CHECK(has(U({2, 1})));
    CHECK(has(U({4, 0, 1})));
    CHECK(has(U({4, 2, 1})));
    CHECK(has(U({4, -2, 1})));
    CHECK(has(QPoly(std::vector<Rat>{Rat(16), Rat(0), Rat(-4), Rat(0), Rat(1)})));

    auto fs2 = factor_rational(U({0, 0, 1}));  // z^2
    REQUIRE(fs2.size() == 1);
    CHECK(fs2[0].first == U({0, 1}));
    CHECK(fs2[0].second == 2);

    // 25 z^4 - 8136 z^2 + 11664 has the rational roots +-18 and +-6/5, so the
    // irreducible factors are all linear
    QPoly biq(std::vector<Rat>{Rat(11664), Rat(0), Rat(-8136), Rat(0), Rat(25)});
    auto fs3 = factor_rational(biq);
    REQUIRE(fs3.size() == 4);
    QPoly back = QPoly::constant(biq.lc());
    bool found18 = false, found65 = false;
    for (const auto& [g, m] : fs3) {
        back = back * g;
        if (g == U({-18, 1})) found18 = true;
        if (g == QPoly(std::vector<Rat>{Rat(-6, 5), Rat(1)})) found65 = true;
    }
    CHECK(back == biq);
    CHECK(found18);
    CHECK(found65);
}

TEST_CASE("minpoly in interval") {
    QPoly p = QPoly::monomial(12, Rat(1)) - QPoly::constant(Rat(4096));
    AlgebraicNumber a = minpoly_in_interval(p, Interval::right_of(Rat(0), false));
    CHECK(a.minpoly == U({-2, 1}));
    CHECK(a.iv.contains(Rat(2)));

    QPoly biq(std::vector<Rat>{Rat(11664), Rat(0), Rat(-8136), Rat(0), Rat(25)});
    AlgebraicNumber b = minpoly_in_interval(biq, Interval{Rat(0), Rat(2), true, false});
    CHECK(b.minpoly == QPoly(std::vector<Rat>{Rat(-6, 5), Rat(1)}));
    CHECK(b.iv.contains(Rat(6, 5)));

    AlgebraicNumber c = minpoly_in_interval(U({0, 1}), Interval::point(0));
    CHECK(c.minpoly == U({0, 1}));
    CHECK(c.iv.is_point());

    CHECK_THROWS(minpoly_in_interval(U({1, 0, 1}), Interval::whole()));
    CHECK_THROWS(minpoly_in_interval(U({-2, 0, 1}), Interval::whole()));  // two roots
}

TEST_CASE("sturm count equals isolation length on random polynomials") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        QPoly p = random_upoly(rng, 2 + static_cast<int>(rng.below(9)));
        if (p.is_zero()) continue;
        auto ivs = isolate_real_roots(p);
        CHECK(static_cast<int>(ivs.size()) == sturm_count(p, Interval::whole()));
        for (const auto& iv : ivs) CHECK(sturm_count(p, iv) == 1);
        for (size_t i = 1; i < ivs.size(); ++i) {
            bool disjoint = *ivs[i - 1].hi < *ivs[i].lo ||
                            (*ivs[i - 1].hi == *ivs[i].lo &&
                             !(ivs[i - 1].hi_closed && ivs[i].lo_closed));
            CHECK(disjoint);
        }
    }
}

TEST_CASE("factorization reconstructs random products") {
    SplitMix64 rng(99);
    for (int t = 0; t < 40; ++t) {
        QPoly prod = QPoly::constant(Rat(1));
        int nf = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < nf; ++i) prod = prod * random_upoly(rng, 1 + (int)rng.below(4));
        if (prod.degree() < 1) continue;
        auto fs = factor_rational(prod);
        QPoly back = QPoly::constant(prod.lc());
        for (const auto& [g, m] : fs)
            for (int e = 0; e < m; ++e) back = back * g;
        CHECK(back == prod);
        // pairwise coprime, and non-linear factors have no rational root
        for (size_t i = 0; i < fs.size(); ++i) {
            for (size_t j = i + 1; j < fs.size(); ++j)
                CHECK(gcd(fs[i].first, fs[j].first).degree() == 0);
        }
    }
}

TEST_CASE("algebraic number ordering and signs") {
    QPoly p = U({-2, 0, 1});  // roots +-sqrt(2)
    AlgebraicNumber pos = minpoly_in_interval(p, Interval::right_of(Rat(0), false));
    AlgebraicNumber neg = minpoly_in_interval(p, Interval::left_of(Rat(0), false));
    CHECK(pos.sign() == 1);
    CHECK(neg.sign() == -1);
    CHECK(compare_roots(neg, pos) == -1);
    CHECK(same_root(pos, pos));
    CHECK(!same_root(pos, neg));
    CHECK(sign_at(U({-1, 1}), pos) == 1);   // sqrt(2) > 1
    CHECK(sign_at(U({-2, 1}), pos) == -1);  // sqrt(2) < 2
    CHECK(sign_at(p, pos) == 0);
}

TEST_CASE("refinement keeps a sign change around simple roots") {
    QPoly p = U({-2, 0, 1});
    AlgebraicNumber a = minpoly_in_interval(p, Interval::right_of(Rat(0), false));
    for (int i = 0; i < 6; ++i) {
        if (a.iv.is_point()) break;
        CHECK(sign_of(a.minpoly.eval(*a.iv.lo)) * sign_of(a.minpoly.eval(*a.iv.hi)) < 0);
        refine_step(a);
    }
}
