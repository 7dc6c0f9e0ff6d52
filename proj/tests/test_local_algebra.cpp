#include <doctest.h>

#include "oracles.hpp"
#include "realnf/localalg.hpp"
#include "realnf/newton.hpp"
#include "realnf/parser.hpp"

using namespace realnf;

namespace {
BiPoly<Rat> P(const std::string& s) { return parse_polynomial(s); }
}

TEST_CASE("corank") {
    CHECK(corank(P("x^2+y^5")) == 1);
    CHECK(corank(P("x^3+y^4")) == 2);
    CHECK(corank(P("x^2+y^2")) == 0);
    CHECK(corank(P("x*y")) == 0);
    CHECK_THROWS(corank(P("x+y^2")));
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(P("x^3+y^8")) == 14);
    CHECK(milnor_number(P("x^2*y^2+x^5+y^5")) == 11);
    CHECK(!milnor_number(P("x^2*y^2")).has_value());
    CHECK(milnor_number(P("x^2*y^2+x^5+y^5")) ==
          oracles::truncated_quotient_dim(P("x^2*y^2+x^5+y^5"), 13));
}

TEST_CASE("Brieskorn grid") {
    for (int p = 2; p <= 9; ++p)
        for (int q = 2; q <= 9; ++q) {
            BiPoly<Rat> f = BiPoly<Rat>::monomial(p, 0, Rat(1)) +
                            BiPoly<Rat>::monomial(0, q, Rat(1));
            auto mu = milnor_number(f);
            REQUIRE(mu.has_value());
            CHECK(*mu == (p - 1) * (q - 1));
        }
}

TEST_CASE("milnor is invariant under linear coordinate changes") {
    SplitMix64 rng(5);
    std::vector<BiPoly<Rat>> germs = {P("x^3+y^8"), P("x^3+x*y^4"), P("x^4+x^2*y^2+y^7"),
                                      P("x^3*y+y^5+x*y^4")};
    for (const auto& f : germs) {
        auto mu0 = milnor_number(f);
        REQUIRE(mu0.has_value());
        int done = 0;
        while (done < 10) {
            Rat a(rng.range(-3, 3)), b(rng.range(-3, 3)), c(rng.range(-3, 3)),
                d(rng.range(-3, 3));
            if (a * d - b * c == 0) continue;
            ++done;
            auto g = apply_substitution(f, Automorphism<Rat>::linear(a, b, c, d));
            CHECK(milnor_number(g) == mu0);
        }
    }
}

TEST_CASE("Table-1 Milnor numbers match type subscripts") {
    auto mu_of = [](const SingularityType& t, const Rat& a) {
        auto m = milnor_number(normal_form_poly(t, a));
        REQUIRE(m.has_value());
        return *m;
    };
    SingularityType e12{Family::E12};
    CHECK(mu_of(e12, Rat(1)) == 12);
    SingularityType z13{Family::Z13};
    z13.signs = {1};
    CHECK(mu_of(z13, Rat(2)) == 13);
    SingularityType w12{Family::W12};
    w12.signs = {-1};
    CHECK(mu_of(w12, Rat(1)) == 12);
    SingularityType x12{Family::X9k};
    x12.k = 3;
    x12.signs = {1, 1};
    CHECK(mu_of(x12, Rat(1)) == 12);
    SingularityType j11{Family::J10k};
    j11.k = 1;
    j11.signs = {1};
    CHECK(mu_of(j11, Rat(-2)) == 11);
    SingularityType y56{Family::Yrs};
    y56.r = 5;
    y56.s = 6;
    y56.signs = {1, 1};
    CHECK(mu_of(y56, Rat(1)) == 12);
    SingularityType yt5{Family::Ytilde};
    yt5.r = 5;
    yt5.signs = {1};
    CHECK(mu_of(yt5, Rat(1)) == 11);
    SingularityType x9{Family::X9};
    x9.signs = {1, 1};
    CHECK(mu_of(x9, Rat(0)) == 9);
    SingularityType j10{Family::J10};
    j10.signs = {1};
    CHECK(mu_of(j10, Rat(1)) == 10);
    // corank of the normal forms is 2
    CHECK(corank(normal_form_poly(y56, Rat(1))) == 2);
    CHECK(corank(normal_form_poly(x9, Rat(0))) == 2);
}

TEST_CASE("jacobian term division") {
    BiPoly<Rat> f0 = P("x^3+y^8");
    auto d1 = jacobian_term_division(f0, {2, 3}, Rat(1));
    REQUIRE(d1.has_value());
    CHECK(d1->axis == 'x');
    CHECK(d1->cofactor == P("1/3*y^3"));
    auto d2 = jacobian_term_division(f0, {1, 7}, Rat(1));
    REQUIRE(d2.has_value());
    CHECK(d2->axis == 'y');
    CHECK(d2->cofactor == P("1/8*x"));
    CHECK(!jacobian_term_division(f0, {0, 7}, Rat(1)).has_value());
}

TEST_CASE("graded reduction") {
    BiPoly<Rat> f0 = P("x^3+y^8");
    Weight w{{{8, 3}}};

    BiPoly<Rat> f = f0 + P("5*x^2*y^3");
    GradedReduction gr = reduce_mod_jacobian_graded(f, f0, w, 25, {{1, 6}});
    CHECK(gr.v1 == P("5/3*y^3"));
    CHECK(gr.v2.is_zero());
    CHECK(gr.system_coeffs.empty());

    BiPoly<Rat> g = f0 + P("5*x*y^6");
    GradedReduction gr2 = reduce_mod_jacobian_graded(g, f0, w, 26, {{1, 6}});
    CHECK(gr2.v1.is_zero());
    CHECK(gr2.v2.is_zero());
    REQUIRE(gr2.system_coeffs.size() == 1);
    CHECK(gr2.system_coeffs[0].second == Rat(5));

    BiPoly<Rat> h = f0 + P("x^2*y^6");
    GradedReduction gr3 = reduce_mod_jacobian_graded(h, f0, w, 34, {});
    // re-expansion reproduces the slice
    BiPoly<Rat> expansion = gr3.v1 * f0.derivative_x() + gr3.v2 * f0.derivative_y();
    CHECK(weighted_slice(expansion, w, 34) == P("x^2*y^6"));

    // inconsistent system signals misclassification
    CHECK_THROWS(reduce_mod_jacobian_graded(f0 + P("x*y^6"), f0, w, 26, {}));
}

TEST_CASE("bivariate gcd") {
    BiPoly<Rat> a = P("x^2*y+x*y^2") * P("x-y");
    BiPoly<Rat> b = P("x*y") * P("x-y") * P("x+2*y");
    BiPoly<Rat> g = bivariate_gcd(a, b);
    // gcd is x*y*(x-y) up to a constant
    BiPoly<Rat> expect = P("x*y") * P("x-y");
    BiPoly<Rat> q = g * (expect.terms.begin()->second / g.terms.begin()->second);
    CHECK(q == expect);
}
