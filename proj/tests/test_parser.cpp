#include <doctest.h>

#include "realnf/parser.hpp"

using namespace realnf;

TEST_CASE("parser fixtures") {
    BiPoly<Rat> f = parse_polynomial("x^3 + y^8 + 2*x*y^6");
    CHECK(f.coeff(3, 0) == 1);
    CHECK(f.coeff(0, 8) == 1);
    CHECK(f.coeff(1, 6) == 2);

    BiPoly<Rat> g = parse_polynomial("1/3*x^4 - y^4");
    CHECK(g.coeff(4, 0) == Rat(1, 3));
    CHECK(g.coeff(0, 4) == Rat(-1));

    CHECK_THROWS_AS(parse_polynomial("x^3 + z^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x"), ParseError);  // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial("(x+y"), ParseError);

    CHECK(parse_polynomial("-x^2") == -parse_polynomial("x^2"));
    CHECK(parse_polynomial("(x+y)^2") == parse_polynomial("x^2+2*x*y+y^2"));
    CHECK(parse_polynomial("x - - y") == parse_polynomial("x+y"));
}

TEST_CASE("parse of render is the identity") {
    SplitMix64 rng(123);
    for (int t = 0; t < 50; ++t) {
        BiPoly<Rat> f;
        int terms = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < terms; ++i) {
            int a = static_cast<int>(rng.below(7)), b = static_cast<int>(rng.below(7));
            long num = rng.range(-9, 9);
            long den = 1 + static_cast<long>(rng.below(5));
            Rat c(num, den);
            c.canonicalize();
            f.add_term(a, b, c);
        }
        if (f.is_zero()) continue;
        CHECK(parse_polynomial(render_poly(f)) == f);
    }
}
