#include <doctest.h>

#include "realnf/groebner.hpp"

using namespace realnf;

namespace {

MPoly mono(int nv, std::vector<int> e, long c = 1) {
    MPoly p(nv);
    p.add_term(e, Rat(c));
    return p;
}

}  // namespace

TEST_CASE("monomial ideal is its own basis") {
    // {x^2, xy, y^2}
    std::vector<MPoly> gens = {mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})};
    auto gb = groebner_basis(gens, TermOrder::Lex);
    CHECK(gb.size() == 3);
}

TEST_CASE("substitution ideal") {
    // {x - 1, x y - 1} contains y - 1
    MPoly f = mono(2, {1, 0}) - mono(2, {0, 0});
    MPoly g = mono(2, {1, 1}) - mono(2, {0, 0});
    auto gb = groebner_basis({f, g}, TermOrder::Lex);
    MPoly target = mono(2, {0, 1}) - mono(2, {0, 0});
    CHECK(normal_form(target, gb, TermOrder::Lex).is_zero());
}

TEST_CASE("elimination to a univariate polynomial") {
    // {x^2 + y^2 - 1, x - y} eliminates to 2y^2 - 1
    MPoly f = mono(2, {2, 0}) + mono(2, {0, 2}) - mono(2, {0, 0});
    MPoly g = mono(2, {1, 0}) - mono(2, {0, 1});
    auto gb = groebner_basis({f, g}, TermOrder::Lex);
    MPoly target = mono(2, {0, 2}, 2) - mono(2, {0, 0});
    CHECK(normal_form(target, gb, TermOrder::Lex).is_zero());
    // two real points on the line-circle intersection
    CHECK(count_real_points(gb, TermOrder::Lex, MPoly::constant(2, Rat(1))) == 2);
}

TEST_CASE("real point counting with weights") {
    // V = {x = +-1, y = x} from {x^2 - 1, y - x}
    MPoly f = mono(2, {2, 0}) - mono(2, {0, 0});
    MPoly g = mono(2, {0, 1}) - mono(2, {1, 0});
    auto gb = groebner_basis({f, g}, TermOrder::Lex);
    CHECK(count_real_points(gb, TermOrder::Lex, MPoly::constant(2, Rat(1))) == 2);
    // weight x > 0 counts only the point (1, 1)
    CHECK(count_real_points(gb, TermOrder::Lex, mono(2, {1, 0})) == 1);

    // no real points on x^2 + 1 = 0
    MPoly h = mono(1, {2}) + mono(1, {0});
    auto gb2 = groebner_basis({h}, TermOrder::Lex);
    CHECK(count_real_points(gb2, TermOrder::Lex, MPoly::constant(1, Rat(1))) == 0);

    // multiplicity does not inflate the count: (x - 1)^2
    MPoly sq = mono(1, {2}) - mono(1, {1}, 2) + mono(1, {0});
    auto gb3 = groebner_basis({sq}, TermOrder::Lex);
    CHECK(count_real_points(gb3, TermOrder::Lex, MPoly::constant(1, Rat(1))) == 1);
}

TEST_CASE("degrevlex order also works") {
    MPoly f = mono(2, {2, 0}) + mono(2, {0, 2}) - mono(2, {0, 0});
    MPoly g = mono(2, {1, 0}) - mono(2, {0, 1});
    auto gb = groebner_basis({f, g}, TermOrder::DegRevLex);
    CHECK(count_real_points(gb, TermOrder::DegRevLex, MPoly::constant(2, Rat(1))) == 2);
}
