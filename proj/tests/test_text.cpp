#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("parsing") {
    const auto f = gf(2);
    CHECK(K(f, "(t^2+1)/(t+1)") == K(f, "t+1"));
    CHECK(K(f, "t^-2") == RatFunc::one(f) / K(f, "t^2"));
    CHECK(K(f, "-t") == K(f, "t"));
    CHECK(Z(f, "(z+t)^2") == Z(f, "z^2+t^2"));
    CHECK(Z(f, "z/t") == K(f, "1/t") * Z(f, "z"));
    CHECK(P(f, "3*t") == P(f, "t"));
    const auto f4 = gf(2, 1, 2);
    CHECK(parse_constant("u^2", f4) == parse_constant("u+1", f4));
    CHECK(parse_place("inf", f) == Place::infinity());
    CHECK(parse_place("infinity", f) == Place::infinity());
    CHECK(render(parse_place("t^2+t+1", f)) == "t^2+t+1");
}

TEST_CASE("parse errors carry positions") {
    const auto f = gf(2);
    auto pos = [&](const char* s) {
        try {
            (void)Z(f, s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos("t+") >= 0);
    CHECK(pos("t+*z") == 2);
    CHECK(pos("t)") == 1);
    CHECK(pos("x") == 0);
    CHECK(pos("u") == 0);
    CHECK(pos("1/z") >= 0);
    CHECK(pos("z^-1") >= 0);
    CHECK_THROWS_AS(K(f, "z"), ParseError);
    CHECK_THROWS_AS(K(f, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_place("t^2+1", f), ParseError);
    CHECK_THROWS_AS(parse_place("0", f), ParseError);
}

TEST_CASE("render round trips") {
    Rng rng(61);
    for (const auto& f : {gf(2), gf(3), gf(2, 1, 2), gf(3, 2), gf(5, 1, 2)}) {
        for (int it = 0; it < 25; ++it) {
            const FqElem c = rng.elem(f);
            CHECK(parse_constant(render(c), f) == c);
            const FqPoly p = rng.poly(f, 4);
            CHECK(P(f, render(p)) == p);
            const RatFunc x = rng.ratfunc(f, 3);
            CHECK(K(f, render(x)) == x);
            const KPoly k(f, {rng.ratfunc(f, 2), rng.ratfunc(f, 2), rng.ratfunc(f, 1)});
            CHECK(Z(f, render(k)) == k);
        }
    }
}

TEST_CASE("family strings") {
    const auto f = gf(2);
    const FamilyModule F = parse_family("r=2;g1=z", f);
    CHECK(F.is_standard());
    CHECK(render_family(F) == "r=2;g1=z");
    const FamilyModule G = parse_family("r=3;g1=z;g2=t*z^2+1", f);
    CHECK(G.rank() == 3);
    CHECK(G.g(2) == Z(f, "t*z^2+1"));
    CHECK(parse_family(render_family(G), f).g(2) == G.g(2));
    CHECK_THROWS(parse_family("r=1", f));
    CHECK_THROWS(parse_family("r=2;g2=z", f));
}

TEST_CASE("factored rendering") {
    const auto f = gf(2);
    CHECK(render_factored(K(f, "t^4+t^3")) == "t^3*(t+1)");
    CHECK(render_factored(K(f, "1")) == "1");
    CHECK(render_factored(RatFunc(f)) == "0");
    const std::string s = render_factored(K(f, "t/(t^2+t+1)"));
    CHECK(s.find('/') != std::string::npos);
}
