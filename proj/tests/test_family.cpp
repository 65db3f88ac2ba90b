#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("iterates of the marked point") {
    const auto f = gf(2);
    const FamilyModule F = FamilyModule::standard(f, 2);
    CHECK(iterate_point(F, Z(f, "z"), 1) == Z(f, "t*z+z^3+z^4"));
    CHECK(iterate_point(F, Z(f, "1"), 1) == Z(f, "t+z+1"));
    CHECK(iterate_point(F, Z(f, "z^2+t"), 0) == Z(f, "z^2+t"));
}

TEST_CASE("hypothesis on deg(c)") {
    const auto f = gf(2);
    const FamilyModule F = FamilyModule::standard(f, 2);
    const HypothesisReport h = hypothesis_check(F, Z(f, "z"));
    CHECK(h.holds);
    CHECK(h.threshold == Rational(1, 2));
    CHECK(*h.margin == Rational(1, 2));
    CHECK_FALSE(hypothesis_check(F, Z(f, "t+1")).holds);
    const FamilyModule G(f, 2, {Z(f, "z^3")});
    CHECK_FALSE(hypothesis_check(G, Z(f, "z")).holds);
    CHECK(hypothesis_check(G, Z(f, "z")).threshold == Rational(3, 2));
    CHECK_FALSE(hypothesis_check(F, ParamPoly(f)).holds);
}

TEST_CASE("degree law examples") {
    const auto f = gf(2);
    const FamilyModule F = FamilyModule::standard(f, 2);
    const DegreeLawReport a = degree_law_check(F, Z(f, "z"), 1);
    CHECK(a.holds());
    CHECK(a.degree == Degree(4));
    CHECK(a.leading == K(f, "1"));
    const DegreeLawReport b = degree_law_check(F, Z(f, "z"), 2);
    CHECK(b.holds());
    CHECK(b.degree == Degree(16));
    const DegreeLawReport c = degree_law_check(F, Z(f, "t*z"), 1);
    CHECK(c.holds());
    CHECK(c.degree == Degree(4));
    CHECK(c.leading == K(f, "t^4"));
    CHECK_THROWS_AS(degree_law_check(F, Z(f, "t"), 1), std::invalid_argument);
}

TEST_CASE("degree law on random admissible data") {
    Rng rng(21);
    for (const auto& f : {gf(2), gf(3)}) {
        for (int it = 0; it < 6; ++it) {
            const std::size_t r = 2;
            const ParamPoly g1(f, {rng.ratfunc(f, 1), rng.ratfunc(f, 1)});
            const FamilyModule F(f, r, {g1});
            ParamPoly c(f, {rng.ratfunc(f, 1), rng.nonzero_ratfunc(f, 1)});
            REQUIRE(hypothesis_check(F, c).holds);
            for (std::size_t n = 0; n <= 2; ++n) CHECK(degree_law_check(F, c, n).holds());
        }
    }
}

TEST_CASE("specialization") {
    const auto f = gf(2);
    const FamilyModule F = FamilyModule::standard(f, 2);
    CHECK(specialize(F, RatFunc(f)).phi_t() == OrePoly<RatFunc>(f, {K(f, "t"), RatFunc(f), K(f, "1")}));
    CHECK(specialize(F, K(f, "t+1")).phi_t() == OrePoly<RatFunc>(f, {K(f, "t"), K(f, "t+1"), K(f, "1")}));
    const RatFunc lam = K(f, "t^2");
    CHECK(iterate_point(F, Z(f, "z"), 1).evaluate(lam) == K(f, "t*t^2+t^6+t^8"));
}

TEST_CASE("commuting square, scaling and strict growth") {
    Rng rng(22);
    for (const auto& f : {gf(2), gf(3), gf(2, 1, 2)}) {
        const FamilyModule F(f, 2, {ParamPoly(f, {rng.ratfunc(f, 1), RatFunc::one(f)})});
        const ParamPoly c(f, {rng.ratfunc(f, 1), rng.nonzero_ratfunc(f, 1)});
        for (int it = 0; it < 3; ++it) {
            const RatFunc lam = rng.ratfunc(f, 2);
            const DrinfeldModule phi = specialize(F, lam);
            for (std::size_t n = 0; n <= 2; ++n) {
                const RatFunc lhs = iterate_point(F, c, n).evaluate(lam);
                const RatFunc rhs = act(phi.phi(OperatorPoly(FqPoly::t(f).pow(n))), c.evaluate(lam));
                CHECK(lhs == rhs);
            }
        }
        for (auto code : base_codes(f)) {
            const FqElem g = f->elem(code);
            CHECK(iterate_point(F, g * c, 2) == g * iterate_point(F, c, 2));
        }
        if (hypothesis_check(F, c).holds) {
            std::vector<ParamPoly> its;
            for (std::size_t n = 0; n <= 3 && (f->q() == 2 || n <= 2); ++n) its.push_back(iterate_point(F, c, n));
            for (std::size_t i = 1; i < its.size(); ++i) CHECK(its[i].deg() > its[i - 1].deg());
        }
    }
}

TEST_CASE("family construction checks") {
    const auto f = gf(2);
    CHECK_THROWS(FamilyModule(f, 1, {}));
    CHECK_THROWS(FamilyModule(f, 2, {Z(f, "z"), Z(f, "z")}));
    const FamilyModule F(f, 3, {Z(f, "z")});
    CHECK(F.is_standard());
    CHECK(F.g(0) == Z(f, "t"));
    CHECK(F.g(2).is_zero());
    CHECK_FALSE(FamilyModule(f, 3, {Z(f, "z"), Z(f, "1")}).is_standard());
}
