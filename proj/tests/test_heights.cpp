#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

DrinfeldModule module(const FieldPtr& f, std::initializer_list<const char*> a) {
    std::vector<RatFunc> v;
    for (const char* s : a) v.push_back(K(f, s));
    return DrinfeldModule(f, v);
}

}  // namespace

TEST_CASE("escape radius") {
    const auto f = gf(2);
    CHECK(escape_radius(module(f, {"0"}), Place::infinity()).log_rv == Rational(1, 3));
    CHECK(escape_radius(module(f, {"1+t^2"}), Place::infinity()).log_rv == 1);
    CHECK(escape_radius(module(f, {"t+1"}), place(f, "t")).log_rv == 0);
    // a pole at (t) contributes through the finite place
    CHECK(escape_radius(module(f, {"1/t"}), place(f, "t")).log_rv == Rational(1, 2));
}

TEST_CASE("local heights") {
    const auto f = gf(2);
    const DrinfeldModule phi = module(f, {"0"});
    const LocalOrbit a = local_orbit(phi, Place::infinity(), K(f, "t"));
    CHECK(a.outcome == LocalOrbit::Outcome::Escaped);
    CHECK(a.steps == 0);
    CHECK(a.height.is_exact());
    CHECK(a.height.value == 1);
    CHECK(local_height(phi, place(f, "t+1"), RatFunc(f)).is_exact_zero());
    const LocalOrbit c = local_orbit(phi, place(f, "t"), K(f, "t"));
    CHECK(c.height.is_exact_zero());
    CHECK(c.outcome == LocalOrbit::Outcome::Integral);
}

TEST_CASE("escape exactness at n = 0") {
    Rng rng(31);
    const auto f = gf(3);
    const DrinfeldModule phi = module(f, {"t+1"});
    const Place inf = Place::infinity();
    const Rational rv = escape_radius(phi, inf).log_rv;
    for (int it = 0; it < 20; ++it) {
        const RatFunc x = rng.nonzero_ratfunc(f, 4);
        const Rational l = log_abs(x, inf).value();
        if (l > rv) CHECK(local_height(phi, inf, x).value == l);
    }
}

TEST_CASE("budgeted heights are sound upper bounds") {
    const auto f = gf(2);
    // a point whose orbit at (t) sits in the disk but the data is not (t)-integral
    const DrinfeldModule phi = module(f, {"1/t"});
    const Place v = place(f, "t");
    const RatFunc x = K(f, "1");
    const LocalOrbit full = local_orbit(phi, v, x, HeightBudget{32, 4096});
    if (full.outcome == LocalOrbit::Outcome::Escaped) {
        for (std::size_t b = 0; b < full.steps; ++b) {
            const HeightValue h1 = local_height(phi, v, x, HeightBudget{b, 1u << 20});
            const HeightValue h2 = local_height(phi, v, x, HeightBudget{b + 1, 1u << 20});
            CHECK_FALSE(h1.is_exact());
            CHECK(full.height.value <= h2.value);
            CHECK(full.height.value <= h1.value);
        }
    }
    // exhausted outcomes are reported as bounds, never as exact values
    const HeightValue h = local_height(phi, v, x, HeightBudget{0, 4096});
    if (full.steps > 0) CHECK_FALSE(h.is_exact());
}

TEST_CASE("torsion decisions") {
    const auto f = gf(2);
    const DrinfeldModule phi0 = module(f, {"0"});
    const TorsionCertificate z = is_torsion(phi0, RatFunc(f));
    CHECK(z.is_torsion());
    CHECK(z.annihilator->poly() == P(f, "t"));
    CHECK(verify_certificate(phi0, RatFunc(f), z));

    const DrinfeldModule phi1 = module(f, {"t+1"});
    const TorsionCertificate one = is_torsion(phi1, K(f, "1"));
    CHECK(one.is_torsion());
    CHECK(one.annihilator->poly() == P(f, "t"));
    CHECK(verify_certificate(phi1, K(f, "1"), one));

    const TorsionCertificate nt = is_torsion(phi0, K(f, "t"));
    CHECK_FALSE(nt.is_torsion());
    CHECK(nt.place == Place::infinity());
    CHECK(nt.step == 0);
    CHECK(verify_certificate(phi0, K(f, "t"), nt));

    // a forged certificate is rejected
    TorsionCertificate bad = one;
    bad.annihilator = OperatorPoly(P(f, "t+1"));
    CHECK_FALSE(verify_certificate(phi1, K(f, "1"), bad));
}

TEST_CASE("cycles give t^j (t^k - 1)") {
    // over F_3 with phi_t = t + a tau + tau^2, x = 1 is t-torsion when t + a + 1 = 0
    const auto f = gf(3);
    const DrinfeldModule phi = module(f, {"2*t+2"});
    const TorsionCertificate c = is_torsion(phi, K(f, "1"));
    CHECK(c.is_torsion());
    CHECK(verify_certificate(phi, K(f, "1"), c));
    // over F_4: phi_t(u) = t u + t u^2 + u^4 = t + u
    const auto f4 = gf(2, 1, 2);
    const DrinfeldModule psi(f4, {K(f4, "t")});
    const RatFunc u = K(f4, "u");
    const TorsionCertificate cu = is_torsion(psi, u);
    CHECK(verify_certificate(psi, u, cu));
}

TEST_CASE("canonical heights") {
    const auto f = gf(2);
    const DrinfeldModule phi = module(f, {"0"});
    const HeightValue h = canonical_height(phi, K(f, "t"));
    CHECK(h.is_exact());
    CHECK(h.value == 1);
    const HeightValue h2 = canonical_height(phi, act(phi.phi_t(), K(f, "t")));
    CHECK(h2.is_exact());
    CHECK(h2.value == 4);
    CHECK(canonical_height(module(f, {"t+1"}), K(f, "1")).is_exact_zero());
}

TEST_CASE("functional equation and torsion equivalence on random points") {
    Rng rng(32);
    for (const auto& f : {gf(2), gf(3), gf(2, 1, 2)}) {
        const DrinfeldModule phi(f, {rng.ratfunc(f, 1)});
        const auto qr = rational_pow(f->q(), 2);
        for (int it = 0; it < 12; ++it) {
            const RatFunc x = rng.ratfunc(f, 2);
            const HeightValue h = canonical_height(phi, x);
            const HeightValue hx = canonical_height(phi, act(phi.phi_t(), x));
            if (h.is_exact() && hx.is_exact()) CHECK(hx.value == qr * h.value);
            const TorsionCertificate cert = is_torsion(phi, x);
            CHECK(verify_certificate(phi, x, cert));
            if (h.is_exact()) CHECK(h.is_exact_zero() == cert.is_torsion());
            CHECK(h.lower >= 0);
        }
    }
}
