#include "drinfeld/capacity.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

void require_hypothesis(const FamilyModule& F, const ParamPoly& c) {
    if (!hypothesis_check(F, c).holds) throw std::invalid_argument("c must satisfy deg(c) > max deg(g_i)/(q^r - q^i)");
}

Rational log_or(const RatFunc& x, const Place& v) {
    const LogAbs l = log_abs(x, v);
    if (l.is_neg_inf()) throw std::logic_error("log of zero");
    return l.value();
}

Rational green_from(const ParamPoly& fn, std::size_t m, const Rational& scale, const Place& v, const RatFunc& lambda) {
    const RatFunc y = fn.evaluate(lambda);
    if (y.is_zero()) return 0;
    const Rational l = log_abs(y, v).value();
    return l > 0 ? Rational(l / (scale * static_cast<long>(m))) : Rational(0);
}

void bump(Rational& best, const Rational& cand) {
    if (cand > best) best = cand;
}

}  // namespace

GreenValue green_estimate(const FamilyModule& F, const ParamPoly& c, const Place& v, const RatFunc& lambda,
                          std::size_t n) {
    require_hypothesis(F, c);
    const Rational qr = rational_pow(F.field()->q(), F.rank());
    const ParamPoly fn = iterate_point(F, c, n);
    const ParamPoly fn1 = act(F.generic_phi_t(), fn);
    const Rational scale = rational_pow(F.field()->q(), F.rank() * n);
    GreenValue out;
    out.n = n;
    out.value = green_from(fn, c.deg(), scale, v, lambda);
    out.stabilized = green_from(fn1, c.deg(), scale * qr, v, lambda) == out.value;
    return out;
}

Rational escape_bound_M(const FamilyModule& F, const ParamPoly& c, const Place& v) {
    require_hypothesis(F, c);
    const std::size_t m = c.deg();
    const std::uint64_t q = F.field()->q();
    const std::size_t r = F.rank();
    const Rational qr = rational_pow(q, r);
    const Rational lC = log_or(c.leading(), v);
    Rational best = 0;

    for (std::size_t i = 0; i < r; ++i) {
        const ParamPoly g = F.g(i);
        if (g.is_zero()) continue;
        const std::size_t d = g.deg();
        const Rational lD = log_or(g.leading(), v);
        for (std::size_t j = 0; j < d; ++j) {
            const RatFunc& gj = g.coeffs()[j];
            if (gj.is_zero()) continue;
            bump(best, (log_or(gj, v) - lD) / static_cast<long>(d - j));
        }
        const Rational gap = qr - rational_pow(q, i);
        bump(best, (lD - gap * lC) / (gap * static_cast<long>(m) - static_cast<long>(d)));
    }
    for (std::size_t j = 0; j < m; ++j) {
        const RatFunc& cj = c.coeffs()[j];
        if (cj.is_zero()) continue;
        bump(best, (log_or(cj, v) - lC) / static_cast<long>(m - j));
    }
    bump(best, -lC / static_cast<long>(m));
    return best;
}

Membership membership(const FamilyModule& F, const ParamPoly& c, const Place& v, const RatFunc& lambda,
                      const HeightBudget& budget) {
    require_hypothesis(F, c);
    const DrinfeldModule phi = specialize(F, lambda);
    const LocalOrbit orbit = local_orbit(phi, v, c.evaluate(lambda), budget);
    Membership out;
    out.n = orbit.steps;
    switch (orbit.outcome) {
        case LocalOrbit::Outcome::Escaped: out.kind = Membership::Kind::Out; break;
        case LocalOrbit::Outcome::Cycle:
        case LocalOrbit::Outcome::Integral: out.kind = Membership::Kind::In; break;
        case LocalOrbit::Outcome::Exhausted:
            out.kind = Membership::Kind::Unknown;
            out.bound = orbit.height.value / static_cast<long>(c.deg());
            break;
    }
    return out;
}

RatFunc sample_beyond(const FieldPtr& field, const Place& v, const Rational& bound) {
    // smallest k with k * deg(v) > bound
    const long d = static_cast<long>(v.degree());
    mpz_class k = bound.get_num() / (bound.get_den() * d) + 1;
    if (k < 1) k = 1;
    const auto ku = k.get_ui();
    if (v.is_infinity()) return RatFunc(FqPoly::t(field).pow(ku));
    return RatFunc(FqPoly::one(field), v.poly().pow(ku));
}

CapacityReport capacity_log(const FamilyModule& F, const ParamPoly& c, const Place& v, std::size_t max_n) {
    require_hypothesis(F, c);
    const long m = static_cast<long>(c.deg());
    const Rational lC = log_or(c.leading(), v);
    CapacityReport rep;
    rep.capacity_log = -lC / m;
    rep.escape_bound = escape_bound_M(F, c, v);
    rep.sample = sample_beyond(F.field(), v, rep.escape_bound);
    rep.expected = log_or(rep.sample, v) + lC / m;
    rep.confirmed = true;
    for (std::size_t n = 1; n <= max_n; ++n) {
        rep.green.push_back(green_estimate(F, c, v, rep.sample, n));
        const GreenValue& g = rep.green.back();
        if (!g.stabilized || g.value != rep.expected) rep.confirmed = false;
    }
    return rep;
}

AdelicReport adelic_capacity_log(const FamilyModule& F, const ParamPoly& c) {
    require_hypothesis(F, c);
    const RatFunc C = c.leading();
    AdelicReport rep;
    rep.sum = 0;
    for (const auto& v : support_places(std::vector<RatFunc>{C})) {
        const Rational cl = -log_or(C, v) / static_cast<long>(c.deg());
        rep.terms.emplace_back(v, cl);
        rep.sum += cl;
    }
    std::vector<RatFunc> data(c.coeffs().begin(), c.coeffs().end());
    for (std::size_t i = 0; i < F.rank(); ++i) {
        const ParamPoly gi = F.g(i);
        data.insert(data.end(), gi.coeffs().begin(), gi.coeffs().end());
    }
    for (const auto& v : support_places(data)) {
        bool special = log_or(C, v) != 0;
        for (const auto& x : data) {
            if (x.is_zero()) continue;
            if (log_or(x, v) > 0) special = true;
        }
        if (special) rep.exceptional.push_back(v);
    }
    return rep;
}

HeightValue param_height(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda, const HeightBudget& budget) {
    require_hypothesis(F, c);
    const DrinfeldModule phi = specialize(F, lambda);
    HeightValue h = canonical_height(phi, c.evaluate(lambda), budget);
    const long m = static_cast<long>(c.deg());
    h.value /= m;
    h.lower /= m;
    return h;
}

std::vector<Place> green_places(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda) {
    std::vector<RatFunc> data(c.coeffs().begin(), c.coeffs().end());
    for (std::size_t i = 0; i < F.rank(); ++i) {
        const ParamPoly gi = F.g(i);
        data.insert(data.end(), gi.coeffs().begin(), gi.coeffs().end());
    }
    data.push_back(lambda);
    return support_places(data);
}

std::optional<Rational> green_height_sum(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda,
                                         std::size_t max_n) {
    require_hypothesis(F, c);
    const Rational qr = rational_pow(F.field()->q(), F.rank());
    const auto places = green_places(F, c, lambda);
    std::vector<ParamPoly> iterates{c};
    std::vector<RatFunc> coeffs{RatFunc::t(F.field())};
    for (std::size_t i = 1; i < F.rank(); ++i) coeffs.push_back(F.g(i).evaluate(lambda));
    Rational total = 0;
    for (const auto& v : places) {
        // a zero estimate is final only when the specialized data is v-integral (the unit disk is invariant)
        bool integral = true;
        for (const auto& x : coeffs)
            if (!x.is_zero() && log_or(x, v) > 0) integral = false;
        bool done = false;
        Rational scale = 1;
        for (std::size_t n = 0; n <= max_n && !done; ++n, scale *= qr) {
            while (iterates.size() < n + 2) iterates.push_back(act(F.generic_phi_t(), iterates.back()));
            const Rational a = green_from(iterates[n], c.deg(), scale, v, lambda);
            const Rational b = green_from(iterates[n + 1], c.deg(), scale * qr, v, lambda);
            if (a == b && (a > 0 || integral || iterates[n].evaluate(lambda).is_zero())) {
                total += a;
                done = true;
            }
        }
        if (!done) return std::nullopt;
    }
    return total;
}

}  // namespace drinfeld
