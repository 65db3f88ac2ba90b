#include "drinfeld/heights.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace drinfeld {

namespace {

Rational q_power(const DrinfeldModule& phi, std::size_t i) { return rational_pow(phi.field()->q(), i); }

bool integral_data(const DrinfeldModule& phi, const Place& v) {
    for (const auto& c : phi.phi_t().coeffs()) {
        const LogAbs l = log_abs(c, v);
        if (!l.is_neg_inf() && l.value() > 0) return false;
    }
    return true;
}

}  // namespace

EscapeRadius escape_radius(const DrinfeldModule& phi, const Place& v) {
    const std::size_t r = phi.rank();
    const Rational qr = q_power(phi, r);
    const LogAbs lead = log_abs(phi.coefficient(r), v);
    Rational best = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const LogAbs li = log_abs(phi.coefficient(i), v);
        if (li.is_neg_inf()) continue;
        const Rational cand = (li.value() - lead.value()) / (qr - q_power(phi, i));
        if (cand > best) best = cand;
    }
    return {best};
}

Rational escape_envelope(const DrinfeldModule& phi, const Place& v) {
    const Rational rv = escape_radius(phi, v).log_rv;
    std::optional<Rational> best;
    for (std::size_t i = 0; i <= phi.rank(); ++i) {
        const LogAbs li = log_abs(phi.coefficient(i), v);
        if (li.is_neg_inf()) continue;
        Rational cand = li.value() + q_power(phi, i) * rv;
        if (!best || cand > *best) best = cand;
    }
    return best.value_or(Rational(0));
}

LocalOrbit local_orbit(const DrinfeldModule& phi, const Place& v, const RatFunc& x, const HeightBudget& budget) {
    LocalOrbit out;
    out.log_rv = escape_radius(phi, v).log_rv;
    const bool integral = integral_data(phi, v);
    const Rational qr = q_power(phi, phi.rank());
    const std::uint64_t growth = phi.field()->q() == 0 ? 1 : static_cast<std::uint64_t>(qr.get_num().get_ui());
    std::unordered_set<RatFunc, RatFuncHash> visited;
    RatFunc y = x;
    Rational scale = 1;  // q^{rn}
    for (std::size_t n = 0;; ++n) {
        out.steps = n;
        if (y.is_zero()) {
            out.outcome = LocalOrbit::Outcome::Cycle;
            out.height = HeightValue::exact(0);
            return out;
        }
        const Rational l = log_abs(y, v).value();
        if (l > out.log_rv) {
            out.outcome = LocalOrbit::Outcome::Escaped;
            out.height = HeightValue::exact(l / scale);
            return out;
        }
        if (integral && l <= 0) {
            out.outcome = LocalOrbit::Outcome::Integral;
            out.height = HeightValue::exact(0);
            return out;
        }
        if (!visited.insert(y).second) {
            out.outcome = LocalOrbit::Outcome::Cycle;
            out.height = HeightValue::exact(0);
            return out;
        }
        if (n >= budget.iterations || y.size_degree() * growth > budget.max_degree) {
            out.outcome = LocalOrbit::Outcome::Exhausted;
            Rational env = escape_envelope(phi, v);
            if (env < 0) env = 0;
            out.height = HeightValue::upper_bound(env / scale);
            return out;
        }
        y = act(phi.phi_t(), y);
        scale *= qr;
    }
}

HeightValue local_height(const DrinfeldModule& phi, const Place& v, const RatFunc& x, const HeightBudget& budget) {
    return local_orbit(phi, v, x, budget).height;
}

std::vector<Place> height_places(const DrinfeldModule& phi, const RatFunc& x) {
    std::vector<RatFunc> elems = phi.phi_t().coeffs();
    elems.push_back(x);
    return support_places(elems);
}

HeightValue canonical_height(const DrinfeldModule& phi, const RatFunc& x, const HeightBudget& budget) {
    Rational exact_part = 0, slack = 0;
    bool all_exact = true;
    for (const auto& v : height_places(phi, x)) {
        const HeightValue h = local_height(phi, v, x, budget);
        if (h.is_exact()) {
            exact_part += h.value;
        } else {
            all_exact = false;
            exact_part += h.lower;
            slack += h.value - h.lower;
        }
    }
    if (all_exact) return HeightValue::exact(exact_part);
    return HeightValue::upper_bound(exact_part + slack, exact_part);
}

TorsionCertificate is_torsion(const DrinfeldModule& phi, const RatFunc& x, std::size_t max_steps) {
    const FieldPtr& field = phi.field();
    const auto places = height_places(phi, x);
    std::vector<Rational> radii;
    for (const auto& v : places) radii.push_back(escape_radius(phi, v).log_rv);

    TorsionCertificate cert;
    const FqPoly t = FqPoly::t(field);
    std::unordered_map<RatFunc, std::size_t, RatFuncHash> seen;
    RatFunc y = x;
    for (std::size_t n = 0; n <= max_steps; ++n) {
        if (y.is_zero()) {
            cert.kind = TorsionCertificate::Kind::Torsion;
            cert.preperiod = n;
            cert.period = 1;
            cert.annihilator = OperatorPoly(n == 0 ? t : t.pow(n));
            return cert;
        }
        for (std::size_t k = 0; k < places.size(); ++k) {
            const Rational l = log_abs(y, places[k]).value();
            if (l > radii[k]) {
                cert.kind = TorsionCertificate::Kind::NonTorsion;
                cert.place = places[k];
                cert.step = n;
                cert.escape_log = l;
                cert.log_rv = radii[k];
                return cert;
            }
        }
        if (auto it = seen.find(y); it != seen.end()) {
            const std::size_t j = it->second, k = n - j;
            cert.kind = TorsionCertificate::Kind::Torsion;
            cert.preperiod = j;
            cert.period = k;
            cert.annihilator = OperatorPoly(t.pow(j) * (t.pow(k) - FqPoly::one(field)));
            return cert;
        }
        seen.emplace(y, n);
        y = act(phi.phi_t(), y);
    }
    throw std::runtime_error("is_torsion: step limit reached without a cycle or an escape");
}

bool verify_certificate(const DrinfeldModule& phi, const RatFunc& x, const TorsionCertificate& cert) {
    if (cert.is_torsion()) {
        if (!cert.annihilator || cert.annihilator->is_zero()) return false;
        return act(phi.phi(*cert.annihilator), x).is_zero();
    }
    if (!cert.place) return false;
    RatFunc y = x;
    for (std::size_t i = 0; i < cert.step; ++i) y = act(phi.phi_t(), y);
    const LogAbs l = log_abs(y, *cert.place);
    return !l.is_neg_inf() && l.value() == cert.escape_log &&
           cert.escape_log > escape_radius(phi, *cert.place).log_rv;
}

}  // namespace drinfeld
