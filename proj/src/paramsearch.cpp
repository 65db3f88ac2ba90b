#include "drinfeld/paramsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

// Polynomials in z over the domain F_{q^s}[t], low degree first, no trailing zeros.
using ZPoly = std::vector<FqPoly>;

void trim(ZPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::size_t zdeg(const ZPoly& a) { return a.size() - 1; }

ZPoly integral(const KPoly& P, FqPoly& denom) {
    denom = common_denominator(P);
    ZPoly out;
    for (const auto& c : P.coeffs())
        out.push_back(c.is_zero() ? FqPoly(P.field()) : c.num() * exact_div(denom, c.den()));
    return out;
}

FqPoly content(const ZPoly& a) {
    FqPoly g(a.front().field());
    for (const auto& x : a)
        if (!x.is_zero()) g = g.is_zero() ? x.monic() : gcd(g, x);
    return g;
}

ZPoly divide_exact(ZPoly a, const FqPoly& d) {
    if (d.is_one()) return a;
    for (auto& x : a)
        if (!x.is_zero()) x = exact_div(x, d);
    return a;
}

// lc(B)^{deg A - deg B + 1} A mod B, with deg A >= deg B.
ZPoly prem(ZPoly R, const ZPoly& B) {
    const FqPoly& l = B.back();
    const std::size_t db = zdeg(B);
    std::size_t e = zdeg(R) - db + 1;
    while (!R.empty() && R.size() - 1 >= db) {
        const FqPoly s = R.back();
        const std::size_t shift = zdeg(R) - db;
        for (auto& x : R) x = l * x;
        for (std::size_t j = 0; j < B.size(); ++j) R[j + shift] = R[j + shift] - s * B[j];
        trim(R);
        --e;
    }
    if (e > 0) {
        const FqPoly le = l.pow(e);
        for (auto& x : R) x = le * x;
    }
    return R;
}

FqPoly negate_if(const FqPoly& x, bool flip) { return flip ? -x : x; }

// Resultant over the domain, subresultant algorithm; inputs nonzero, deg A >= deg B >= 1.
FqPoly resultant_domain(ZPoly A, ZPoly B, bool negate) {
    const FieldPtr field = A.front().field();
    const FqPoly a = content(A), b = content(B);
    FqPoly tfac = a.pow(zdeg(B)) * b.pow(zdeg(A));
    A = divide_exact(std::move(A), a);
    B = divide_exact(std::move(B), b);
    FqPoly g = FqPoly::one(field), h = FqPoly::one(field);
    for (;;) {
        const std::size_t delta = zdeg(A) - zdeg(B);
        if (zdeg(A) % 2 == 1 && zdeg(B) % 2 == 1) negate = !negate;
        ZPoly R = prem(A, B);
        if (R.empty()) return FqPoly(field);
        A = std::move(B);
        B = divide_exact(std::move(R), g * h.pow(delta));
        g = A.back();
        // h <- g^delta / h^{delta - 1}
        h = delta == 0 ? h : exact_div(g.pow(delta), h.pow(delta - 1));
        if (zdeg(B) == 0) break;
    }
    const std::size_t dA = zdeg(A);
    h = dA == 0 ? h : exact_div(B.back().pow(dA), h.pow(dA - 1));
    return negate_if(tfac * h, negate);
}

// Last nonzero term of the subresultant remainder sequence: an associate of the gcd.
ZPoly gcd_domain(ZPoly A, ZPoly B) {
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    const FieldPtr field = A.front().field();
    A = divide_exact(std::move(A), content(A));
    B = divide_exact(std::move(B), content(B));
    FqPoly g = FqPoly::one(field), h = FqPoly::one(field);
    for (;;) {
        if (zdeg(B) == 0) return ZPoly{FqPoly::one(field)};
        const std::size_t delta = zdeg(A) - zdeg(B);
        ZPoly R = prem(A, B);
        if (R.empty()) return divide_exact(B, content(B));
        A = std::move(B);
        B = divide_exact(std::move(R), g * h.pow(delta));
        g = A.back();
        h = delta == 0 ? h : exact_div(g.pow(delta), h.pow(delta - 1));
    }
}

}  // namespace

ParamPoly torsion_param_poly(const FamilyModule& F, const ParamPoly& a, const OperatorPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("torsion_param_poly: f = 0");
    return act(phi_image(F.generic_phi_t(), f), a);
}

ParamPoly common_param_gcd(const ParamPoly& P, const ParamPoly& Q) {
    if (P.is_zero() || Q.is_zero()) throw std::invalid_argument("common_param_gcd: zero input");
    FqPoly dp(P.field()), dq(P.field());
    const ZPoly G = gcd_domain(integral(P, dp), integral(Q, dq));
    std::vector<RatFunc> c;
    for (const auto& x : G) c.emplace_back(x);
    return KPoly(P.field(), std::move(c)).monic();
}

RatFunc common_param_resultant(const ParamPoly& P, const ParamPoly& Q) {
    if (P.is_zero() || Q.is_zero()) throw std::invalid_argument("common_param_resultant: zero input");
    const FieldPtr& field = P.field();
    const std::size_t m = P.deg(), n = Q.deg();
    if (n == 0) return Q.leading().pow(static_cast<std::int64_t>(m));
    if (m == 0) return P.leading().pow(static_cast<std::int64_t>(n));
    FqPoly dp(field), dq(field);
    ZPoly A = integral(P, dp), B = integral(Q, dq);
    // Res(Q, P) = (-1)^{mn} Res(P, Q)
    const bool swapped = m < n;
    if (swapped) std::swap(A, B);
    const FqPoly r = resultant_domain(std::move(A), std::move(B), swapped && (m * n) % 2 == 1);
    // Res(dp P, dq Q) = dp^n dq^m Res(P, Q)
    return RatFunc(r, dp.pow(n) * dq.pow(m));
}

DependenceReport dependence_check(const ParamPoly& a, const ParamPoly& b) {
    DependenceReport out;
    if (a.is_zero()) {
        if (b.is_zero()) out.gamma = a.field() ? a.field()->one() : b.field()->one();
        return out;
    }
    const FieldPtr& field = a.field();
    if (!b.is_zero()) {
        const RatFunc U = a.leading().pow(static_cast<std::int64_t>(b.deg())) /
                          b.leading().pow(static_cast<std::int64_t>(a.deg()));
        out.unit_constant = U.is_constant();
        out.unit = U;
    }
    if (b.is_zero()) {
        out.gamma = field->zero();
        return out;
    }
    if (b.deg() != a.deg()) return out;
    const RatFunc ratio = b.leading() / a.leading();
    if (!ratio.is_constant()) return out;
    const FqElem g = ratio.constant_value();
    if (!g.in_base_field() || !(g * a == b)) return out;
    out.gamma = g;
    return out;
}

RatFunc lambda0(const FamilyModule& F, const RatFunc& a) {
    if (a.is_zero()) throw std::invalid_argument("lambda0: a = 0");
    RatFunc a_qr = a;
    for (std::size_t i = 0; i < F.rank(); ++i) a_qr = a_qr.frobenius();
    return (-(RatFunc::t(F.field()) * a) - a_qr) / a.frobenius();
}

std::string to_string(CaseReport::Tag tag) {
    switch (tag) {
        case CaseReport::Tag::Case1: return "Case1";
        case CaseReport::Tag::Case2a: return "Case2a";
        case CaseReport::Tag::Case2b: return "Case2b";
    }
    return "";
}

CaseReport case_analysis_verify(const FamilyModule& F, const RatFunc& a, const FqElem& gamma) {
    if (!F.is_standard()) throw std::invalid_argument("case analysis applies to the family g_1 = z only");
    if (a.is_zero()) throw std::invalid_argument("case analysis: a = 0");
    if (gamma.in_base_field()) throw std::invalid_argument("case analysis: gamma lies in F_q, the dependent case");
    const FieldPtr& field = F.field();
    const std::uint64_t q = field->q();
    const std::size_t r = F.rank();
    const Rational qr = rational_pow(q, r);

    CaseReport rep;
    rep.lambda0 = lambda0(F, a);
    rep.b = gamma * a;
    const DrinfeldModule phi = specialize(F, rep.lambda0);

    if (a.is_constant()) {
        rep.tag = CaseReport::Tag::Case1;
        rep.place = Place::infinity();
    } else {
        std::vector<Place> cands;
        for (const auto& v : support_places(std::vector<RatFunc>{a})) {
            const LogAbs l = log_abs(a, v);
            if (!l.is_neg_inf() && l.value() > 0) cands.push_back(v);
        }
        // smallest degree first; at equal degree finite places precede infinity
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Place& x, const Place& y) { return x.degree() < y.degree(); });
        rep.place = cands.front();
        // gamma^{q^r} vs gamma^q
        FqElem gqr = gamma;
        for (std::size_t i = 0; i < r; ++i) gqr = gqr.frobenius();
        rep.tag = gqr == gamma.frobenius() ? CaseReport::Tag::Case2b : CaseReport::Tag::Case2a;
    }
    const Place& v = rep.place;

    rep.image = act(phi.phi_t(), rep.b);
    if (rep.tag == CaseReport::Tag::Case2b && !v.is_infinity()) {
        rep.image = act(phi.phi_t(), rep.image);
        rep.steps = 2;
        rep.escape_lower_bound = (qr - q) * log_abs(a, v).value();
    }
    const LogAbs img = log_abs(rep.image, v);
    rep.computed = img.is_neg_inf() ? Rational(-1) : img.value();

    rep.threshold = 0;
    const Rational lt = log_abs(RatFunc::t(field), v).value() / (qr - 1);
    if (lt > rep.threshold) rep.threshold = lt;
    if (!rep.lambda0.is_zero()) {
        const Rational ll = log_abs(rep.lambda0, v).value() / (qr - q);
        if (ll > rep.threshold) rep.threshold = ll;
    }

    rep.non_torsion = !img.is_neg_inf() && rep.computed > rep.threshold;
    if (rep.escape_lower_bound) rep.non_torsion = rep.non_torsion && rep.computed >= *rep.escape_lower_bound;
    return rep;
}

}  // namespace drinfeld
