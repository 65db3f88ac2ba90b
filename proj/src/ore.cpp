#include "drinfeld/ore.hpp"

namespace drinfeld {

DrinfeldModule::DrinfeldModule(const FieldPtr& field, const std::vector<RatFunc>& a) {
    std::vector<RatFunc> c;
    c.reserve(a.size() + 2);
    c.push_back(RatFunc::t(field));
    for (const auto& x : a) c.push_back(x);
    c.push_back(RatFunc::one(field));
    phi_t_ = OrePoly<RatFunc>(field, std::move(c));
}

DrinfeldModule DrinfeldModule::from_ore(const OrePoly<RatFunc>& phi_t) {
    if (phi_t.is_zero() || phi_t.deg() < 1) throw std::invalid_argument("Drinfeld module needs rank at least 1");
    if (!(phi_t.coeff(0) == RatFunc::t(phi_t.field())))
        throw std::invalid_argument("phi_t must have constant term t");
    if (!phi_t.coeffs().back().is_one()) throw std::invalid_argument("phi_t must be monic; conjugate first");
    return DrinfeldModule(phi_t);
}

KPoly kernel_polynomial(const DrinfeldModule& phi, const OperatorPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("kernel_polynomial: f = 0");
    const FieldPtr& field = phi.field();
    const OrePoly<RatFunc> A = phi.phi(f);
    const std::uint64_t q = field->q();
    std::vector<RatFunc> coeffs;
    std::uint64_t exponent = 1;
    for (std::size_t i = 0; i < A.coeffs().size(); ++i) {
        if (coeffs.size() < exponent + 1) coeffs.resize(exponent + 1, RatFunc(field));
        coeffs[exponent] = A.coeffs()[i];
        exponent *= q;
    }
    return KPoly(field, std::move(coeffs));
}

RootSearch torsion_roots_in_K(const DrinfeldModule& phi, const OperatorPoly& f, const RootSearchOptions& options) {
    return rational_roots(kernel_polynomial(phi, f), options);
}

OrePoly<RatFunc> conjugate(const OrePoly<RatFunc>& phi_t, const RatFunc& gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("conjugate: gamma = 0");
    const FieldPtr& field = phi_t.field();
    const RatFunc gamma_inv = gamma.inverse();
    std::vector<RatFunc> out;
    RatFunc power = gamma;  // gamma^{q^i}
    for (std::size_t i = 0; i < phi_t.coeffs().size(); ++i) {
        if (i > 0) power = power.frobenius();
        out.push_back(phi_t.coeffs()[i] * power * gamma_inv);
    }
    return OrePoly<RatFunc>(field, std::move(out));
}

}  // namespace drinfeld
