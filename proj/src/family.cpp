#include "drinfeld/family.hpp"

#include <stdexcept>

namespace drinfeld {

FamilyModule::FamilyModule(FieldPtr field, std::size_t rank, std::vector<ParamPoly> g)
    : field_(std::move(field)), rank_(rank), g_(std::move(g)) {
    if (rank_ < 2) throw std::invalid_argument("family rank must be at least 2");
    if (g_.size() > rank_ - 1) throw std::invalid_argument("too many family coefficients for the rank");
    g_.resize(rank_ - 1, ParamPoly(field_));
    std::vector<ParamPoly> c;
    c.push_back(ParamPoly::constant(RatFunc::t(field_)));
    for (const auto& gi : g_) c.push_back(gi);
    c.push_back(ParamPoly::constant(RatFunc::one(field_)));
    phi_t_ = OrePoly<ParamPoly>(field_, std::move(c));
}

FamilyModule FamilyModule::standard(const FieldPtr& field, std::size_t rank) {
    return FamilyModule(field, rank, {ParamPoly::variable(field)});
}

ParamPoly FamilyModule::g(std::size_t i) const {
    if (i == 0) return ParamPoly::constant(RatFunc::t(field_));
    return g_.at(i - 1);
}

bool FamilyModule::is_standard() const {
    if (!(g_[0] == ParamPoly::variable(field_))) return false;
    for (std::size_t i = 1; i < g_.size(); ++i)
        if (!g_[i].is_zero()) return false;
    return true;
}

ParamPoly iterate_point(const FamilyModule& F, const ParamPoly& c, std::size_t n) {
    ParamPoly x = c;
    for (std::size_t i = 0; i < n; ++i) x = act(F.generic_phi_t(), x);
    return x;
}

HypothesisReport hypothesis_check(const FamilyModule& F, const ParamPoly& c) {
    const std::uint64_t q = F.field()->q();
    const std::size_t r = F.rank();
    HypothesisReport report;
    report.threshold = 0;
    const Rational qr = rational_pow(q, r);
    for (std::size_t i = 0; i < r; ++i) {
        const ParamPoly gi = F.g(i);
        if (gi.is_zero()) continue;
        const Rational bound = Rational(static_cast<long>(gi.deg())) / (qr - rational_pow(q, i));
        if (bound > report.threshold) report.threshold = bound;
    }
    if (c.is_zero()) return report;
    report.margin = Rational(static_cast<long>(c.deg())) - report.threshold;
    report.holds = *report.margin > 0;
    return report;
}

DegreeLawReport degree_law_check(const FamilyModule& F, const ParamPoly& c, std::size_t n) {
    if (!hypothesis_check(F, c).holds) throw std::invalid_argument("degree law needs deg(c) above the family threshold");
    const ParamPoly f = iterate_point(F, c, n);
    mpz_class growth;
    mpz_ui_pow_ui(growth.get_mpz_t(), F.field()->q(), F.rank() * n);
    if (!growth.fits_ulong_p()) throw std::overflow_error("degree law exponent too large");
    const std::uint64_t g = growth.get_ui();
    DegreeLawReport report;
    report.degree = f.degree();
    report.leading = f.leading();
    report.expected_degree = c.deg() * g;
    report.expected_leading = c.leading().pow(static_cast<std::int64_t>(g));
    return report;
}

DrinfeldModule specialize(const FamilyModule& F, const RatFunc& lambda) {
    std::vector<RatFunc> a;
    for (std::size_t i = 1; i < F.rank(); ++i) a.push_back(F.g(i).evaluate(lambda));
    return DrinfeldModule(F.field(), a);
}

}  // namespace drinfeld
