#pragma once

#include <optional>
#include <string>

#include "drinfeld/family.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

/// P(z) = phi^z_f(a(z)); its roots lambda are the parameters where a(lambda) is f-torsion.
ParamPoly torsion_param_poly(const FamilyModule& F, const ParamPoly& a, const OperatorPoly& f);

/// Monic gcd in K[z] through a subresultant remainder sequence over F_{q^s}[t][z].
/// Throws std::invalid_argument on zero input.
ParamPoly common_param_gcd(const ParamPoly& P, const ParamPoly& Q);

/// Res_z(P, Q) in K through the subresultant algorithm. Throws std::invalid_argument on zero input.
RatFunc common_param_resultant(const ParamPoly& P, const ParamPoly& Q);

struct DependenceReport {
    /// b = gamma a with gamma in F_q, when such gamma exists.
    std::optional<FqElem> gamma;
    /// C_a^{deg b} / C_b^{deg a}; absent when a or b is zero.
    std::optional<RatFunc> unit;
    /// unit lies in the constant field F_{q^s}.
    bool unit_constant = false;
};

DependenceReport dependence_check(const ParamPoly& a, const ParamPoly& b);

/// lambda_0 = (-t a - a^{q^r}) / a^q, the parameter where a becomes t-torsion in the
/// standard family of rank r. Throws std::invalid_argument for a = 0.
RatFunc lambda0(const FamilyModule& F, const RatFunc& a);

struct CaseReport {
    enum class Tag { Case1, Case2a, Case2b };
    Tag tag = Tag::Case1;
    Place place = Place::infinity();
    RatFunc lambda0;
    RatFunc b;
    /// phi_t(b) or, in the second branch of Case 2b, phi_{t^2}(b), at lambda0.
    RatFunc image;
    /// 1 for phi_t, 2 for phi_{t^2}.
    unsigned steps = 1;
    /// log|image|_v.
    Rational computed;
    /// max(0, log|t|_v/(q^r-1), log|lambda0|_v/(q^r-q)).
    Rational threshold;
    /// (q^r - q) log|a|_v, the guaranteed lower bound in the phi_{t^2} branch.
    std::optional<Rational> escape_lower_bound;
    bool non_torsion = false;
};

std::string to_string(CaseReport::Tag tag);

/// Valuation analysis of b = gamma a at lambda0(a) for the standard family.
/// Throws std::invalid_argument if gamma lies in F_q, a = 0, or F is not standard.
CaseReport case_analysis_verify(const FamilyModule& F, const RatFunc& a, const FqElem& gamma);

}  // namespace drinfeld
