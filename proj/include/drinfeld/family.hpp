#pragma once

#include <vector>

#include "drinfeld/k_poly.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

/// Element of K[z]: marked points c, a, b and their iterates f_{c,n}.
using ParamPoly = KPoly;

/// The family phi_t = t + g_1(z) tau + ... + g_{r-1}(z) tau^{r-1} + tau^r, r >= 2.
class FamilyModule {
public:
    /// g = (g_1, ..., g_{r-1}); missing trailing entries are zero.
    FamilyModule(FieldPtr field, std::size_t rank, std::vector<ParamPoly> g);
    /// g_1 = z and g_i = 0 for i >= 2.
    static FamilyModule standard(const FieldPtr& field, std::size_t rank);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] std::size_t rank() const { return rank_; }
    /// g_i for 0 <= i < r, with g_0 = t.
    [[nodiscard]] ParamPoly g(std::size_t i) const;
    [[nodiscard]] bool is_standard() const;
    /// phi_t with coefficients in K[z].
    [[nodiscard]] const OrePoly<ParamPoly>& generic_phi_t() const { return phi_t_; }

private:
    FieldPtr field_;
    std::size_t rank_;
    std::vector<ParamPoly> g_;
    OrePoly<ParamPoly> phi_t_;
};

/// f_{c,n}(z) = phi_{t^n}(c) in K[z].
ParamPoly iterate_point(const FamilyModule& F, const ParamPoly& c, std::size_t n);

struct HypothesisReport {
    bool holds = false;
    /// max over i of deg(g_i)/(q^r - q^i), with g_0 = t.
    Rational threshold;
    /// deg(c) - threshold; absent for c = 0.
    std::optional<Rational> margin;
};

/// deg(c) > max_i deg(g_i)/(q^r - q^i), compared exactly.
HypothesisReport hypothesis_check(const FamilyModule& F, const ParamPoly& c);

struct DegreeLawReport {
    Degree degree;
    RatFunc leading;
    std::size_t expected_degree = 0;
    RatFunc expected_leading;

    [[nodiscard]] bool holds() const {
        return !degree.is_neg_inf() && degree.value() == expected_degree && leading == expected_leading;
    }
};

/// Degree and leading coefficient of f_{c,n} against m q^{rn} and C_m^{q^{rn}}.
/// Throws std::invalid_argument when the hypothesis fails.
DegreeLawReport degree_law_check(const FamilyModule& F, const ParamPoly& c, std::size_t n);

/// The Drinfeld module obtained by setting z = lambda.
DrinfeldModule specialize(const FamilyModule& F, const RatFunc& lambda);

}  // namespace drinfeld
