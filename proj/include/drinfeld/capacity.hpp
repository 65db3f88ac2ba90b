#pragma once

#include <optional>
#include <vector>

#include "drinfeld/family.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

struct GreenValue {
    /// max(0, log|f_{c,n}(lambda)|_v) / (m q^{rn}).
    Rational value;
    /// The n+1 estimate is identical.
    bool stabilized = false;
    std::size_t n = 0;
};

/// Green estimate of M_{c,v} at lambda from the n-th iterate. Throws if the hypothesis fails.
GreenValue green_estimate(const FamilyModule& F, const ParamPoly& c, const Place& v, const RatFunc& lambda,
                          std::size_t n);

/// Least log M such that log|lambda|_v > log M forces |g_i(lambda)|_v = |D_i|_v |lambda|_v^{d_i},
/// |c(lambda)|_v = |C_m|_v |lambda|_v^m, the dominance of the top term of phi_t(c(lambda)), and
/// |c(lambda)|_v > 1.
Rational escape_bound_M(const FamilyModule& F, const ParamPoly& c, const Place& v);

struct Membership {
    enum class Kind { In, Out, Unknown };
    Kind kind = Kind::Unknown;
    /// Out: first escaping iterate. Unknown: iterations spent.
    std::size_t n = 0;
    /// Unknown: the Green function at lambda lies in [0, bound].
    Rational bound;
};

Membership membership(const FamilyModule& F, const ParamPoly& c, const Place& v, const RatFunc& lambda,
                      const HeightBudget& budget = {});

struct CapacityReport {
    /// log_q of the capacity: -log|C_m|_v / m.
    Rational capacity_log;
    Rational escape_bound;
    /// Sampled lambda beyond the escape bound and the Green values there at n = 1, 2.
    RatFunc sample;
    std::vector<GreenValue> green;
    /// log|sample|_v + log|C_m|_v / m.
    Rational expected;
    bool confirmed = false;
};

/// A lambda in K with log|lambda|_v > bound: t^k at infinity, P^{-k} at the place P.
RatFunc sample_beyond(const FieldPtr& field, const Place& v, const Rational& bound);

CapacityReport capacity_log(const FamilyModule& F, const ParamPoly& c, const Place& v, std::size_t max_n = 2);

struct AdelicReport {
    std::vector<std::pair<Place, Rational>> terms;
    Rational sum;
    /// Places where M_{c,v} may differ from the closed unit disk.
    std::vector<Place> exceptional;
};

AdelicReport adelic_capacity_log(const FamilyModule& F, const ParamPoly& c);

/// canonical_height(phi^lambda, c(lambda)) / deg(c).
HeightValue param_height(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda,
                         const HeightBudget& budget = {});

/// Places where G_{c,v}(lambda) can be nonzero: the support of lambda, t, and the coefficients of c and g_i.
std::vector<Place> green_places(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda);

/// Sum over green_places of stabilized Green estimates, evaluating f_{c,n} in K[z]; absent if
/// some place has not stabilized by max_n.
std::optional<Rational> green_height_sum(const FamilyModule& F, const ParamPoly& c, const RatFunc& lambda,
                                         std::size_t max_n = 2);

}  // namespace drinfeld
