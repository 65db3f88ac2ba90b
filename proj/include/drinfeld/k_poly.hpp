#pragma once

#include <utility>
#include <vector>

#include "drinfeld/rat_func.hpp"

namespace drinfeld {

/// Dense polynomial over K = F_{q^s}(t) in one variable (z for parameters, x for kernel polynomials).
class KPoly {
public:
    KPoly() = default;
    explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
    KPoly(FieldPtr field, std::vector<RatFunc> coeffs);

    static KPoly constant(const RatFunc& c);
    static KPoly constant(const FieldPtr& field, const RatFunc& c);
    /// c * z^k
    static KPoly monomial(const RatFunc& c, std::size_t k);
    static KPoly variable(const FieldPtr& field) { return monomial(RatFunc::one(field), 1); }

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<RatFunc>& coeffs() const { return c_; }
    [[nodiscard]] std::size_t size() const { return c_.size(); }
    [[nodiscard]] Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    /// Degree of a nonzero polynomial.
    [[nodiscard]] std::size_t deg() const { return c_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(field_); }
    /// Leading coefficient (zero for the zero polynomial).
    [[nodiscard]] RatFunc leading() const { return c_.empty() ? RatFunc(field_) : c_.back(); }
    /// Constant term as an element of K.
    [[nodiscard]] RatFunc constant_term() const { return coeff(0); }

    [[nodiscard]] KPoly monic() const;
    [[nodiscard]] KPoly derivative() const;
    [[nodiscard]] KPoly pow(std::uint64_t k) const;
    /// sum c_i^q z^{iq}
    [[nodiscard]] KPoly frobenius() const;
    /// Exact value at lambda in K, computed fraction-free and reduced once.
    [[nodiscard]] RatFunc evaluate(const RatFunc& lambda) const;

    KPoly& operator+=(const KPoly& b);
    KPoly& operator-=(const KPoly& b);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator-(const KPoly& a);
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const RatFunc& c, const KPoly& a);
    friend KPoly operator*(FqElem c, const KPoly& a);
    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }

private:
    void normalize();
    FieldPtr field_;
    std::vector<RatFunc> c_;
};

/// Division with remainder over the field K.
std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);

/// Least common multiple of the coefficient denominators (monic).
FqPoly common_denominator(const KPoly& a);

}  // namespace drinfeld
