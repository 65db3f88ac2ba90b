#pragma once

#include <compare>
#include <cstdint>

#include "drinfeld/fq_poly.hpp"

namespace drinfeld {

/// Element of K = F_{q^s}(t) in lowest terms with monic denominator; zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(FieldPtr field);
    explicit RatFunc(FqPoly num);
    RatFunc(FqPoly num, FqPoly den);

    static RatFunc constant(const FieldPtr& field, FqElem c);
    static RatFunc one(const FieldPtr& field);
    static RatFunc t(const FieldPtr& field);

    [[nodiscard]] const FqPoly& num() const { return num_; }
    [[nodiscard]] const FqPoly& den() const { return den_; }
    [[nodiscard]] const FieldPtr& field() const { return den_.field(); }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }
    /// True iff the value lies in the constant field F_{q^s}.
    [[nodiscard]] bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    /// Precondition: is_constant().
    [[nodiscard]] FqElem constant_value() const { return num_.coeff_elem(0); }
    /// Total size max(deg num, deg den), used as a growth measure.
    [[nodiscard]] std::size_t size_degree() const;

    [[nodiscard]] RatFunc inverse() const;
    [[nodiscard]] RatFunc pow(std::int64_t k) const;
    /// x -> x^q, applied to numerator and denominator separately.
    [[nodiscard]] RatFunc frobenius() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(FqElem c, const RatFunc& a);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
        if (auto c = a.num_ <=> b.num_; c != 0) return c;
        return a.den_ <=> b.den_;
    }
    [[nodiscard]] std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    struct Reduced {};
    RatFunc(FqPoly num, FqPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    FqPoly num_;
    FqPoly den_;
};

struct RatFuncHash {
    std::size_t operator()(const RatFunc& a) const { return a.hash(); }
};

}  // namespace drinfeld
