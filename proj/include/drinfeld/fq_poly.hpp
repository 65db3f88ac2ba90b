#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/galois_field.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

/// Dense polynomial in t over F_{q^s}. Coefficients are field codes, low degree first,
/// with no trailing zeros.
class FqPoly {
public:
    FqPoly() = default;
    explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
    FqPoly(FieldPtr field, std::vector<std::uint32_t> coeffs);

    static FqPoly constant(FieldPtr field, FqElem c);
    static FqPoly one(FieldPtr field);
    /// c * t^k
    static FqPoly monomial(FieldPtr field, FqElem c, std::size_t k);
    static FqPoly t(FieldPtr field) { return monomial(field, field->one(), 1); }

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const GaloisField& F() const { return *field_; }
    [[nodiscard]] const std::vector<std::uint32_t>& coeffs() const { return c_; }
    [[nodiscard]] std::size_t size() const { return c_.size(); }
    [[nodiscard]] Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    /// Degree of a nonzero polynomial.
    [[nodiscard]] std::size_t deg() const { return c_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    [[nodiscard]] std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] FqElem coeff_elem(std::size_t i) const { return field_->elem(coeff(i)); }
    [[nodiscard]] FqElem leading() const { return field_->elem(c_.empty() ? 0 : c_.back()); }
    /// Index of the lowest nonzero coefficient (t-adic order). Precondition: nonzero.
    [[nodiscard]] std::size_t low_order() const;

    [[nodiscard]] FqPoly monic() const;
    [[nodiscard]] FqPoly derivative() const;
    [[nodiscard]] FqPoly shifted(std::size_t k) const;  // * t^k
    [[nodiscard]] FqPoly pow(std::uint64_t k) const;
    /// Coefficientwise q-power map: (sum c_i t^i)^q.
    [[nodiscard]] FqPoly frobenius() const;
    /// Inverse of the p-power map; precondition: only exponents divisible by p occur.
    [[nodiscard]] FqPoly pth_root() const;
    [[nodiscard]] FqElem eval(FqElem x) const;
    [[nodiscard]] bool in_base_field() const;  // all coefficients in F_q

    FqPoly& operator+=(const FqPoly& b);
    FqPoly& operator-=(const FqPoly& b);
    FqPoly& operator*=(const FqPoly& b) { return *this = *this * b; }
    friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
    friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
    friend FqPoly operator-(const FqPoly& a);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(FqElem c, const FqPoly& a);
    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
    /// Degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

    [[nodiscard]] std::size_t hash() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
/// Exact quotient; throws std::logic_error if b does not divide a.
FqPoly exact_div(const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero if both are zero).
FqPoly gcd(FqPoly a, FqPoly b);
/// (a * b) mod m and base^k mod m.
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(FqPoly base, std::uint64_t k, const FqPoly& m);
FqPoly powmod(FqPoly base, const mpz_class& k, const FqPoly& m);

struct FqPolyHash {
    std::size_t operator()(const FqPoly& f) const { return f.hash(); }
};

}  // namespace drinfeld
