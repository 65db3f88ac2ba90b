#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace drinfeld {

/// Exact rational numbers (log-q units for heights, radii and Green values).
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Renders as "n" or "n/d".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Rational power q^k as an exact integer-valued Rational.
inline Rational rational_pow(std::uint64_t base, std::uint64_t exp) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, exp);
    return Rational(z);
}

/// Degree of a polynomial: either a natural number or the distinguished -infinity of the zero polynomial.
class Degree {
public:
    constexpr Degree() = default;  // -infinity
    constexpr explicit Degree(std::size_t d) : value_(d) {}

    static constexpr Degree neg_inf() { return Degree(); }

    [[nodiscard]] constexpr bool is_neg_inf() const { return !value_.has_value(); }
    /// Precondition: !is_neg_inf().
    [[nodiscard]] constexpr std::size_t value() const { return *value_; }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr auto operator<=>(const Degree& a, const Degree& b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return (!a.is_neg_inf()) <=> (!b.is_neg_inf());
        return *a.value_ <=> *b.value_;
    }

    [[nodiscard]] std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(*value_); }

private:
    std::optional<std::size_t> value_;
};

}  // namespace drinfeld
