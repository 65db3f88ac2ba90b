#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drinfeld/rat_func.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

/// A place of F_{q^s}(t): a monic irreducible P (finite place) or the degree valuation at infinity.
class Place {
public:
    static Place infinity() { return Place(); }
    /// Throws std::invalid_argument unless P is monic and irreducible.
    static Place finite(FqPoly P);

    [[nodiscard]] bool is_infinity() const { return !poly_.has_value(); }
    /// Precondition: finite place.
    [[nodiscard]] const FqPoly& poly() const { return *poly_; }
    /// deg P for finite places, 1 for infinity.
    [[nodiscard]] std::size_t degree() const { return poly_ ? poly_->deg() : 1; }

    friend bool operator==(const Place& a, const Place& b) { return a.poly_ == b.poly_; }
    /// Finite places by (degree, coefficients top-down); infinity sorts after every finite place.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    explicit Place(FqPoly P) : poly_(std::move(P)) {}
    std::optional<FqPoly> poly_;
};

/// log_q |alpha|_v: an exact rational, or -infinity for alpha = 0.
class LogAbs {
public:
    LogAbs() = default;  // -infinity
    explicit LogAbs(Rational v) : value_(std::move(v)) {}
    static LogAbs neg_inf() { return LogAbs(); }

    [[nodiscard]] bool is_neg_inf() const { return !value_.has_value(); }
    /// Precondition: finite.
    [[nodiscard]] const Rational& value() const { return *value_; }
    [[nodiscard]] std::string str() const { return value_ ? to_string(*value_) : "-inf"; }

    friend bool operator==(const LogAbs& a, const LogAbs& b) { return a.value_ == b.value_; }
    friend bool operator<(const LogAbs& a, const LogAbs& b) {
        if (!b.value_) return false;
        if (!a.value_) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator>(const LogAbs& a, const LogAbs& b) { return b < a; }
    friend bool operator<=(const LogAbs& a, const LogAbs& b) { return !(b < a); }
    friend bool operator>=(const LogAbs& a, const LogAbs& b) { return !(a < b); }

private:
    std::optional<Rational> value_;
};

/// Multiplicity of P in a nonzero polynomial.
std::uint64_t multiplicity(const FqPoly& f, const FqPoly& P);

/// v-adic order; std::nullopt encodes +infinity (alpha = 0). ord_inf = deg den - deg num.
std::optional<std::int64_t> ord_at(const RatFunc& alpha, const Place& v);

/// log_q|alpha|_v = -deg(v) * ord_v(alpha).
LogAbs log_abs(const RatFunc& alpha, const Place& v);

/// Places where some nonzero input has nonzero order, always including infinity. Sorted.
std::vector<Place> support_places(std::span<const RatFunc> elems, std::uint64_t seed = 0x5eed'd1f0'be11ull);

/// Weil height in log-q units: max(deg num, deg den), 0 for alpha = 0.
Rational weil_height(const RatFunc& alpha);

/// The same height computed as a sum of log+ over the support.
Rational weil_height_by_places(const RatFunc& alpha);

}  // namespace drinfeld
