#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/fq_poly.hpp"
#include "drinfeld/rat_func.hpp"

namespace drinfeld {

/// Lacunary polynomial in t over F_{q^s}: sorted (exponent, coefficient code) terms.
/// Frobenius only rescales exponents, so twisted polynomials with such coefficients
/// (phi_{t^n} for constant or monomial a_i) stay small where the dense form would not.
class SparseFqPoly {
public:
    using Term = std::pair<std::uint64_t, std::uint32_t>;

    SparseFqPoly() = default;
    explicit SparseFqPoly(FieldPtr field) : field_(std::move(field)) {}
    SparseFqPoly(FieldPtr field, std::vector<Term> terms);
    explicit SparseFqPoly(const FqPoly& dense);

    static SparseFqPoly monomial(const FieldPtr& field, FqElem c, std::uint64_t e);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    /// Degree of a nonzero polynomial.
    [[nodiscard]] std::uint64_t deg() const { return terms_.back().first; }
    /// Throws std::length_error above max_degree.
    [[nodiscard]] FqPoly to_dense(std::uint64_t max_degree = 1u << 24) const;
    [[nodiscard]] SparseFqPoly frobenius() const;

    friend SparseFqPoly operator+(const SparseFqPoly& a, const SparseFqPoly& b);
    friend SparseFqPoly operator-(const SparseFqPoly& a);
    friend SparseFqPoly operator-(const SparseFqPoly& a, const SparseFqPoly& b) { return a + (-b); }
    friend SparseFqPoly operator*(const SparseFqPoly& a, const SparseFqPoly& b);
    friend SparseFqPoly operator*(FqElem c, const SparseFqPoly& a);
    friend bool operator==(const SparseFqPoly& a, const SparseFqPoly& b) { return a.terms_ == b.terms_; }

private:
    FieldPtr field_;
    std::vector<Term> terms_;
};

}  // namespace drinfeld
