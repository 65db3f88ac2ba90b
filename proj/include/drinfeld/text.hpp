#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "drinfeld/family.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

/// Syntax or kind error in an element description; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
/// unary := '-' unary | power, power := atom ('^' integer)?, atom := integer | 'u' | 't' | 'z' | '(' expr ')'.
/// Division is only by nonzero z-free values; negative exponents only on z-free values.
ParamPoly parse_parampoly(std::string_view text, const FieldPtr& field);
RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field);
FqPoly parse_fqpoly(std::string_view text, const FieldPtr& field);
FqElem parse_constant(std::string_view text, const FieldPtr& field);
/// "inf" or a monic irreducible polynomial in t.
Place parse_place(std::string_view text, const FieldPtr& field);
/// "r=2;g1=z;g2=..."; unspecified g_i are zero.
FamilyModule parse_family(std::string_view text, const FieldPtr& field);

std::string render(const FqElem& c);
std::string render(const FqPoly& f);
std::string render(const RatFunc& x);
std::string render(const KPoly& P);
std::string render(const Place& v);
std::string render(const Rational& x);
std::string render(const Degree& d);
std::string render_family(const FamilyModule& F);
/// Factored form, e.g. "t^3*(t+1)" or "(t+1)/(t^2)".
std::string render_factored(const RatFunc& x, std::uint64_t seed = kDefaultSeed);

}  // namespace drinfeld
