#include "drinfeld/rat_func.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

RatFunc::RatFunc(FieldPtr field) : num_(field), den_(FqPoly::one(field)) {}

RatFunc::RatFunc(FqPoly num) : num_(std::move(num)), den_(FqPoly::one(num_.field())) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    const FieldPtr field = den.field();
    if (num.is_zero()) {
        num_ = FqPoly(field);
        den_ = FqPoly::one(field);
        return;
    }
    if (!den.is_constant()) {
        FqPoly g = gcd(num, den);
        if (!g.is_one()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    const FqElem lead = den.leading();
    if (!lead.is_one()) {
        const FqElem inv = lead.inverse();
        num = inv * num;
        den = inv * den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::constant(const FieldPtr& field, FqElem c) { return RatFunc(FqPoly::constant(field, c)); }
RatFunc RatFunc::one(const FieldPtr& field) { return RatFunc(FqPoly::one(field)); }
RatFunc RatFunc::t(const FieldPtr& field) { return RatFunc(FqPoly::t(field)); }

std::size_t RatFunc::size_degree() const {
    return std::max(num_.is_zero() ? 0 : num_.deg(), den_.deg());
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);  // only the leading coefficient needs fixing
}

RatFunc RatFunc::pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    const auto e = static_cast<std::uint64_t>(k);
    FqPoly n = num_.pow(e), d = den_.pow(e);
    return RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc RatFunc::frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius(), Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    FqPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
    const FqPoly da = exact_div(a.den_, g), db = exact_div(b.den_, g);
    FqPoly n = a.num_ * db + b.num_ * da;
    if (n.is_zero()) return RatFunc(a.field());
    const FqPoly g2 = gcd(n, g);
    return RatFunc(exact_div(n, g2), da * exact_div(b.den_, g2), RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Reduced{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, RatFunc::Reduced{});
    const FqPoly g1 = gcd(a.num_, b.den_);
    const FqPoly g2 = gcd(b.num_, a.den_);
    return RatFunc(exact_div(a.num_, g1) * exact_div(b.num_, g2), exact_div(a.den_, g2) * exact_div(b.den_, g1),
                   RatFunc::Reduced{});
}

RatFunc operator*(FqElem c, const RatFunc& a) {
    if (c.is_zero()) return RatFunc(a.field());
    return RatFunc(c * a.num_, a.den_, RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

}  // namespace drinfeld
