#include "drinfeld/k_poly.hpp"

#include <stdexcept>

namespace drinfeld {

KPoly::KPoly(FieldPtr field, std::vector<RatFunc> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
}

void KPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::constant(const RatFunc& c) { return KPoly(c.field(), {c}); }
KPoly KPoly::constant(const FieldPtr& field, const RatFunc& c) { return KPoly(field, {c}); }

KPoly KPoly::monomial(const RatFunc& c, std::size_t k) {
    if (c.is_zero()) return KPoly(c.field());
    std::vector<RatFunc> v(k + 1, RatFunc(c.field()));
    v[k] = c;
    return KPoly(c.field(), std::move(v));
}

KPoly KPoly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    return leading().inverse() * *this;
}

KPoly KPoly::derivative() const {
    if (c_.size() <= 1) return KPoly(field_);
    std::vector<RatFunc> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())) * c_[i]);
    return KPoly(field_, std::move(d));
}

KPoly KPoly::pow(std::uint64_t k) const {
    KPoly result = constant(field_, RatFunc::one(field_));
    KPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

KPoly KPoly::frobenius() const {
    if (c_.empty()) return *this;
    const std::uint64_t q = field_->q();
    KPoly r(field_);
    r.c_.assign((c_.size() - 1) * q + 1, RatFunc(field_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) r.c_[i * q] = c_[i].frobenius();
    return r;
}

FqPoly common_denominator(const KPoly& a) {
    FqPoly L = FqPoly::one(a.field());
    for (const auto& c : a.coeffs()) {
        if (c.den().is_one()) continue;
        const FqPoly g = gcd(L, c.den());
        L = L * exact_div(c.den(), g);
    }
    return L;
}

RatFunc KPoly::evaluate(const RatFunc& lambda) const {
    if (c_.empty()) return RatFunc(field_);
    if (c_.size() == 1 || lambda.is_zero()) return c_[0];
    const FqPoly L = common_denominator(*this);
    auto scaled = [&](const RatFunc& c) {
        return c.den().is_one() ? (L.is_one() ? c.num() : c.num() * L) : c.num() * exact_div(L, c.den());
    };
    const FqPoly& u = lambda.num();
    const FqPoly& w = lambda.den();
    const std::size_t d = c_.size() - 1;
    FqPoly acc = scaled(c_[d]);
    FqPoly W = FqPoly::one(field_);
    for (std::size_t i = d; i-- > 0;) {
        if (!w.is_one()) W = W * w;
        acc = acc * u;
        if (!c_[i].is_zero()) acc += scaled(c_[i]) * W;
    }
    // acc / (L * w^d)
    FqPoly den = L;
    if (!w.is_one()) den = den * W;
    return RatFunc(std::move(acc), std::move(den));
}

KPoly& KPoly::operator+=(const KPoly& b) {
    if (b.c_.empty()) return *this;
    if (!field_) field_ = b.field_;
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), RatFunc(field_));
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
    normalize();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& b) { return *this += -b; }

KPoly operator-(const KPoly& a) {
    KPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    const FieldPtr& field = a.field_ ? a.field_ : b.field_;
    if (a.c_.empty() || b.c_.empty()) return KPoly(field);
    KPoly r(field);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc(field));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

KPoly operator*(const RatFunc& c, const KPoly& a) {
    if (c.is_zero()) return KPoly(a.field_);
    if (c.is_one()) return a;
    KPoly r = a;
    for (auto& x : r.c_)
        if (!x.is_zero()) x = c * x;
    return r;
}

KPoly operator*(FqElem c, const KPoly& a) {
    if (c.is_zero()) return KPoly(a.field_);
    KPoly r = a;
    for (auto& x : r.c_) x = c * x;
    return r;
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial in K[z]");
    const FieldPtr& field = b.field();
    if (a.size() < b.size()) return {KPoly(field), a};
    std::vector<RatFunc> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<RatFunc> quo(rem.size() - db, RatFunc(field));
    const RatFunc lead_inv = bc.back().inverse();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const RatFunc factor = rem[i] * lead_inv;
        quo[i - db] = factor;
        for (std::size_t j = 0; j < db; ++j)
            if (!bc[j].is_zero()) rem[i - db + j] -= factor * bc[j];
        rem[i] = RatFunc(field);
    }
    rem.resize(db, RatFunc(field));
    return {KPoly(field, std::move(quo)), KPoly(field, std::move(rem))};
}

}  // namespace drinfeld
