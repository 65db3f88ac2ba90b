#include "drinfeld/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sparse polynomial exponent overflow");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sparse polynomial exponent overflow");
    return r;
}

// Sort by exponent and merge equal exponents, dropping zeros.
void canonicalize(const GaloisField& F, std::vector<SparseFqPoly::Term>& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint32_t c = 0;
        const std::uint64_t e = v[i].first;
        for (; i < v.size() && v[i].first == e; ++i) c = F.add(c, v[i].second);
        if (c != 0) v[out++] = {e, c};
    }
    v.resize(out);
}

}  // namespace

SparseFqPoly::SparseFqPoly(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)), terms_(std::move(terms)) {
    canonicalize(*field_, terms_);
}

SparseFqPoly::SparseFqPoly(const FqPoly& dense) : field_(dense.field()) {
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense.coeff(i) != 0) terms_.emplace_back(i, dense.coeff(i));
}

SparseFqPoly SparseFqPoly::monomial(const FieldPtr& field, FqElem c, std::uint64_t e) {
    SparseFqPoly out(field);
    if (!c.is_zero()) out.terms_.emplace_back(e, c.code());
    return out;
}

FqPoly SparseFqPoly::to_dense(std::uint64_t max_degree) const {
    FqPoly out(field_);
    if (terms_.empty()) return out;
    if (deg() > max_degree) throw std::length_error("sparse polynomial too large to densify");
    for (const auto& [e, c] : terms_) out = out + FqPoly::monomial(field_, field_->elem(c), e);
    return out;
}

SparseFqPoly SparseFqPoly::frobenius() const {
    SparseFqPoly out(field_);
    const std::uint64_t q = field_->q();
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.terms_.emplace_back(checked_mul(e, q), field_->frobenius_q(c));
    return out;
}

SparseFqPoly operator+(const SparseFqPoly& a, const SparseFqPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const GaloisField& F = *a.field_;
    SparseFqPoly out(a.field_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            const std::uint32_t c = F.add(a.terms_[i].second, b.terms_[j].second);
            if (c != 0) out.terms_.emplace_back(a.terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseFqPoly operator-(const SparseFqPoly& a) {
    SparseFqPoly out = a;
    for (auto& t : out.terms_) t.second = a.field_->neg(t.second);
    return out;
}

SparseFqPoly operator*(const SparseFqPoly& a, const SparseFqPoly& b) {
    if (a.is_zero() || b.is_zero()) return SparseFqPoly(a.field_ ? a.field_ : b.field_);
    const GaloisField& F = *a.field_;
    std::vector<SparseFqPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) prod.emplace_back(checked_add(ea, eb), F.mul(ca, cb));
    return SparseFqPoly(a.field_, std::move(prod));
}

SparseFqPoly operator*(FqElem c, const SparseFqPoly& a) {
    if (c.is_zero() || a.is_zero()) return SparseFqPoly(a.field_);
    SparseFqPoly out = a;
    for (auto& t : out.terms_) t.second = a.field_->mul(c.code(), t.second);
    return out;
}

}  // namespace drinfeld
