#pragma once

#include <concepts>
#include <stdexcept>
#include <vector>

#include "drinfeld/k_poly.hpp"
#include "drinfeld/rat_func.hpp"
#include "drinfeld/roots.hpp"
#include "drinfeld/sparse_poly.hpp"

namespace drinfeld {

/// Coefficient rings of twisted polynomials: K itself, or K[z] for parametric families.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<RatFunc> {
    static RatFunc zero(const FieldPtr& f) { return RatFunc(f); }
    static RatFunc from_k(const RatFunc& a) { return a; }
};

template <>
struct CoeffTraits<KPoly> {
    static KPoly zero(const FieldPtr& f) { return KPoly(f); }
    static KPoly from_k(const RatFunc& a) { return KPoly::constant(a.field(), a); }
};

/// Lacunary polynomial coefficients in F_{q^s}[t]; only polynomial elements of K embed.
template <>
struct CoeffTraits<SparseFqPoly> {
    static SparseFqPoly zero(const FieldPtr& f) { return SparseFqPoly(f); }
    static SparseFqPoly from_k(const RatFunc& a) {
        if (!a.is_polynomial()) throw std::invalid_argument("sparse coefficients must be polynomials in t");
        return SparseFqPoly(a.num());
    }
};

template <class C>
concept OreCoefficient = requires(const C& a, const C& b, FqElem c) {
    { a + b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { c * a } -> std::convertible_to<C>;
    { a.frobenius() } -> std::convertible_to<C>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { CoeffTraits<C>::zero(std::declval<FieldPtr>()) } -> std::convertible_to<C>;
};

/// Element of F_q[t]: the operator ring acting through a Drinfeld module.
class OperatorPoly {
public:
    /// Throws std::invalid_argument if some coefficient lies outside F_q.
    explicit OperatorPoly(FqPoly f) : f_(std::move(f)) {
        if (!f_.in_base_field()) throw std::invalid_argument("operator polynomial must have coefficients in F_q");
    }
    static OperatorPoly t(const FieldPtr& field) { return OperatorPoly(FqPoly::t(field)); }

    [[nodiscard]] const FqPoly& poly() const { return f_; }
    [[nodiscard]] bool is_zero() const { return f_.is_zero(); }
    [[nodiscard]] Degree degree() const { return f_.degree(); }

private:
    FqPoly f_;
};

/// Twisted polynomial sum c_i tau^i with tau c = c^q tau.
template <OreCoefficient C>
class OrePoly {
public:
    OrePoly() = default;
    explicit OrePoly(FieldPtr field) : field_(std::move(field)) {}
    OrePoly(FieldPtr field, std::vector<C> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { normalize(); }

    static OrePoly constant(const FieldPtr& field, C c) { return OrePoly(field, {std::move(c)}); }
    static OrePoly tau(const FieldPtr& field, std::size_t k, const C& one) {
        std::vector<C> v(k + 1, CoeffTraits<C>::zero(field));
        v[k] = one;
        return OrePoly(field, std::move(v));
    }

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<C>& coeffs() const { return c_; }
    [[nodiscard]] Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    [[nodiscard]] std::size_t deg() const { return c_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CoeffTraits<C>::zero(field_); }

    OrePoly& operator+=(const OrePoly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), CoeffTraits<C>::zero(field_));
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = c_[i] + b.c_[i];
        normalize();
        return *this;
    }
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(const OrePoly& a) {
        OrePoly r = a;
        const FqElem minus_one = -a.field_->one();
        for (auto& c : r.c_) c = minus_one * c;
        return r;
    }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

    /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^{q^i} tau^{i+j}
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
        if (a.c_.empty() || b.c_.empty()) return OrePoly(a.field_);
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, CoeffTraits<C>::zero(a.field_));
        std::vector<C> twisted = b.c_;  // b_j^{q^i} for the current i
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (i > 0)
                for (auto& x : twisted) x = x.frobenius();
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < twisted.size(); ++j)
                if (!twisted[j].is_zero()) out[i + j] = out[i + j] + a.c_[i] * twisted[j];
        }
        return OrePoly(a.field_, std::move(out));
    }
    friend OrePoly operator*(FqElem c, const OrePoly& a) {
        OrePoly r = a;
        for (auto& x : r.c_) x = c * x;
        r.normalize();
        return r;
    }
    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FieldPtr field_;
    std::vector<C> c_;
};

/// Evaluation of the additive polynomial: sum c_i x^{q^i}.
template <OreCoefficient C>
C act(const OrePoly<C>& A, const C& x) {
    C acc = CoeffTraits<C>::zero(A.field());
    if (x.is_zero()) return acc;
    C power = x;
    const auto& c = A.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) power = power.frobenius();
        if (!c[i].is_zero()) acc = acc + c[i] * power;
    }
    return acc;
}

/// f(phi_t) by Horner; the F_q coefficients of f commute with tau.
template <OreCoefficient C>
OrePoly<C> phi_image(const OrePoly<C>& phi_t, const OperatorPoly& f) {
    const FieldPtr& field = phi_t.field();
    OrePoly<C> result(field);
    const auto& fc = f.poly().coeffs();
    const C one = CoeffTraits<C>::from_k(RatFunc::one(field));
    for (std::size_t i = fc.size(); i-- > 0;) {
        result = result * phi_t;
        if (fc[i] != 0) result += OrePoly<C>::constant(field, field->elem(fc[i]) * one);
    }
    return result;
}

/// Monic Drinfeld F_q[t]-module over K: phi_t = t + a_1 tau + ... + a_{r-1} tau^{r-1} + tau^r.
class DrinfeldModule {
public:
    /// a = (a_1, ..., a_{r-1}); rank r = a.size() + 1.
    DrinfeldModule(const FieldPtr& field, const std::vector<RatFunc>& a);
    /// Validates constant term t and leading coefficient 1.
    static DrinfeldModule from_ore(const OrePoly<RatFunc>& phi_t);

    [[nodiscard]] const FieldPtr& field() const { return phi_t_.field(); }
    [[nodiscard]] std::size_t rank() const { return phi_t_.deg(); }
    [[nodiscard]] const OrePoly<RatFunc>& phi_t() const { return phi_t_; }
    [[nodiscard]] RatFunc coefficient(std::size_t i) const { return phi_t_.coeff(i); }
    [[nodiscard]] OrePoly<RatFunc> phi(const OperatorPoly& f) const { return phi_image(phi_t_, f); }

    friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) { return a.phi_t_ == b.phi_t_; }

private:
    explicit DrinfeldModule(OrePoly<RatFunc> phi_t) : phi_t_(std::move(phi_t)) {}
    OrePoly<RatFunc> phi_t_;
};

inline OrePoly<RatFunc> phi_image(const DrinfeldModule& phi, const OperatorPoly& f) { return phi.phi(f); }

/// The ordinary polynomial sum c_i x^{q^i} of phi_f; degree q^{r deg f}.
KPoly kernel_polynomial(const DrinfeldModule& phi, const OperatorPoly& f);

/// K-rational f-torsion: rational roots of the kernel polynomial.
RootSearch torsion_roots_in_K(const DrinfeldModule& phi, const OperatorPoly& f, const RootSearchOptions& options = {});

/// gamma^{-1} phi_t(gamma x): coefficients c_i -> gamma^{q^i - 1} c_i.
OrePoly<RatFunc> conjugate(const OrePoly<RatFunc>& phi_t, const RatFunc& gamma);

}  // namespace drinfeld
