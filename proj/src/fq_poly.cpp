#include "drinfeld/fq_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

using Coeffs = std::vector<std::uint32_t>;
constexpr std::uint32_t kNoLog = 0xffffffffu;
constexpr std::size_t kKaratsubaThreshold = 48;

void add_into(const GaloisField& F, std::uint32_t* dst, const std::uint32_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = F.add(dst[i], src[i]);
}

void sub_into(const GaloisField& F, std::uint32_t* dst, const std::uint32_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = F.sub(dst[i], src[i]);
}

// r[0 .. na+nb-1) += a * b, schoolbook
void mul_school(const GaloisField& F, const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
                std::uint32_t* r) {
    std::vector<std::uint32_t> logb(nb);
    for (std::size_t j = 0; j < nb; ++j) logb[j] = b[j] == 0 ? kNoLog : F.log(b[j]);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const std::uint32_t la = F.log(a[i]);
        std::uint32_t* row = r + i;
        for (std::size_t j = 0; j < nb; ++j) {
            if (logb[j] == kNoLog) continue;
            row[j] = F.add(row[j], F.exp(la + logb[j]));
        }
    }
}

// r (size 2n-1, zeroed) = a * b with |a| = |b| = n
void mul_karatsuba(const GaloisField& F, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                   std::uint32_t* r) {
    if (n <= kKaratsubaThreshold) {
        mul_school(F, a, n, b, n, r);
        return;
    }
    const std::size_t lo = n / 2, hi = n - lo;
    Coeffs z0(2 * lo - 1, 0), z2(2 * hi - 1, 0), z1(2 * hi - 1, 0);
    mul_karatsuba(F, a, b, lo, z0.data());
    mul_karatsuba(F, a + lo, b + lo, hi, z2.data());
    Coeffs sa(a + lo, a + n), sb(b + lo, b + n);
    add_into(F, sa.data(), a, lo);
    add_into(F, sb.data(), b, lo);
    mul_karatsuba(F, sa.data(), sb.data(), hi, z1.data());
    sub_into(F, z1.data(), z0.data(), z0.size());
    sub_into(F, z1.data(), z2.data(), z2.size());
    add_into(F, r, z0.data(), z0.size());
    add_into(F, r + lo, z1.data(), z1.size());
    add_into(F, r + 2 * lo, z2.data(), z2.size());
}

Coeffs raw_mul(const GaloisField& F, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    const std::size_t small = std::min(a.size(), b.size());
    if (small <= kKaratsubaThreshold) {
        mul_school(F, a.data(), a.size(), b.data(), b.size(), r.data());
        return r;
    }
    // balanced chunks of the longer operand against the shorter one
    const Coeffs& lng = a.size() >= b.size() ? a : b;
    const Coeffs& sht = a.size() >= b.size() ? b : a;
    const std::size_t n = sht.size();
    Coeffs chunk(n, 0), prod(2 * n - 1, 0);
    for (std::size_t off = 0; off < lng.size(); off += n) {
        const std::size_t len = std::min(n, lng.size() - off);
        std::fill(chunk.begin(), chunk.end(), 0);
        std::copy(lng.begin() + off, lng.begin() + off + len, chunk.begin());
        std::fill(prod.begin(), prod.end(), 0);
        mul_karatsuba(F, chunk.data(), sht.data(), n, prod.data());
        const std::size_t valid = std::min(prod.size(), r.size() - off);
        add_into(F, r.data() + off, prod.data(), valid);
    }
    return r;
}

}  // namespace

FqPoly::FqPoly(FieldPtr field, std::vector<std::uint32_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
}

void FqPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::constant(FieldPtr field, FqElem c) { return FqPoly(std::move(field), {c.code()}); }
FqPoly FqPoly::one(FieldPtr field) { return FqPoly(std::move(field), {1}); }

FqPoly FqPoly::monomial(FieldPtr field, FqElem c, std::size_t k) {
    if (c.is_zero()) return FqPoly(std::move(field));
    std::vector<std::uint32_t> v(k + 1, 0);
    v[k] = c.code();
    return FqPoly(std::move(field), std::move(v));
}

std::size_t FqPoly::low_order() const {
    std::size_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

FqPoly FqPoly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return leading().inverse() * *this;
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(field_);
    std::vector<std::uint32_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        const FqElem k = field_->from_int(static_cast<std::int64_t>(i % field_->characteristic()));
        d[i - 1] = field_->mul(k.code(), c_[i]);
    }
    return FqPoly(field_, std::move(d));
}

FqPoly FqPoly::shifted(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<std::uint32_t> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    FqPoly r;
    r.field_ = field_;
    r.c_ = std::move(v);
    return r;
}

FqPoly FqPoly::pow(std::uint64_t k) const {
    FqPoly result = one(field_);
    FqPoly base = *this;
    // p-th powers are cheap: split k in base p
    const std::uint64_t p = field_->characteristic();
    FqPoly frob_base = base;
    while (k > 0) {
        std::uint64_t d = k % p;
        FqPoly term = one(field_);
        for (std::uint64_t i = 0; i < d; ++i) term = term * frob_base;
        result = result * term;
        k /= p;
        if (k > 0) {
            // frob_base ^= p
            std::vector<std::uint32_t> v;
            if (!frob_base.c_.empty()) {
                v.assign((frob_base.c_.size() - 1) * p + 1, 0);
                for (std::size_t i = 0; i < frob_base.c_.size(); ++i)
                    v[i * p] = field_->pow(frob_base.c_[i], p);
            }
            frob_base = FqPoly(field_, std::move(v));
        }
    }
    return result;
}

FqPoly FqPoly::frobenius() const {
    if (c_.empty()) return *this;
    const std::uint64_t q = field_->q();
    std::vector<std::uint32_t> v((c_.size() - 1) * q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * q] = field_->frobenius_q(c_[i]);
    FqPoly r;
    r.field_ = field_;
    r.c_ = std::move(v);
    return r;
}

FqPoly FqPoly::pth_root() const {
    if (c_.empty()) return *this;
    const std::size_t p = field_->characteristic();
    std::vector<std::uint32_t> v(c_.size() / p + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("pth_root: exponent not divisible by p");
        v[i / p] = field_->pth_root(c_[i]);
    }
    return FqPoly(field_, std::move(v));
}

FqElem FqPoly::eval(FqElem x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x.code()), c_[i]);
    return field_->elem(acc);
}

bool FqPoly::in_base_field() const {
    return std::all_of(c_.begin(), c_.end(), [&](std::uint32_t c) { return field_->in_base_field(c); });
}

FqPoly& FqPoly::operator+=(const FqPoly& b) {
    if (b.c_.empty()) return *this;
    if (!field_) field_ = b.field_;
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
    add_into(*field_, c_.data(), b.c_.data(), b.c_.size());
    normalize();
    return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& b) {
    if (b.c_.empty()) return *this;
    if (!field_) field_ = b.field_;
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
    sub_into(*field_, c_.data(), b.c_.data(), b.c_.size());
    normalize();
    return *this;
}

FqPoly operator-(const FqPoly& a) {
    FqPoly r = a;
    for (auto& c : r.c_) c = a.field_->neg(c);
    return r;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    const FieldPtr& field = a.field_ ? a.field_ : b.field_;
    if (a.c_.empty() || b.c_.empty()) return FqPoly(field);
    if (a.c_.size() == 1 && a.c_[0] == 1) return b;
    if (b.c_.size() == 1 && b.c_[0] == 1) return a;
    FqPoly r;
    r.field_ = field;
    r.c_ = raw_mul(*field, a.c_, b.c_);
    r.normalize();
    return r;
}

FqPoly operator*(FqElem c, const FqPoly& a) {
    if (c.is_zero()) return FqPoly(a.field_);
    if (c.is_one()) return a;
    FqPoly r = a;
    for (auto& x : r.c_) x = a.field_->mul(c.code(), x);
    return r;
}

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
}

std::size_t FqPoly::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto c : c_) {
        h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldPtr& field = b.field();
    if (a.size() < b.size()) return {FqPoly(field), a};
    const GaloisField& F = *field;
    std::vector<std::uint32_t> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<std::uint32_t> quo(rem.size() - db, 0);
    const std::uint32_t lead_inv = F.inv(bc.back());
    std::vector<std::uint32_t> logb(db);
    for (std::size_t j = 0; j < db; ++j) logb[j] = bc[j] == 0 ? 0xffffffffu : F.log(bc[j]);
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint32_t top = rem[i];
        if (top == 0) continue;
        const std::uint32_t factor = F.mul(top, lead_inv);
        quo[i - db] = factor;
        const std::uint32_t lf = F.log(F.neg(factor));
        std::uint32_t* base = rem.data() + (i - db);
        for (std::size_t j = 0; j < db; ++j) {
            if (logb[j] == 0xffffffffu) continue;
            base[j] = F.add(base[j], F.exp(lf + logb[j]));
        }
        rem[i] = 0;
    }
    rem.resize(db);
    return {FqPoly(field, std::move(quo)), FqPoly(field, std::move(rem))};
}

FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }
FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

FqPoly exact_div(const FqPoly& a, const FqPoly& b) {
    if (b.is_one()) return a;
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::logic_error("exact_div: inexact polynomial division");
    return quo;
}

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return (a * b) % m; }

FqPoly powmod(FqPoly base, std::uint64_t k, const FqPoly& m) {
    FqPoly result = FqPoly::one(m.field()) % m;
    base = base % m;
    while (k > 0) {
        if (k & 1) result = mulmod(result, base, m);
        k >>= 1;
        if (k > 0) base = mulmod(base, base, m);
    }
    return result;
}

FqPoly powmod(FqPoly base, const mpz_class& k, const FqPoly& m) {
    FqPoly result = FqPoly::one(m.field()) % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(k.get_mpz_t(), i)) result = mulmod(result, base, m);
    }
    return result;
}

}  // namespace drinfeld
