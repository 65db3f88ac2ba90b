#include "drinfeld/galois_field.hpp"

#include <cmath>
#include <stdexcept>

namespace drinfeld {

namespace {

using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quo = r / new_r;
        std::int64_t tmp = t - quo * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quo * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

ModPoly mod_reduce(ModPoly a, const ModPoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return mod_reduce(std::move(r), m, p);
}

ModPoly mod_pow(ModPoly base, std::uint64_t k, const ModPoly& m, std::uint32_t p) {
    ModPoly result{1};
    base = mod_reduce(std::move(base), m, p);
    while (k > 0) {
        if (k & 1) result = mod_mul(result, base, m, p);
        base = mod_mul(base, base, m, p);
        k >>= 1;
    }
    return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod_reduce(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    ModPoly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const auto n = static_cast<std::uint32_t>(f.size() - 1);
    if (n == 1) return true;
    const ModPoly x{0, 1};
    auto frob_iter = [&](std::uint32_t times) {
        ModPoly h = x;
        for (std::uint32_t i = 0; i < times; ++i) h = mod_pow(h, p, f, p);
        return h;
    };
    auto minus_x = [&](ModPoly h) {
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        return h;
    };
    if (!minus_x(frob_iter(n)).empty()) return false;
    for (std::uint32_t r : prime_divisors(n)) {
        ModPoly g = gcd_mod(minus_x(frob_iter(n / r)), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree) {
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t c = 0; c < count; ++c) {
        ModPoly f(degree + 1, 0);
        std::uint64_t rest = c;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[degree] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint32_t> FqElem::digits() const { return field_->digits(code_); }
bool FqElem::in_base_field() const { return field_->in_base_field(code_); }
FqElem FqElem::inverse() const { return FqElem(field_, field_->inv(code_)); }
FqElem FqElem::pow(std::uint64_t k) const { return FqElem(field_, field_->pow(code_, k)); }
FqElem FqElem::frobenius() const { return FqElem(field_, field_->frobenius_q(code_)); }
FqElem operator+(FqElem a, FqElem b) { return FqElem(a.field_, a.field_->add(a.code_, b.code_)); }
FqElem operator-(FqElem a, FqElem b) { return FqElem(a.field_, a.field_->sub(a.code_, b.code_)); }
FqElem operator-(FqElem a) { return FqElem(a.field_, a.field_->neg(a.code_)); }
FqElem operator*(FqElem a, FqElem b) { return FqElem(a.field_, a.field_->mul(a.code_, b.code_)); }
FqElem operator/(FqElem a, FqElem b) {
    return FqElem(a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_)));
}

FieldPtr GaloisField::make(FieldConfig config) {
    if (!is_prime(config.p)) throw std::invalid_argument("characteristic p must be prime");
    if (config.e < 1 || config.s < 1) throw std::invalid_argument("e and s must be at least 1");
    const std::uint32_t k = config.e * config.s;
    if (config.modulus.empty()) config.modulus = default_modulus(config.p, k);
    ModPoly m = config.modulus;
    trim(m);
    if (m.size() != k + 1 || m.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e*s");
    for (auto c : m)
        if (c >= config.p) throw std::invalid_argument("modulus coefficients must lie in 0..p-1");
    if (!is_irreducible_mod_p(m, config.p)) throw std::invalid_argument("modulus is not irreducible over F_p");
    const double approx = std::pow(double(config.p), double(k));
    if (approx > double(kMaxOrder)) throw std::invalid_argument("constant field too large for table arithmetic");
    config.modulus = m;
    return FieldPtr(new GaloisField(std::move(config)));
}

GaloisField::GaloisField(FieldConfig config) : config_(std::move(config)) {
    const std::uint32_t p = config_.p;
    k_ = config_.e * config_.s;
    q_ = ipow(p, config_.e);
    order_ = static_cast<std::uint32_t>(ipow(p, k_));

    neg_table_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        auto d = digits(a);
        for (auto& x : d) x = (p - x) % p;
        neg_table_[a] = from_digits(d).code();
    }
    if (p != 2 && order_ <= 1024) {
        add_table_.resize(std::size_t(order_) * order_);
        for (std::uint32_t a = 0; a < order_; ++a)
            for (std::uint32_t b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digits(a, b);
    }

    // u is the class of the indeterminate; for k = 1 it is the root of the linear modulus.
    if (k_ == 1) {
        u_code_ = (p - config_.modulus[0]) % p;
    } else {
        u_code_ = p;
    }

    // primitive element: g^((Q-1)/r) != 1 for each prime r | Q-1
    const std::uint32_t group = order_ - 1;
    const auto primes = prime_divisors(group);
    auto slow_pow = [&](std::uint32_t g, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, g);
            g = slow_mul(g, g);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 1;
    for (std::uint32_t g = (order_ == 2 ? 1 : 2); g < order_; ++g) {
        bool primitive = true;
        for (auto r : primes)
            if (slow_pow(g, group / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = g;
            break;
        }
    }
    log_.assign(order_, 0);
    exp_.assign(2 * std::size_t(group) + 1, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
    for (std::uint32_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];

    frob_q_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) frob_q_[a] = pow(a, q_);
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = config_.p;
    std::uint32_t r = 0, scale = 1;
    while (a > 0 || b > 0) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
    ModPoly prod = mod_mul(digits(a), digits(b), config_.modulus, config_.p);
    prod.resize(k_, 0);
    return from_digits(prod).code();
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    const std::uint32_t group = order_ - 1;
    return exp_[(group - log_[a]) % group];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = order_ - 1;
    return exp_[static_cast<std::uint32_t>((std::uint64_t(log_[a]) * (k % group)) % group)];
}

std::uint32_t GaloisField::pth_root(std::uint32_t a) const { return pow(a, order_ / config_.p); }

FqElem GaloisField::from_int(std::int64_t n) const {
    const std::int64_t p = config_.p;
    return elem(static_cast<std::uint32_t>(((n % p) + p) % p));
}

FqElem GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t code = 0, scale = 1;
    for (std::size_t i = 0; i < d.size() && i < k_; ++i) {
        code += (d[i] % config_.p) * scale;
        scale *= config_.p;
    }
    return FqElem(this, code);
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = code % config_.p;
        code /= config_.p;
    }
    return d;
}

}  // namespace drinfeld
