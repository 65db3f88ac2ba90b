#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinfeld {

/// Parameters of the constant field F_{q^s} = F_p[u]/(modulus), q = p^e.
struct FieldConfig {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t s = 1;
    /// Monic modulus over F_p, coefficients low to high, degree e*s. Empty selects the default.
    std::vector<std::uint32_t> modulus;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// Element of F_{q^s}. Only valid while its field is alive.
class FqElem {
public:
    FqElem() = default;
    FqElem(const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {}

    [[nodiscard]] std::uint32_t code() const { return code_; }
    [[nodiscard]] const GaloisField& field() const { return *field_; }
    /// Coordinates in the F_p-basis 1, u, u^2, ...; always e*s entries.
    [[nodiscard]] std::vector<std::uint32_t> digits() const;

    [[nodiscard]] bool is_zero() const { return code_ == 0; }
    [[nodiscard]] bool is_one() const { return code_ == 1; }
    [[nodiscard]] bool in_base_field() const;  // x^q == x
    [[nodiscard]] FqElem inverse() const;
    [[nodiscard]] FqElem pow(std::uint64_t k) const;
    [[nodiscard]] FqElem frobenius() const;  // x^q

    friend FqElem operator+(FqElem a, FqElem b);
    friend FqElem operator-(FqElem a, FqElem b);
    friend FqElem operator-(FqElem a);
    friend FqElem operator*(FqElem a, FqElem b);
    friend FqElem operator/(FqElem a, FqElem b);
    friend bool operator==(FqElem a, FqElem b) { return a.code_ == b.code_; }

private:
    const GaloisField* field_ = nullptr;
    std::uint32_t code_ = 0;
};

/// Table-driven arithmetic on F_{p^k}, k = e*s. Elements are encoded as
/// integers sum d_i p^i over their F_p-coordinates d_i.
class GaloisField {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Validates the config (prime p, irreducible monic modulus) and builds the tables.
    static FieldPtr make(FieldConfig config);

    [[nodiscard]] const FieldConfig& config() const { return config_; }
    [[nodiscard]] std::uint32_t characteristic() const { return config_.p; }
    /// Size q = p^e of the operator field F_q.
    [[nodiscard]] std::uint64_t q() const { return q_; }
    /// Size q^s of the working constant field.
    [[nodiscard]] std::uint32_t order() const { return order_; }
    [[nodiscard]] std::uint32_t degree_over_prime() const { return k_; }

    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (config_.p == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * order_ + b];
        return add_digits(a, b);
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table_[b]); }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
    [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
    [[nodiscard]] std::uint32_t log(std::uint32_t a) const { return log_[a]; }
    [[nodiscard]] std::uint32_t exp(std::uint32_t k) const { return exp_[k]; }
    [[nodiscard]] std::uint32_t frobenius_q(std::uint32_t a) const { return frob_q_[a]; }
    /// Inverse of x -> x^p.
    [[nodiscard]] std::uint32_t pth_root(std::uint32_t a) const;
    [[nodiscard]] bool in_base_field(std::uint32_t a) const { return frob_q_[a] == a; }

    [[nodiscard]] FqElem elem(std::uint32_t code) const { return FqElem(this, code); }
    [[nodiscard]] FqElem zero() const { return elem(0); }
    [[nodiscard]] FqElem one() const { return elem(1); }
    /// Image of the integer n in F_p.
    [[nodiscard]] FqElem from_int(std::int64_t n) const;
    /// The class of u in F_p[u]/(modulus).
    [[nodiscard]] FqElem generator_u() const { return elem(u_code_); }
    [[nodiscard]] FqElem from_digits(const std::vector<std::uint32_t>& digits) const;
    [[nodiscard]] std::vector<std::uint32_t> digits(std::uint32_t code) const;

private:
    explicit GaloisField(FieldConfig config);
    [[nodiscard]] std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
    [[nodiscard]] std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    FieldConfig config_;
    std::uint32_t k_ = 1;
    std::uint64_t q_ = 2;
    std::uint32_t order_ = 2;
    std::uint32_t u_code_ = 0;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> frob_q_;
};

bool is_prime(std::uint32_t n);

/// Rabin irreducibility test for a monic polynomial over F_p (coefficients low to high).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Lexicographically smallest monic irreducible of the given degree over F_p.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree);

}  // namespace drinfeld
