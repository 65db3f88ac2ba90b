#include "drinfeld/text.hpp"

#include <cctype>
#include <charconv>

namespace drinfeld {

namespace {

class Parser {
public:
    Parser(std::string_view text, FieldPtr field) : s_(text), field_(std::move(field)) {}

    KPoly parse_all() {
        KPoly v = expr();
        skip();
        if (pos_ != s_.size()) fail("expected an operator or end of input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    KPoly expr() {
        KPoly v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    KPoly term() {
        KPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const KPoly d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                if (!d.is_constant()) throw ParseError(at, "division only by z-free values");
                v = d.coeffs()[0].inverse() * v;
            } else {
                return v;
            }
        }
    }

    KPoly unary() {
        if (accept('-')) return -unary();
        return power();
    }

    KPoly power() {
        const KPoly base = atom();
        if (!accept('^')) return base;
        skip();
        const std::size_t at = pos_;
        bool negative = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(at, "expected an integer exponent");
        std::uint64_t e = 0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, e);
        if (res.ec != std::errc()) throw ParseError(at, "exponent out of range");
        if (!negative) return base.pow(e);
        if (!base.is_constant() || base.is_zero()) throw ParseError(at, "negative exponent needs a nonzero z-free base");
        return KPoly::constant(field_, base.coeffs()[0].pow(-static_cast<std::int64_t>(e)));
    }

    KPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("expected an integer, u, t, z or '('");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            KPoly v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t value = 0;
            const std::int64_t p = field_->characteristic();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                value = (value * 10 + (s_[pos_++] - '0')) % p;
            return constant(field_->from_int(value));
        }
        ++pos_;
        switch (c) {
            case 'u':
                if (field_->degree_over_prime() == 1) {
                    --pos_;
                    fail("'u' is not available when the constant field is prime");
                }
                return constant(field_->generator_u());
            case 't': return KPoly::constant(field_, RatFunc::t(field_));
            case 'z': return KPoly::variable(field_);
            default: --pos_; fail("expected an integer, u, t, z or '('");
        }
    }

    KPoly constant(FqElem c) const { return KPoly::constant(field_, RatFunc::constant(field_, c)); }

    std::string_view s_;
    FieldPtr field_;
    std::size_t pos_ = 0;
};

RatFunc z_free(const KPoly& v, std::string_view kind) {
    if (!v.is_constant()) throw ParseError(0, std::string(kind) + " must not involve z");
    return v.is_zero() ? RatFunc(v.field()) : v.coeffs()[0];
}

bool needs_parens(const std::string& s) { return s.find_first_of("+-/") != std::string::npos; }

std::string monomial(const std::string& coeff, bool is_one, char var, std::size_t k) {
    std::string mono;
    if (k >= 1) mono = std::string(1, var);
    if (k >= 2) mono += "^" + std::to_string(k);
    if (k == 0) return coeff;
    if (is_one) return mono;
    return (needs_parens(coeff) ? "(" + coeff + ")" : coeff) + "*" + mono;
}

std::string factor_product(const Factorization& f) {
    std::string out;
    for (const auto& [P, e] : f.factors) {
        if (!out.empty()) out += "*";
        const std::string s = render(P);
        out += (needs_parens(s) ? "(" + s + ")" : s);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

ParamPoly parse_parampoly(std::string_view text, const FieldPtr& field) { return Parser(text, field).parse_all(); }

RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field) {
    return z_free(parse_parampoly(text, field), "a function-field element");
}

FqPoly parse_fqpoly(std::string_view text, const FieldPtr& field) {
    const RatFunc x = parse_ratfunc(text, field);
    if (!x.is_polynomial()) throw ParseError(0, "expected a polynomial in t");
    return x.num();
}

FqElem parse_constant(std::string_view text, const FieldPtr& field) {
    const RatFunc x = parse_ratfunc(text, field);
    if (!x.is_constant()) throw ParseError(0, "expected a constant of F_{q^s}");
    return x.constant_value();
}

Place parse_place(std::string_view text, const FieldPtr& field) {
    if (text == "inf" || text == "infinity") return Place::infinity();
    const FqPoly P = parse_fqpoly(text, field);
    try {
        return Place::finite(P);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("place: ") + e.what());
    }
}

FamilyModule parse_family(std::string_view text, const FieldPtr& field) {
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, ParamPoly>> gs;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find(';', offset);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(offset, end - offset);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError(offset, "expected key=value in family");
        std::string_view key = item.substr(0, eq);
        while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
        while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
        const std::string_view value = item.substr(eq + 1);
        if (key == "r") {
            std::string v(value);
            try {
                rank = std::stoul(v);
            } catch (const std::exception&) {
                throw ParseError(offset + eq + 1, "expected an integer rank");
            }
        } else if (key.size() >= 2 && key[0] == 'g') {
            std::size_t idx = 0;
            const auto res = std::from_chars(key.data() + 1, key.data() + key.size(), idx);
            if (res.ec != std::errc() || res.ptr != key.data() + key.size() || idx == 0)
                throw ParseError(offset, "expected g<i> with i >= 1");
            try {
                gs.emplace_back(idx, parse_parampoly(value, field));
            } catch (const ParseError& e) {
                throw ParseError(offset + eq + 1 + e.position(), e.what());
            }
        } else {
            throw ParseError(offset, "unknown family key");
        }
        offset = end + 1;
    }
    if (rank < 2) throw ParseError(0, "family needs r >= 2");
    std::vector<ParamPoly> g(rank - 1, ParamPoly(field));
    for (auto& [i, P] : gs) {
        if (i >= rank) throw ParseError(0, "g" + std::to_string(i) + " exceeds the rank");
        g[i - 1] = std::move(P);
    }
    return FamilyModule(field, rank, std::move(g));
}

std::string render(const FqElem& c) {
    const auto d = c.digits();
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        const std::string digit = std::to_string(d[i]);
        if (i == 0) out += digit;
        else out += (d[i] == 1 ? "" : digit + "*") + (i == 1 ? std::string("u") : "u^" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

std::string render(const FqPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f.coeff(i) == 0) continue;
        if (!out.empty()) out += "+";
        out += monomial(render(f.coeff_elem(i)), f.coeff(i) == 1, 't', i);
    }
    return out;
}

std::string render(const RatFunc& x) {
    if (x.is_polynomial()) return render(x.num());
    return "(" + render(x.num()) + ")/(" + render(x.den()) + ")";
}

std::string render(const KPoly& P) {
    if (P.is_zero()) return "0";
    std::string out;
    for (std::size_t i = P.size(); i-- > 0;) {
        const RatFunc& c = P.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        out += monomial(render(c), c.is_one(), 'z', i);
    }
    return out;
}

std::string render(const Place& v) { return v.is_infinity() ? "inf" : render(v.poly()); }

std::string render(const Rational& x) { return x.get_str(); }

std::string render(const Degree& d) { return d.is_neg_inf() ? "-inf" : std::to_string(d.value()); }

std::string render_family(const FamilyModule& F) {
    std::string out = "r=" + std::to_string(F.rank());
    for (std::size_t i = 1; i < F.rank(); ++i)
        if (!F.g(i).is_zero()) out += ";g" + std::to_string(i) + "=" + render(F.g(i));
    return out;
}

std::string render_factored(const RatFunc& x, std::uint64_t seed) {
    if (x.is_zero()) return "0";
    const Factorization fn = factor_univariate(x.num(), seed);
    std::string num = factor_product(fn);
    if (!fn.unit.is_one()) {
        const std::string u = render(fn.unit);
        const std::string us = needs_parens(u) ? "(" + u + ")" : u;
        num = num.empty() ? us : us + "*" + num;
    }
    if (num.empty()) num = "1";
    if (x.den().is_one()) return num;
    return num + "/(" + factor_product(factor_univariate(x.den(), seed)) + ")";
}

}  // namespace drinfeld
