#include "drinfeld/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace drinfeld {

namespace {

using FactorList = std::vector<std::pair<FqPoly, unsigned>>;

void squarefree_rec(const FqPoly& f, unsigned scale, FactorList& out) {
    if (f.is_constant()) return;
    const FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(f.pth_root(), scale * f.F().characteristic(), out);
        return;
    }
    FqPoly c = gcd(f, d);
    FqPoly w = exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        const FqPoly y = gcd(w, c);
        const FqPoly fac = exact_div(w, y);
        if (!fac.is_one()) out.emplace_back(fac, i * scale);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (!c.is_one()) squarefree_rec(c.pth_root(), scale * f.F().characteristic(), out);
}

FqPoly t_minus(const FqPoly& h) { return h - FqPoly::t(h.field()); }

std::vector<std::pair<FqPoly, std::size_t>> distinct_degree(FqPoly f) {
    std::vector<std::pair<FqPoly, std::size_t>> out;
    const FieldPtr& field = f.field();
    const std::uint64_t Q = field->order();
    FqPoly h = FqPoly::t(field) % f;
    for (std::size_t i = 1; f.size() > 2 * i; ++i) {
        h = powmod(h, Q, f);
        FqPoly g = gcd(f, t_minus(h));
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = exact_div(f, g);
            h = h % f;
        }
    }
    if (!f.is_constant()) out.emplace_back(f, f.deg());
    return out;
}

FqPoly random_poly(const FieldPtr& field, std::size_t deg_below, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
    std::vector<std::uint32_t> c(deg_below);
    for (auto& x : c) x = dist(rng);
    return FqPoly(field, std::move(c));
}

void equal_degree(const FqPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const FieldPtr& field = f.field();
    const std::uint32_t p = field->characteristic();
    const std::uint64_t Q = field->order();
    for (;;) {
        const FqPoly a = random_poly(field, f.deg(), rng);
        if (a.is_constant()) continue;
        FqPoly b;
        if (p == 2) {
            // trace from F_{Q^d} to F_2
            const std::uint32_t k = field->degree_over_prime();
            FqPoly term = a, acc = a;
            for (std::size_t i = 1; i < k * d; ++i) {
                term = mulmod(term, term, f);
                acc += term;
            }
            b = acc;
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), Q, d);
            e = (e - 1) / 2;
            b = powmod(a, e, f) - FqPoly::one(field);
        }
        const FqPoly g = gcd(b, f);
        if (!g.is_constant() && g.deg() < f.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

FqPoly Factorization::expand(const FieldPtr& field) const {
    FqPoly r = FqPoly::constant(field, unit);
    for (const auto& [fac, m] : factors) r = r * fac.pow(m);
    return r;
}

std::uint64_t Factorization::divisor_count(std::uint64_t cap) const {
    std::uint64_t n = 1;
    for (const auto& [fac, m] : factors) {
        if (n > cap / (m + 1)) return cap;
        n *= (m + 1);
    }
    return std::min(n, cap);
}

std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& f) {
    FactorList out;
    squarefree_rec(f.monic(), 1, out);
    return out;
}

Factorization factor_univariate(const FqPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
    std::mt19937_64 rng(seed);
    Factorization result{f.leading(), {}};
    std::map<FqPoly, unsigned> merged;
    for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : distinct_degree(sqf)) {
            std::vector<FqPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) merged[g] += mult;
        }
    }
    for (auto& [g, m] : merged) result.factors.emplace_back(g, m);
    return result;
}

bool is_irreducible(const FqPoly& f) {
    if (f.is_constant()) return false;
    const std::size_t n = f.deg();
    if (n == 1) return true;
    const FqPoly g = f.monic();
    const std::uint64_t Q = g.F().order();
    auto frob_iter = [&](std::size_t times) {
        FqPoly h = FqPoly::t(g.field()) % g;
        for (std::size_t i = 0; i < times; ++i) h = powmod(h, Q, g);
        return h;
    };
    if (!t_minus(frob_iter(n)).is_zero()) return false;
    std::size_t m = n;
    for (std::size_t r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        if (!gcd(t_minus(frob_iter(n / r)), g).is_one()) return false;
    }
    return true;
}

std::vector<FqPoly> monic_divisors(const Factorization& fact, const FieldPtr& field) {
    std::vector<FqPoly> divs{FqPoly::one(field)};
    for (const auto& [g, m] : fact.factors) {
        std::vector<FqPoly> next;
        for (const auto& d : divs) {
            FqPoly acc = d;
            next.push_back(acc);
            for (unsigned i = 0; i < m; ++i) {
                acc = acc * g;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace drinfeld
