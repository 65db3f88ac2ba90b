#include "drinfeld/place.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "drinfeld/factor.hpp"

namespace drinfeld {

Place Place::finite(FqPoly P) {
    if (P.is_constant() || !P.is_monic()) throw std::invalid_argument("place polynomial must be monic and non-constant");
    if (!is_irreducible(P)) throw std::invalid_argument("place polynomial must be irreducible");
    return Place(std::move(P));
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
    return *a.poly_ <=> *b.poly_;
}

std::uint64_t multiplicity(const FqPoly& f, const FqPoly& P) {
    std::uint64_t k = 0;
    FqPoly g = f;
    if (P.size() == 2 && P.coeff(0) == 0) return g.low_order();  // P = t
    for (;;) {
        auto [quo, rem] = divmod(g, P);
        if (!rem.is_zero()) return k;
        g = std::move(quo);
        ++k;
    }
}

std::optional<std::int64_t> ord_at(const RatFunc& alpha, const Place& v) {
    if (alpha.is_zero()) return std::nullopt;
    if (v.is_infinity())
        return static_cast<std::int64_t>(alpha.den().deg()) - static_cast<std::int64_t>(alpha.num().deg());
    const std::int64_t n = static_cast<std::int64_t>(multiplicity(alpha.num(), v.poly()));
    if (n > 0) return n;
    return -static_cast<std::int64_t>(multiplicity(alpha.den(), v.poly()));
}

LogAbs log_abs(const RatFunc& alpha, const Place& v) {
    const auto ord = ord_at(alpha, v);
    if (!ord) return LogAbs::neg_inf();
    return LogAbs(make_rational(-static_cast<std::int64_t>(v.degree()) * *ord));
}

std::vector<Place> support_places(std::span<const RatFunc> elems, std::uint64_t seed) {
    std::set<FqPoly> primes;
    for (const auto& a : elems) {
        if (a.is_zero()) continue;
        for (const FqPoly* f : {&a.num(), &a.den()}) {
            if (f->is_constant()) continue;
            for (auto& [g, m] : factor_univariate(*f, seed).factors) primes.insert(g);
        }
    }
    std::vector<Place> out;
    for (const auto& g : primes) out.push_back(Place::finite(g));
    out.push_back(Place::infinity());
    return out;
}

Rational weil_height(const RatFunc& alpha) {
    if (alpha.is_zero()) return Rational(0);
    return Rational(static_cast<long>(alpha.size_degree()));
}

Rational weil_height_by_places(const RatFunc& alpha) {
    if (alpha.is_zero()) return Rational(0);
    Rational h = 0;
    const RatFunc single[] = {alpha};
    for (const auto& v : support_places(single)) {
        const LogAbs l = log_abs(alpha, v);
        if (l.value() > 0) h += l.value();
    }
    return h;
}

}  // namespace drinfeld
