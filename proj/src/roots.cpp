#include "drinfeld/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drinfeld {

namespace {

// Primitive integral form: P * L / content as polynomials over F_{q^s}[t].
std::vector<FqPoly> primitive_integral(const KPoly& P) {
    const FqPoly L = common_denominator(P);
    std::vector<FqPoly> a;
    a.reserve(P.size());
    for (const auto& c : P.coeffs()) {
        if (c.is_zero()) {
            a.emplace_back(P.field());
            continue;
        }
        a.push_back(c.num() * exact_div(L, c.den()));
    }
    FqPoly content(P.field());
    for (const auto& x : a)
        if (!x.is_zero()) content = content.is_zero() ? x.monic() : gcd(content, x);
    if (!content.is_one())
        for (auto& x : a)
            if (!x.is_zero()) x = exact_div(x, content);
    return a;
}

}  // namespace

RootSearch rational_roots(const KPoly& P, const RootSearchOptions& options) {
    if (P.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    const FieldPtr& field = P.field();
    RootSearch out;

    std::size_t low = 0;
    while (P.coeffs()[low].is_zero()) ++low;
    if (low > 0) out.roots.emplace_back(field);
    std::vector<RatFunc> shifted(P.coeffs().begin() + static_cast<std::ptrdiff_t>(low), P.coeffs().end());
    const KPoly R(field, std::move(shifted));
    if (R.deg() == 0) return out;

    const auto A = primitive_integral(R);
    const std::size_t d = A.size() - 1;
    if (d == 1) {
        out.roots.push_back(RatFunc(-A[0], A[1]));
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }

    const Factorization f0 = factor_univariate(A[0], options.seed);
    const Factorization fd = factor_univariate(A[d], options.seed);
    const std::uint64_t budget = options.divisor_budget;
    if (f0.divisor_count(budget + 1) > budget || fd.divisor_count(budget + 1) * f0.divisor_count(budget + 1) > budget) {
        out.status = RootSearch::Status::BudgetExceeded;
        return out;
    }
    const auto num_divs = monic_divisors(f0, field);
    const auto den_divs = monic_divisors(fd, field);
    const GaloisField& F = *field;

    // necessary condition modulo small irreducibles pi: sum A_i (c U)^i w^{d-i} = 0 mod pi
    std::vector<FqPoly> moduli;
    {
        double bits = 0;
        const double per_degree = std::log2(static_cast<double>(F.order()));
        for (std::size_t deg = 1; deg <= 4 && bits < 48; ++deg) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < deg; ++i) count *= F.order();
            for (std::uint64_t k = 0; k < count && bits < 48; ++k) {
                FqPoly m = FqPoly::monomial(field, F.one(), deg);
                std::uint64_t x = k;
                for (std::size_t i = 0; i < deg; ++i, x /= F.order())
                    m += FqPoly::monomial(field, F.elem(static_cast<std::uint32_t>(x % F.order())), i);
                if (!is_irreducible(m)) continue;
                moduli.push_back(m);
                bits += per_degree * static_cast<double>(deg);
            }
        }
    }
    std::vector<std::vector<FqPoly>> Amod(moduli.size());
    for (std::size_t j = 0; j < moduli.size(); ++j)
        for (std::size_t i = 0; i <= d; ++i) Amod[j].push_back(A[i] % moduli[j]);
    auto passes_filter = [&](const FqPoly& U, const FqPoly& w, std::uint32_t c) {
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            const FqPoly& m = moduli[j];
            const FqPoly cu = F.elem(c) * (U % m);
            const FqPoly wm = w % m;
            // Horner in the ratio cu/w, homogenized: acc = acc*cu + A_i w^{d-i}
            FqPoly acc(field), wp = FqPoly::one(field);
            std::vector<FqPoly> wpows(d + 1);
            for (std::size_t i = 0; i <= d; ++i) {
                wpows[i] = wp;
                wp = mulmod(wp, wm, m);
            }
            for (std::size_t i = d + 1; i-- > 0;) acc = (mulmod(acc, cu, m) + mulmod(Amod[j][i], wpows[d - i], m)) % m;
            if (!acc.is_zero()) return false;
        }
        return true;
    };

    for (const auto& w : den_divs) {
        // w^{d-i} powers, built on the first candidate
        std::vector<FqPoly> wpow;
        for (const auto& U : num_divs) {
            ++out.pairs_examined;
            if (!w.is_one() && !U.is_one() && !gcd(U, w).is_one()) continue;
            bool candidate = false;
            for (std::uint32_t c = 1; c < F.order() && !candidate; ++c) candidate = passes_filter(U, w, c);
            if (!candidate) continue;
            if (wpow.empty()) {
                wpow.assign(d + 1, FqPoly::one(field));
                for (std::size_t i = 1; i <= d; ++i) wpow[i] = wpow[i - 1] * w;
            }
            // B_i = A_i U^i w^{d-i}; root c*U/w requires sum B_i c^i = 0
            std::vector<FqPoly> B(d + 1, FqPoly(field));
            FqPoly Upow = FqPoly::one(field);
            for (std::size_t i = 0; i <= d; ++i) {
                if (!A[i].is_zero()) B[i] = A[i] * Upow * wpow[d - i];
                if (i < d) Upow = Upow * U;
            }
            // filter c through one t-coefficient, then verify in full
            std::size_t k = 0;
            for (;; ++k) {
                bool any = false;
                for (const auto& b : B) any = any || b.coeff(k) != 0;
                if (any) break;
            }
            for (std::uint32_t c = 1; c < F.order(); ++c) {
                std::uint32_t acc = 0;
                for (std::size_t i = d + 1; i-- > 0;) acc = F.add(F.mul(acc, c), B[i].coeff(k));
                if (acc != 0) continue;
                FqPoly total(field);
                for (std::size_t i = 0; i <= d; ++i) {
                    if (!B[i].is_zero()) total += F.elem(F.pow(c, i)) * B[i];
                }
                if (total.is_zero()) out.roots.push_back(RatFunc(F.elem(c) * U, w));
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace drinfeld
