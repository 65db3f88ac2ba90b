#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "drinfeld/capacity.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/family.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/paramsearch.hpp"
#include "drinfeld/place.hpp"
#include "drinfeld/roots.hpp"
#include "drinfeld/text.hpp"

namespace testing {

using namespace drinfeld;

inline FieldPtr gf(std::uint32_t p, std::uint32_t e = 1, std::uint32_t s = 1) {
    return GaloisField::make(FieldConfig{p, e, s, {}});
}

inline RatFunc K(const FieldPtr& f, const std::string& s) { return parse_ratfunc(s, f); }
inline FqPoly P(const FieldPtr& f, const std::string& s) { return parse_fqpoly(s, f); }
inline ParamPoly Z(const FieldPtr& f, const std::string& s) { return parse_parampoly(s, f); }
inline OperatorPoly op(const FieldPtr& f, const std::string& s) { return OperatorPoly(parse_fqpoly(s, f)); }
inline Place place(const FieldPtr& f, const std::string& s) { return parse_place(s, f); }

/// Codes of the subfield F_q inside F_{q^s}.
inline std::vector<std::uint32_t> base_codes(const FieldPtr& f) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < f->order(); ++c)
        if (f->in_base_field(c)) out.push_back(c);
    return out;
}

/// Plain Euclid over K, made monic.
inline KPoly kgcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen); }

    FqElem elem(const FieldPtr& f) { return f->elem(static_cast<std::uint32_t>(below(f->order()))); }
    FqElem nonzero(const FieldPtr& f) { return f->elem(static_cast<std::uint32_t>(1 + below(f->order() - 1))); }

    FqPoly poly(const FieldPtr& f, std::size_t max_deg) {
        FqPoly out(f);
        for (std::size_t i = 0; i <= max_deg; ++i) out = out + FqPoly::monomial(f, elem(f), i);
        return out;
    }
    FqPoly nonzero_poly(const FieldPtr& f, std::size_t max_deg) {
        for (;;) {
            FqPoly x = poly(f, max_deg);
            if (!x.is_zero()) return x;
        }
    }
    FqPoly base_poly(const FieldPtr& f, std::size_t max_deg) {
        const auto codes = base_codes(f);
        FqPoly out(f);
        for (std::size_t i = 0; i <= max_deg; ++i)
            out = out + FqPoly::monomial(f, f->elem(codes[below(codes.size())]), i);
        return out;
    }
    RatFunc ratfunc(const FieldPtr& f, std::size_t max_deg) { return RatFunc(poly(f, max_deg), nonzero_poly(f, max_deg)); }
    RatFunc nonzero_ratfunc(const FieldPtr& f, std::size_t max_deg) {
        return RatFunc(nonzero_poly(f, max_deg), nonzero_poly(f, max_deg));
    }
};

}  // namespace testing
