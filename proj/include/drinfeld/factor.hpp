#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/fq_poly.hpp"

namespace drinfeld {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'd1f0'be11ull;

/// f = unit * prod factor_i^{mult_i}, factors monic irreducible and sorted ascending.
struct Factorization {
    FqElem unit;
    std::vector<std::pair<FqPoly, unsigned>> factors;

    [[nodiscard]] FqPoly expand(const FieldPtr& field) const;
    /// Number of monic divisors, saturating at the given cap.
    [[nodiscard]] std::uint64_t divisor_count(std::uint64_t cap = UINT64_MAX) const;
};

/// Squarefree split, distinct-degree split, then Cantor-Zassenhaus equal-degree splitting
/// driven by a seeded generator. Throws std::invalid_argument on f = 0.
Factorization factor_univariate(const FqPoly& f, std::uint64_t seed = kDefaultSeed);

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& f);

/// Rabin test over F_{q^s}.
bool is_irreducible(const FqPoly& f);

/// All monic divisors of the factored polynomial, ascending.
std::vector<FqPoly> monic_divisors(const Factorization& fact, const FieldPtr& field);

}  // namespace drinfeld
