#pragma once

#include <cstdint>
#include <vector>

#include "drinfeld/factor.hpp"
#include "drinfeld/k_poly.hpp"

namespace drinfeld {

struct RootSearchOptions {
    /// Maximum number of (numerator divisor, denominator divisor) pairs to try.
    std::uint64_t divisor_budget = 100'000;
    std::uint64_t seed = kDefaultSeed;
};

/// Outcome of a search for roots in K. A BudgetExceeded result is incomplete: the listed
/// roots are genuine but others may exist.
struct RootSearch {
    enum class Status { Complete, BudgetExceeded };
    Status status = Status::Complete;
    std::vector<RatFunc> roots;  // sorted, distinct
    std::uint64_t pairs_examined = 0;

    [[nodiscard]] bool complete() const { return status == Status::Complete; }
};

/// All roots of P lying in F_{q^s}(t), by rational-root enumeration over F_{q^s}[t].
/// Throws std::invalid_argument for P = 0.
RootSearch rational_roots(const KPoly& P, const RootSearchOptions& options = {});

}  // namespace drinfeld
