#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drinfeld/ore.hpp"
#include "drinfeld/place.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

/// log_q r_v(phi_t) = max(0, max_{i<r} (log|c_i|_v - log|c_r|_v)/(q^r - q^i)).
struct EscapeRadius {
    Rational log_rv;
};

EscapeRadius escape_radius(const DrinfeldModule& phi, const Place& v);

/// One-step image bound of the disk of radius r_v: max_i (log|c_i|_v + q^i log r_v).
Rational escape_envelope(const DrinfeldModule& phi, const Place& v);

/// A canonical height value: exact, or certified to lie in [lower, value].
struct HeightValue {
    enum class Kind { Exact, UpperBound };
    Kind kind = Kind::Exact;
    Rational value;
    Rational lower;

    static HeightValue exact(Rational v) { return {Kind::Exact, v, v}; }
    static HeightValue upper_bound(Rational upper, Rational lower = 0) {
        return {Kind::UpperBound, std::move(upper), std::move(lower)};
    }
    [[nodiscard]] bool is_exact() const { return kind == Kind::Exact; }
    [[nodiscard]] bool is_exact_zero() const { return is_exact() && value == 0; }
};

struct HeightBudget {
    std::size_t iterations = 32;
    /// Iteration stops once an iterate would exceed this degree in t.
    std::size_t max_degree = 4096;
};

/// Detailed outcome of following one orbit at one place.
struct LocalOrbit {
    enum class Outcome { Escaped, Cycle, Integral, Exhausted };
    Outcome outcome = Outcome::Exhausted;
    HeightValue height;
    /// Index of the iterate that escaped, cycled, or where the budget ran out.
    std::size_t steps = 0;
    Rational log_rv;
};

LocalOrbit local_orbit(const DrinfeldModule& phi, const Place& v, const RatFunc& x, const HeightBudget& budget = {});

/// lim log+|phi_{t^n}(x)|_v / q^{rn}, exact when the orbit escapes, cycles or stays in an
/// invariant integral disk; otherwise an upper bound.
HeightValue local_height(const DrinfeldModule& phi, const Place& v, const RatFunc& x, const HeightBudget& budget = {});

/// Places carrying a possibly nonzero local height: the support of the coefficients and x.
std::vector<Place> height_places(const DrinfeldModule& phi, const RatFunc& x);

/// Sum of local heights over height_places.
HeightValue canonical_height(const DrinfeldModule& phi, const RatFunc& x, const HeightBudget& budget = {});

struct TorsionCertificate {
    enum class Kind { Torsion, NonTorsion };
    Kind kind = Kind::Torsion;

    // Torsion: act(phi_f, x) = 0 with f = t^preperiod (t^period - 1), or f = t^preperiod when the orbit hits 0.
    std::optional<OperatorPoly> annihilator;
    std::size_t preperiod = 0;
    std::size_t period = 0;

    // NonTorsion: log|phi_{t^step}(x)|_place > log_rv.
    std::optional<Place> place;
    std::size_t step = 0;
    Rational escape_log;
    Rational log_rv;

    [[nodiscard]] bool is_torsion() const { return kind == Kind::Torsion; }
};

/// Terminating torsion decision: a torsion orbit revisits a value, a non-torsion orbit escapes
/// beyond r_v at some support place. Throws std::runtime_error if max_steps is reached.
TorsionCertificate is_torsion(const DrinfeldModule& phi, const RatFunc& x, std::size_t max_steps = 4096);

/// Re-checks a certificate by direct computation.
bool verify_certificate(const DrinfeldModule& phi, const RatFunc& x, const TorsionCertificate& cert);

}  // namespace drinfeld
