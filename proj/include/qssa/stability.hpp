#ifndef QSSA_STABILITY_HPP
#define QSSA_STABILITY_HPP

#include <array>

#include "qssa/kinetics.hpp"
#include "qssa/ode.hpp"

namespace qssa {

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Jacobian of the reduced (S, C) field at x.
Matrix2 jacobian(const ReducedState& x, const RateConstants& rates, double a2);

/// Real eigenvalues of the Jacobian at the origin, lambda_minus <= lambda_plus < 0.
struct EigenPair {
    double lambda_plus;
    double lambda_minus;
};

/// Discriminant (k1 a2 + k_{-1} + k2)^2 - 4 k1 k2 a2 in its sum-of-squares form
/// (k1 a2 + k_{-1} - k2)^2 + 4 k_{-1} k2, which is never negative.
double origin_discriminant(const RateConstants& rates, double a2);

/// @throws NotApplicableError if a2 <= 0.
EigenPair eigenvalues_at_origin(const RateConstants& rates, double a2);

/**
 * @brief Divergence of g * F with Dulac function g(s, c) = 1/(s c).
 *
 * Equals -k_{-1}/s^2 - k1 a2/c^2, negative everywhere in the open quadrant,
 * which rules out periodic orbits of the reduced system.
 * @throws DomainError unless s > 0 and c > 0.
 */
double dulac_divergence(const ReducedState& x, const RateConstants& rates, double a2);

/// Steady states of the full system: (0, a2, 0, a1) for a2 > 0. For a2 = 0
/// every (s, 0, 0, a1 - s) is steady and the returned state is the initial one.
FullState full_steady_state(const DerivedConstants& dc, const InitialState& init);

}  // namespace qssa

#endif  // QSSA_STABILITY_HPP
