#ifndef QSSA_ODE_HPP
#define QSSA_ODE_HPP

/**
 * @file ode.hpp
 * @brief Mass-action right-hand sides, an adaptive Dormand-Prince 5(4)
 *        integrator and conservation monitors.
 *
 * The integrator here is the ground truth every closed-form approximation is
 * measured against, so its defaults are tight.
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qssa/errors.hpp"
#include "qssa/kinetics.hpp"

namespace qssa {

struct FullState {
    double s = 0.0;
    double e = 0.0;
    double c = 0.0;
    double p = 0.0;
};

struct ReducedState {
    double s = 0.0;
    double c = 0.0;
};

/// Time derivative of (S, E, C, P) under mass action.
FullState secp_rhs(const FullState& x, const RateConstants& k);

/// Time derivative of (S, C) after eliminating E = a2 - C and P = a1 - S - C.
ReducedState sc_rhs(const ReducedState& x, const RateConstants& k, double a2);

// ---------------------------------------------------------------------------
// Generic adaptive integrator
// ---------------------------------------------------------------------------

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double initial_step = 0.0;  ///< 0 selects t_end * 1e-6
    double max_step = 0.0;      ///< 0 means unbounded
    std::size_t max_steps = 50'000'000;
    /// When non-empty, the solution is recorded exactly at these times
    /// (strictly increasing, in (0, t_end]) instead of at every accepted step.
    std::vector<double> output_times;
};

struct IntegratorStats {
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
};

template <std::size_t N>
struct OdeSolution {
    std::vector<double> times;
    std::vector<std::array<double, N>> states;
    IntegratorStats stats;
};

/**
 * @brief Embedded explicit Runge-Kutta 5(4) (Dormand-Prince) with PI step control.
 *
 * @param rhs  callable `void(double t, const std::array<double,N>& y, std::array<double,N>& dydt)`
 * @throws StiffnessError when the step size underflows or max_steps is exhausted.
 */
template <std::size_t N, class Rhs>
OdeSolution<N> integrate_dopri5(Rhs&& rhs, const std::array<double, N>& y0, double t_end,
                                const OdeOptions& opt);

// ---------------------------------------------------------------------------
// Enzyme system
// ---------------------------------------------------------------------------

enum class SystemKind { Full, Reduced };

struct Trajectory {
    SystemKind system = SystemKind::Full;
    std::vector<double> t;
    std::vector<FullState> x;  ///< E and P reconstructed from conservation for the reduced system
    IntegratorStats stats;
    double max_conservation_residual = 0.0;

    std::size_t size() const noexcept { return t.size(); }
};

struct IntegrateOptions {
    double rel_tol = 1e-10;
    /// Absolute tolerance; empty selects 1e-14 * a1 (or 1e-14 * a2 if a1 = 0).
    std::optional<double> abs_tol;
    /// Exact output times; empty records every accepted step (at least 400 of them).
    std::vector<double> output_times;
};

/**
 * @brief Integrate the full (S,E,C,P) or reduced (S,C) system forward from t = 0.
 *
 * Negative excursions smaller than abs_tol are clamped to 0 in the returned
 * samples only; larger ones raise FeasibilityError.
 * @throws std::invalid_argument for t_end <= 0 or nonpositive tolerances.
 * @throws StiffnessError if the step size underflows.
 */
Trajectory integrate(SystemKind system, const RateConstants& rates, const InitialState& init,
                     double t_end, const IntegrateOptions& options = {});

struct ConservationResidual {
    double substrate;  ///< |s + c + p - a1| / max(a1, floor)
    double enzyme;     ///< |e + c - a2| / max(a2, floor)
};

std::vector<ConservationResidual> conservation_residuals(const Trajectory& traj,
                                                         const DerivedConstants& dc);

double max_conservation_residual(std::span<const ConservationResidual> residuals);

}  // namespace qssa

#include "qssa/detail/dopri5.ipp"

#endif  // QSSA_ODE_HPP
