#ifndef QSSA_SCALING_HPP
#define QSSA_SCALING_HPP

/**
 * @file scaling.hpp
 * @brief Nondimensionalization of polynomial ODE systems on a bounded feasible region.
 *
 * The procedure has three steps:
 *   1. identify a supremum bound for every dependent variable,
 *   2. scale each variable by its bound so it ranges over [0, 1],
 *   3. read candidate time scales off the rate groups that remain, and for each
 *      candidate list the dimensionless coefficients it leaves behind.
 *
 * Right-hand sides are numeric coefficient tables over monomials; no symbolic
 * algebra is involved.
 */

#include <string>
#include <utility>
#include <vector>

#include "qssa/kinetics.hpp"
#include "qssa/ode.hpp"

namespace qssa {

/// coefficient * prod_j x_j^exponents[j]
struct Term {
    std::vector<int> exponents;
    double coefficient;
};

struct BoundedSystem {
    std::vector<std::string> names;
    std::vector<double> bounds;                ///< supremum of each variable over the feasible region
    std::vector<std::vector<Term>> equations;  ///< d names[i]/dt = sum of equations[i]
    /**
     * Rate groups (1/time) declared by the modeller when gathering terms.
     * Empty selects the automatic rule: for each equation, the largest
     * |coefficient| among its linear terms after scaling.
     */
    std::vector<double> gathered_rates;
    /// Named dimensionless groups carried into the report unchanged.
    std::vector<std::pair<std::string, double>> named_groups;
};

struct TimeScaleCandidate {
    double time_scale;
    /// Per equation, per term: scaled coefficient multiplied by time_scale.
    std::vector<std::vector<double>> coefficients;
    /// Distinct |coefficient| values other than 1 (relative tolerance 1e-9), ascending.
    std::vector<double> groups;
};

struct ScalingReport {
    std::vector<std::string> names;
    std::vector<double> variable_scales;
    /// Coefficients (1/time) of the equations in the scaled variables.
    std::vector<std::vector<Term>> scaled_equations;
    std::vector<double> time_scales;  ///< ascending
    std::vector<TimeScaleCandidate> candidates;
    std::vector<double> separation_ratios;  ///< time_scales[i+1] / time_scales[i]
    bool gathering_declared = false;
    std::vector<std::pair<std::string, double>> named_groups;
};

/**
 * @throws DegenerateBoundError for a zero, negative or non-finite bound.
 * @throws std::invalid_argument for a malformed table (shape mismatch, non-finite
 *         coefficient, negative exponent) or when no time scale can be formed.
 */
ScalingReport scale_system(const BoundedSystem& sys);

/// The reduced (S, C) system bounded by (a1, a4), with the rate groups of the
/// given regime declared. Intermediate uses the automatic rule.
BoundedSystem sc_bounded_system(const RateConstants& rates, const DerivedConstants& dc,
                                RegimeKind regime);

/// S, I, R each bounded by the population n0.
BoundedSystem sir_bounded_system(double beta, double gamma, double n0);

enum class ScaleChoice { T1, T2 };

struct WeightedMonomial {
    int s_exponent;
    int c_exponent;
    double weight;
};

/// d(var)/dt_a = prefactor * sum(weight * S_a^i C_a^j)
struct ScaledEquation {
    double prefactor;
    std::vector<WeightedMonomial> terms;
};

/**
 * @brief The reduced system in scaled variables S_a = S/a1, C_a = C/c_scale,
 *        t_a = t/time_scale, in the grouped form of the asymptotic analysis.
 *
 * c_scale is epsilon*a1 in the standard regime and a1 in the reverse one, the
 * values a4 takes there. With these scales the grouped form is an exact
 * rewriting of the reduced system for any parameters.
 */
struct ScaledScSystem {
    RegimeKind regime;
    ScaleChoice choice;
    double time_scale;
    double s_scale;
    double c_scale;
    ScaledEquation ds;
    ScaledEquation dc;

    ReducedState rhs(const ReducedState& scaled) const;
    /// prefactor * weight for each term of the S (index 0) or C (index 1) equation.
    std::vector<double> effective(int equation) const;
};

/// @throws NotApplicableError for the Intermediate regime or a2 = 0.
ScaledScSystem scaled_sc_coefficients(const DerivedConstants& dc, RegimeKind regime,
                                      ScaleChoice choice);

}  // namespace qssa

#endif  // QSSA_SCALING_HPP
