#ifndef QSSA_KINETICS_HPP
#define QSSA_KINETICS_HPP

/**
 * @file kinetics.hpp
 * @brief Parameters of the single-substrate enzyme mechanism S + E <-> C -> E + P
 *        and every scalar quantity derived from them.
 *
 * Units are SI-consistent throughout: concentrations in molar, time in seconds.
 */

#include <optional>
#include <string_view>

namespace qssa {

/// Mass-action rate constants. All three are strictly positive and finite.
class RateConstants {
public:
    /// @throws std::invalid_argument if any constant is not a positive finite number.
    RateConstants(double k1, double k_minus1, double k2);

    double k1() const noexcept { return k1_; }              ///< 1/(M s)
    double k_minus1() const noexcept { return k_minus1_; }  ///< 1/s
    double k2() const noexcept { return k2_; }              ///< 1/s

    friend bool operator==(const RateConstants&, const RateConstants&) = default;

private:
    double k1_;
    double k_minus1_;
    double k2_;
};

/// Initial concentrations [S]0, [E]0, [C]0, [P]0, componentwise nonnegative.
class InitialState {
public:
    /// @throws std::invalid_argument on a negative or non-finite concentration.
    InitialState(double s0, double e0, double c0, double p0);

    double s0() const noexcept { return s0_; }
    double e0() const noexcept { return e0_; }
    double c0() const noexcept { return c0_; }
    double p0() const noexcept { return p0_; }

    friend bool operator==(const InitialState&, const InitialState&) = default;

private:
    double s0_;
    double e0_;
    double c0_;
    double p0_;
};

/**
 * @brief Constants derived from the rates and the initial data.
 *
 * Quantities that need A2 > 0 in a denominator (eta, t2_s, t1_r) are empty
 * when A2 = 0, the zero-enzyme case in which the solution is constant.
 */
struct DerivedConstants {
    double k_dis;    ///< k_{-1}/k1
    double k_vsc;    ///< k2/k1
    double k_m;      ///< k_dis + k_vsc
    double a1;       ///< s0 + c0 + p0, conserved substrate material
    double a2;       ///< e0 + c0, conserved enzyme material
    double a3;       ///< min{a1, a2, a1 a2 / k_m}, bound on C in the full system
    double a4;       ///< min{a1, a1 a2 / (k_m + a1)}, bound on C in the reduced system
    double epsilon;  ///< a2 / (k_m + a1)
    double sigma;    ///< a1 / k_m
    double rho;      ///< k_{-1} / k2
    std::optional<double> eta;  ///< a1 / a2

    double t1_s;                 ///< fast standard-regime scale 1/(k1 (k_m + a1))
    std::optional<double> t2_s;  ///< slow standard-regime scale 1/(k1 a2)
    std::optional<double> t1_r;  ///< fast reverse-regime scale a1/(k1 (k_m + a1) a2)
    double t2_r;                 ///< slow reverse-regime scale 1/(k1 (k_m + a1))
};

DerivedConstants derive_constants(const RateConstants& rates, const InitialState& init);

enum class RegimeKind { StandardQSSA, ReverseQSSA, Intermediate };

std::string_view to_string(RegimeKind kind) noexcept;

struct Regime {
    RegimeKind kind;
    double epsilon;
};

struct RegimeThresholds {
    double eps_lo = 0.1;
    double eps_hi = 10.0;
};

/**
 * @brief Quantitative reading of the "much smaller" / "much larger" conditions on epsilon.
 *
 * epsilon <= eps_lo is the standard regime, epsilon >= eps_hi the reverse one.
 * @throws NotApplicableError when a1 = 0 or a2 = 0.
 * @throws std::invalid_argument unless 0 < eps_lo < eps_hi.
 */
Regime classify_regime(const DerivedConstants& dc, RegimeThresholds thresholds = {});

/// The (fast, slow) time-scale pair belonging to a regime. Intermediate uses the
/// standard pair when epsilon <= 1 and the reverse pair otherwise.
struct TimeScales {
    double fast;
    double slow;
};

/// @throws NotApplicableError if the pair is undefined (a2 = 0).
TimeScales regime_time_scales(const DerivedConstants& dc, RegimeKind kind);

}  // namespace qssa

#endif  // QSSA_KINETICS_HPP
