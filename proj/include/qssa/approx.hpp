#ifndef QSSA_APPROX_HPP
#define QSSA_APPROX_HPP

/**
 * @file approx.hpp
 * @brief Closed-form matched-asymptotic approximations of (S, C) or (T, C),
 *        T = S + C, for the standard (epsilon -> 0) and reverse (epsilon -> inf)
 *        quasi-steady-state regimes.
 *
 * Every approximation comes as three curves: the inner (boundary-layer)
 * solution valid for t of order t1, the outer solution valid for t of order t2,
 * and the uniform composite inner + outer - L, where L is the common limit of
 * the two in the overlap region.
 *
 * Standard regime, free substrate, with W the principal Lambert W branch:
 *
 *     S_un(t) = K_M W( (S0/K_M) exp((S0 - k2 A2 t)/K_M) )
 *     C_un(t) = A2 W/(1 + W) + (C0 - A2 S0/(K_M + S0)) exp(-k1 (K_M + S0) t)
 *
 * Reverse regime, free substrate:
 *
 *     S_un(t) = S0 exp(-k1 A2 t)
 *     C_un(t) = C0 exp(-k2 t) + S0 (exp(-k2 t) - exp(-k1 A2 t))
 *
 * The total-substrate forms replace S0 by T0 = S0 + C0.
 */

#include <memory>
#include <string_view>

#include "qssa/kinetics.hpp"

namespace qssa {

enum class CurveRegime { Standard, Reverse, Blended };
enum class Approach { Free, Total };
enum class Layer { Inner, Outer, Uniform };

/**
 * The standard-regime total-substrate composite is published with boundary-layer
 * coefficient (T0 - A2 T0/(K_M + T0)); the inner solution it is built from has
 * (C0 - A2 T0/(K_M + T0)). AsPrinted keeps the published form, InnerConsistent
 * the one that satisfies uniform = inner + outer - L.
 */
enum class TotalVariant { AsPrinted, InnerConsistent };

std::string_view to_string(CurveRegime regime) noexcept;
std::string_view to_string(Approach approach) noexcept;
std::string_view to_string(Layer layer) noexcept;

/// A point of an approximation: `first` is S for the free approach and T for the total one.
struct CurvePoint {
    double first = 0.0;
    double c = 0.0;
};

/// Immutable closed-form curve, evaluable at any t >= 0.
class ApproxCurve {
public:
    CurvePoint operator()(double t) const;

    CurveRegime regime() const noexcept { return regime_; }
    Approach approach() const noexcept { return approach_; }
    Layer layer() const noexcept { return layer_; }
    TotalVariant variant() const noexcept { return variant_; }

    /// Common limit L of inner and outer curves in the overlap region.
    CurvePoint matching_limit() const noexcept;
    /// Matching constant ell of the outer solution, in units of A1.
    double matching_constant() const noexcept;
    /// Weight on the reverse-regime curve; only meaningful for blended curves.
    double blend_weight() const noexcept { return weight_; }

    struct Constants {
        double k1, k2, k_m, a1, a2, s0, c0;
        friend bool operator==(const Constants&, const Constants&) = default;
    };
    const Constants& constants() const noexcept { return k_; }

private:
    friend struct ApproxSet;
    friend ApproxCurve blend(double, const ApproxCurve&, const ApproxCurve&);

    ApproxCurve(CurveRegime regime, Approach approach, Layer layer, TotalVariant variant,
                const Constants& k);

    CurvePoint standard(double t) const;
    CurvePoint reverse(double t) const;

    CurveRegime regime_;
    Approach approach_;
    Layer layer_;
    TotalVariant variant_;
    Constants k_;
    double x0_;  // S0 (free) or T0 (total)
    double weight_ = 0.0;
    std::shared_ptr<const ApproxCurve> s_part_;
    std::shared_ptr<const ApproxCurve> r_part_;
};

struct ApproxSet {
    ApproxCurve inner;
    ApproxCurve outer;
    ApproxCurve uniform;

    static ApproxSet make(CurveRegime regime, Approach approach, TotalVariant variant,
                          const RateConstants& rates, const InitialState& init);
};

/// Standard regime, free substrate. @throws NotApplicableError unless a1 > 0 and a2 > 0.
ApproxSet sqssa_free(const RateConstants& rates, const InitialState& init);

/// Standard regime, total substrate. @throws NotApplicableError unless a1 > 0 and a2 > 0.
ApproxSet sqssa_total(const RateConstants& rates, const InitialState& init,
                      TotalVariant variant = TotalVariant::AsPrinted);

/// Reverse regime, free substrate. @throws NotApplicableError unless a1 > 0 and a2 > 0.
ApproxSet rqssa_free(const RateConstants& rates, const InitialState& init);

/// Reverse regime, total substrate. @throws NotApplicableError unless a1 > 0 and a2 > 0.
ApproxSet rqssa_total(const RateConstants& rates, const InitialState& init);

/**
 * @brief eps/(1+eps) * r_curve + (1 - eps/(1+eps)) * s_curve, pointwise.
 *
 * Both inputs must be uniform curves of the same approach built from the same
 * constants. eps = +inf returns r_curve's values.
 * @throws std::invalid_argument on mismatched inputs or eps < 0.
 */
ApproxCurve blend(double eps, const ApproxCurve& s_curve, const ApproxCurve& r_curve);

/// Michaelis-Menten rate k2 a2 s / (k_m + s).
double mm_rate(double s, const RateConstants& rates, const DerivedConstants& dc);

/// Linear reverse-regime rate k1 a2 s.
double rqssa_rate(double s, const RateConstants& rates, const DerivedConstants& dc);

/// Reaction rate of one regime, as a function of [S] or of time along the free uniform curve.
class RateCurve {
public:
    /// @throws NotApplicableError for a Blended regime or a1 = 0 / a2 = 0.
    RateCurve(CurveRegime regime, const RateConstants& rates, const InitialState& init);

    CurveRegime regime() const noexcept { return regime_; }
    double at_substrate(double s) const;
    double at_time(double t) const;

private:
    CurveRegime regime_;
    RateConstants rates_;
    DerivedConstants dc_;
    ApproxCurve substrate_;
};

}  // namespace qssa

#endif  // QSSA_APPROX_HPP
