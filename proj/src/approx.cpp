#include "qssa/approx.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qssa/errors.hpp"
#include "qssa/lambert_w.hpp"

namespace qssa {

std::string_view to_string(CurveRegime regime) noexcept {
    switch (regime) {
        case CurveRegime::Standard:
            return "sqssa";
        case CurveRegime::Reverse:
            return "rqssa";
        case CurveRegime::Blended:
            return "blend";
    }
    return "unknown";
}

std::string_view to_string(Approach approach) noexcept {
    return approach == Approach::Free ? "free" : "total";
}

std::string_view to_string(Layer layer) noexcept {
    switch (layer) {
        case Layer::Inner:
            return "inner";
        case Layer::Outer:
            return "outer";
        case Layer::Uniform:
            return "uniform";
    }
    return "unknown";
}

ApproxCurve::ApproxCurve(CurveRegime regime, Approach approach, Layer layer, TotalVariant variant,
                         const Constants& k)
    : regime_(regime),
      approach_(approach),
      layer_(layer),
      variant_(variant),
      k_(k),
      x0_(approach == Approach::Free ? k.s0 : k.s0 + k.c0) {}

CurvePoint ApproxCurve::operator()(double t) const {
    switch (regime_) {
        case CurveRegime::Standard:
            return standard(t);
        case CurveRegime::Reverse:
            return reverse(t);
        case CurveRegime::Blended: {
            const CurvePoint s = (*s_part_)(t);
            const CurvePoint r = (*r_part_)(t);
            return {weight_ * r.first + (1.0 - weight_) * s.first,
                    weight_ * r.c + (1.0 - weight_) * s.c};
        }
    }
    return {};
}

CurvePoint ApproxCurve::standard(double t) const {
    // Quasi-steady complex level reached at the end of the boundary layer.
    const double c_qs = k_.a2 * x0_ / (k_.k_m + x0_);
    const double layer_decay = std::exp(-k_.k1 * (k_.k_m + x0_) * t);

    if (layer_ == Layer::Inner) {
        return {x0_, c_qs + (k_.c0 - c_qs) * layer_decay};
    }

    // W( (x0/K_M) exp((x0 - k2 A2 t)/K_M) ), argument handled in log form; it
    // overflows for x0 >> K_M and underflows for large t.
    const double log_arg = std::log(x0_ / k_.k_m) + (x0_ - k_.k2 * k_.a2 * t) / k_.k_m;
    const double w = lambert_w0_from_log(log_arg);
    const CurvePoint outer{k_.k_m * w, k_.a2 * w / (1.0 + w)};
    if (layer_ == Layer::Outer) return outer;

    const bool printed_total = approach_ == Approach::Total && variant_ == TotalVariant::AsPrinted;
    const double layer_coefficient = (printed_total ? x0_ : k_.c0) - c_qs;
    return {outer.first, outer.c + layer_coefficient * layer_decay};
}

CurvePoint ApproxCurve::reverse(double t) const {
    const double fast = std::exp(-k_.k1 * k_.a2 * t);
    const double slow = std::exp(-k_.k2 * t);
    const double s0 = k_.s0;
    const double c0 = k_.c0;
    const double t0 = s0 + c0;

    if (approach_ == Approach::Free) {
        switch (layer_) {
            case Layer::Inner:
                return {s0 * fast, c0 + s0 * (1.0 - fast)};
            case Layer::Outer:
                return {0.0, t0 * slow};
            case Layer::Uniform:
                return {s0 * fast, c0 * slow + s0 * (slow - fast)};
        }
    } else {
        switch (layer_) {
            case Layer::Inner:
                return {t0, t0 + (c0 - t0) * fast};
            case Layer::Outer:
                return {t0 * slow, t0 * slow};
            case Layer::Uniform:
                return {t0 * slow, t0 * slow + (c0 - t0) * fast};
        }
    }
    return {};
}

CurvePoint ApproxCurve::matching_limit() const noexcept {
    switch (regime_) {
        case CurveRegime::Standard:
            return {x0_, k_.a2 * x0_ / (k_.k_m + x0_)};
        case CurveRegime::Reverse: {
            const double t0 = k_.s0 + k_.c0;
            return approach_ == Approach::Free ? CurvePoint{0.0, t0} : CurvePoint{t0, t0};
        }
        case CurveRegime::Blended:
            break;
    }
    return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
}

double ApproxCurve::matching_constant() const noexcept {
    if (regime_ == CurveRegime::Blended) return std::numeric_limits<double>::quiet_NaN();
    // Outer amplitude: x0 in the standard regime, S0 + C0 (= T0) in the reverse one.
    const double amplitude = regime_ == CurveRegime::Standard ? x0_ : k_.s0 + k_.c0;
    return amplitude / k_.a1;
}

ApproxSet ApproxSet::make(CurveRegime regime, Approach approach, TotalVariant variant,
                          const RateConstants& rates, const InitialState& init) {
    if (regime == CurveRegime::Blended) {
        throw std::invalid_argument("ApproxSet::make: use blend() for blended curves");
    }
    const DerivedConstants dc = derive_constants(rates, init);
    if (dc.a1 <= 0.0 || dc.a2 <= 0.0) {
        throw NotApplicableError("closed-form approximations need a1 > 0 and a2 > 0");
    }
    const ApproxCurve::Constants k{rates.k1(), rates.k2(), dc.k_m, dc.a1, dc.a2,
                                   init.s0(),  init.c0()};
    return {ApproxCurve(regime, approach, Layer::Inner, variant, k),
            ApproxCurve(regime, approach, Layer::Outer, variant, k),
            ApproxCurve(regime, approach, Layer::Uniform, variant, k)};
}

ApproxSet sqssa_free(const RateConstants& rates, const InitialState& init) {
    return ApproxSet::make(CurveRegime::Standard, Approach::Free, TotalVariant::InnerConsistent,
                           rates, init);
}

ApproxSet sqssa_total(const RateConstants& rates, const InitialState& init, TotalVariant variant) {
    return ApproxSet::make(CurveRegime::Standard, Approach::Total, variant, rates, init);
}

ApproxSet rqssa_free(const RateConstants& rates, const InitialState& init) {
    return ApproxSet::make(CurveRegime::Reverse, Approach::Free, TotalVariant::InnerConsistent,
                           rates, init);
}

ApproxSet rqssa_total(const RateConstants& rates, const InitialState& init) {
    return ApproxSet::make(CurveRegime::Reverse, Approach::Total, TotalVariant::InnerConsistent,
                           rates, init);
}

ApproxCurve blend(double eps, const ApproxCurve& s_curve, const ApproxCurve& r_curve) {
    if (std::isnan(eps) || eps < 0.0) {
        throw std::invalid_argument("blend: eps must be nonnegative");
    }
    if (s_curve.regime() != CurveRegime::Standard || r_curve.regime() != CurveRegime::Reverse) {
        throw std::invalid_argument("blend: expects a standard and a reverse curve");
    }
    if (s_curve.layer() != Layer::Uniform || r_curve.layer() != Layer::Uniform) {
        throw std::invalid_argument("blend: both curves must be uniform approximations");
    }
    if (s_curve.approach() != r_curve.approach() || !(s_curve.constants() == r_curve.constants())) {
        throw std::invalid_argument("blend: curves built from different approaches or constants");
    }
    ApproxCurve out(CurveRegime::Blended, s_curve.approach(), Layer::Uniform, s_curve.variant(),
                    s_curve.constants());
    out.weight_ = std::isinf(eps) ? 1.0 : eps / (1.0 + eps);
    out.s_part_ = std::make_shared<const ApproxCurve>(s_curve);
    out.r_part_ = std::make_shared<const ApproxCurve>(r_curve);
    return out;
}

double mm_rate(double s, const RateConstants& rates, const DerivedConstants& dc) {
    if (std::isinf(s)) return rates.k2() * dc.a2;
    return rates.k2() * dc.a2 * s / (dc.k_m + s);
}

double rqssa_rate(double s, const RateConstants& rates, const DerivedConstants& dc) {
    return rates.k1() * dc.a2 * s;
}

namespace {

ApproxCurve free_uniform(CurveRegime regime, const RateConstants& rates, const InitialState& init) {
    if (regime == CurveRegime::Blended) {
        throw NotApplicableError("RateCurve: no rate law for a blended curve");
    }
    return regime == CurveRegime::Standard ? sqssa_free(rates, init).uniform
                                           : rqssa_free(rates, init).uniform;
}

}  // namespace

RateCurve::RateCurve(CurveRegime regime, const RateConstants& rates, const InitialState& init)
    : regime_(regime),
      rates_(rates),
      dc_(derive_constants(rates, init)),
      substrate_(free_uniform(regime, rates, init)) {}

double RateCurve::at_substrate(double s) const {
    return regime_ == CurveRegime::Standard ? mm_rate(s, rates_, dc_) : rqssa_rate(s, rates_, dc_);
}

double RateCurve::at_time(double t) const { return at_substrate(substrate_(t).first); }

}  // namespace qssa
