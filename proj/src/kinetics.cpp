#include "qssa/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qssa/errors.hpp"

namespace qssa {

namespace {

double require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
    return value;
}

double require_nonnegative(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(name) + " must be nonnegative and finite");
    }
    return value;
}

}  // namespace

RateConstants::RateConstants(double k1, double k_minus1, double k2)
    : k1_(require_positive(k1, "k1")),
      k_minus1_(require_positive(k_minus1, "k_minus1")),
      k2_(require_positive(k2, "k2")) {}

InitialState::InitialState(double s0, double e0, double c0, double p0)
    : s0_(require_nonnegative(s0, "s0")),
      e0_(require_nonnegative(e0, "e0")),
      c0_(require_nonnegative(c0, "c0")),
      p0_(require_nonnegative(p0, "p0")) {}

DerivedConstants derive_constants(const RateConstants& rates, const InitialState& init) {
    const double k1 = rates.k1();

    DerivedConstants dc{};
    dc.k_dis = rates.k_minus1() / k1;
    dc.k_vsc = rates.k2() / k1;
    dc.k_m = dc.k_dis + dc.k_vsc;
    dc.a1 = init.s0() + init.c0() + init.p0();
    dc.a2 = init.e0() + init.c0();
    dc.a3 = std::min({dc.a1, dc.a2, dc.a1 * dc.a2 / dc.k_m});

    // A2 <= K_M + A1 gives the second branch of the minimum, A2 >= K_M + A1 the first.
    const double km_a1 = dc.k_m + dc.a1;
    dc.a4 = dc.a2 <= km_a1 ? dc.a1 * dc.a2 / km_a1 : dc.a1;

    dc.epsilon = dc.a2 / km_a1;
    dc.sigma = dc.a1 / dc.k_m;
    dc.rho = rates.k_minus1() / rates.k2();

    dc.t1_s = 1.0 / (k1 * km_a1);
    dc.t2_r = dc.t1_s;
    if (dc.a2 > 0.0) {
        dc.eta = dc.a1 / dc.a2;
        dc.t2_s = 1.0 / (k1 * dc.a2);
        dc.t1_r = dc.a1 / (k1 * km_a1 * dc.a2);
    }
    return dc;
}

std::string_view to_string(RegimeKind kind) noexcept {
    switch (kind) {
        case RegimeKind::StandardQSSA:
            return "sqssa";
        case RegimeKind::ReverseQSSA:
            return "rqssa";
        case RegimeKind::Intermediate:
            return "intermediate";
    }
    return "unknown";
}

Regime classify_regime(const DerivedConstants& dc, RegimeThresholds thresholds) {
    if (!(thresholds.eps_lo > 0.0 && thresholds.eps_lo < thresholds.eps_hi)) {
        throw std::invalid_argument("regime thresholds must satisfy 0 < eps_lo < eps_hi");
    }
    if (dc.a1 <= 0.0 || dc.a2 <= 0.0) {
        throw NotApplicableError("regime classification needs a1 > 0 and a2 > 0");
    }
    if (dc.epsilon <= thresholds.eps_lo) {
        return {RegimeKind::StandardQSSA, dc.epsilon};
    }
    if (dc.epsilon >= thresholds.eps_hi) {
        return {RegimeKind::ReverseQSSA, dc.epsilon};
    }
    return {RegimeKind::Intermediate, dc.epsilon};
}

TimeScales regime_time_scales(const DerivedConstants& dc, RegimeKind kind) {
    const bool standard = kind == RegimeKind::StandardQSSA ||
                          (kind == RegimeKind::Intermediate && dc.epsilon <= 1.0);
    if (standard) {
        if (!dc.t2_s) throw NotApplicableError("t2 undefined for a2 = 0");
        return {dc.t1_s, *dc.t2_s};
    }
    if (!dc.t1_r) throw NotApplicableError("t1 undefined for a2 = 0");
    return {*dc.t1_r, dc.t2_r};
}

}  // namespace qssa
