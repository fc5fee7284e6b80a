#include "qssa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qssa/lambert_w.hpp"
#include "qssa/stability.hpp"

namespace qssa::kernels {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("kernels: size mismatch in ") + what);
}

// Trapezoidal contribution of interval [i, i+1] to integral of err^2.
inline double interval_square(std::span<const double> t, std::span<const double> approx,
                              std::span<const double> reference, double inv_norm, std::size_t i) {
    const double e0 = (approx[i] - reference[i]) * inv_norm;
    const double e1 = (approx[i + 1] - reference[i + 1]) * inv_norm;
    return 0.5 * (e0 * e0 + e1 * e1) * (t[i + 1] - t[i]);
}

ErrorNorms finish_norms(double sup, std::span<const double> pieces, std::span<const double> t) {
    ErrorNorms out;
    out.sup = sup;
    if (t.size() < 2) return out;
    double integral = 0.0;
    for (double p : pieces) integral += p;  // fixed order, same in both versions
    const double span = t.back() - t.front();
    out.rms = span > 0.0 ? std::sqrt(integral / span) : 0.0;
    return out;
}

}  // namespace

StabilityCheck check_stability(const StabilityCase& c) {
    StabilityCheck out;
    const RateConstants& k = c.rates;
    const double sum = k.k1() * c.a2 + k.k_minus1() + k.k2();
    const double expanded = sum * sum - 4.0 * k.k1() * k.k2() * c.a2;
    const double rearranged = origin_discriminant(k, c.a2);
    // Measured against the magnitude of the operands the expansion cancels.
    out.discriminant_rel_err = std::abs(expanded - rearranged) / (sum * sum);

    const EigenPair ev = eigenvalues_at_origin(k, c.a2);
    out.real_negative = rearranged >= 0.0 && std::isfinite(ev.lambda_plus) &&
                        std::isfinite(ev.lambda_minus) && ev.lambda_plus < 0.0 &&
                        ev.lambda_minus < 0.0;

    out.dulac_negative = std::all_of(c.interior.begin(), c.interior.end(),
                                     [&](const ReducedState& x) {
                                         return dulac_divergence(x, k, c.a2) < 0.0;
                                     });
    return out;
}

// ---------------------------------------------------------------------------
// OpenMP versions
// ---------------------------------------------------------------------------

void evaluate_curve(const ApproxCurve& curve, std::span<const double> t, std::span<double> first,
                    std::span<double> c) {
    require_same_size(t.size(), first.size(), "evaluate_curve");
    require_same_size(t.size(), c.size(), "evaluate_curve");
    const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const CurvePoint p = curve(t[i]);
        first[i] = p.first;
        c[i] = p.c;
    }
}

void lambert_w0(std::span<const double> x, std::span<double> w) {
    require_same_size(x.size(), w.size(), "lambert_w0");
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    // Exceptions may not leave an OpenMP region; validate first.
    for (double xi : x) {
        if (!std::isfinite(xi) || xi < 0.0) qssa::lambert_w0(xi);
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) w[i] = qssa::lambert_w0(x[i]);
}

ErrorNorms error_norms(std::span<const double> t, std::span<const double> approx,
                       std::span<const double> reference, double norm) {
    require_same_size(t.size(), approx.size(), "error_norms");
    require_same_size(t.size(), reference.size(), "error_norms");
    const double inv_norm = 1.0 / norm;
    const auto n = static_cast<std::ptrdiff_t>(t.size());
    double sup = 0.0;
#pragma omp parallel for schedule(static) reduction(max : sup)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        sup = std::max(sup, std::abs(approx[i] - reference[i]) * inv_norm);
    }
    std::vector<double> pieces(t.size() > 1 ? t.size() - 1 : 0);
    const auto m = static_cast<std::ptrdiff_t>(pieces.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        pieces[i] = interval_square(t, approx, reference, inv_norm, static_cast<std::size_t>(i));
    }
    return finish_norms(sup, pieces, t);
}

std::vector<StabilityCheck> stability_sweep(std::span<const StabilityCase> cases) {
    // Domain checks throw; run them before entering the parallel region.
    for (const auto& c : cases) {
        if (!(c.a2 > 0.0)) eigenvalues_at_origin(c.rates, c.a2);
        for (const auto& x : c.interior) {
            if (!(x.s > 0.0) || !(x.c > 0.0)) dulac_divergence(x, c.rates, c.a2);
        }
    }
    std::vector<StabilityCheck> out(cases.size());
    const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = check_stability(cases[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Serial reference versions
// ---------------------------------------------------------------------------

namespace serial {

void evaluate_curve(const ApproxCurve& curve, std::span<const double> t, std::span<double> first,
                    std::span<double> c) {
    require_same_size(t.size(), first.size(), "evaluate_curve");
    require_same_size(t.size(), c.size(), "evaluate_curve");
    for (std::size_t i = 0; i < t.size(); ++i) {
        const CurvePoint p = curve(t[i]);
        first[i] = p.first;
        c[i] = p.c;
    }
}

void lambert_w0(std::span<const double> x, std::span<double> w) {
    require_same_size(x.size(), w.size(), "lambert_w0");
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = qssa::lambert_w0(x[i]);
}

ErrorNorms error_norms(std::span<const double> t, std::span<const double> approx,
                       std::span<const double> reference, double norm) {
    require_same_size(t.size(), approx.size(), "error_norms");
    require_same_size(t.size(), reference.size(), "error_norms");
    const double inv_norm = 1.0 / norm;
    double sup = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        sup = std::max(sup, std::abs(approx[i] - reference[i]) * inv_norm);
    }
    std::vector<double> pieces;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        pieces.push_back(interval_square(t, approx, reference, inv_norm, i));
    }
    return finish_norms(sup, pieces, t);
}

std::vector<StabilityCheck> stability_sweep(std::span<const StabilityCase> cases) {
    std::vector<StabilityCheck> out;
    out.reserve(cases.size());
    for (const auto& c : cases) out.push_back(check_stability(c));
    return out;
}

}  // namespace serial

}  // namespace qssa::kernels
