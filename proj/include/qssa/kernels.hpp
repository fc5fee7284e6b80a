#ifndef QSSA_KERNELS_HPP
#define QSSA_KERNELS_HPP

/**
 * @file kernels.hpp
 * @brief Data-parallel batch kernels over sample grids.
 *
 * Every kernel has an OpenMP version in qssa::kernels and a plain loop in
 * qssa::kernels::serial. The serial versions are the reference the parallel
 * ones are tested against; both produce identical results element by element.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "qssa/approx.hpp"
#include "qssa/kinetics.hpp"
#include "qssa/ode.hpp"

namespace qssa::kernels {

/// Sup and time-averaged RMS of |approx - reference| / norm over a sample grid.
struct ErrorNorms {
    double sup = 0.0;
    double rms = 0.0;  ///< sqrt( (1/(t_n - t_0)) * integral err^2 dt ), trapezoidal
};

/// Evaluates `curve` at every t; `first` receives S (or T), `c` receives C.
void evaluate_curve(const ApproxCurve& curve, std::span<const double> t, std::span<double> first,
                    std::span<double> c);

void lambert_w0(std::span<const double> x, std::span<double> w);

ErrorNorms error_norms(std::span<const double> t, std::span<const double> approx,
                       std::span<const double> reference, double norm);

/// Result of checking the origin's stability for one parameter tuple.
struct StabilityCheck {
    bool real_negative = false;       ///< both eigenvalues real and < 0
    double discriminant_rel_err = 0;  ///< |expanded - rearranged| / rearranged
    bool dulac_negative = false;      ///< divergence < 0 at every supplied interior point
};

/// One entry of a stability sweep: rates, enzyme total, and interior points of the reduced region.
struct StabilityCase {
    RateConstants rates;
    double a2;
    std::vector<ReducedState> interior;
};

std::vector<StabilityCheck> stability_sweep(std::span<const StabilityCase> cases);

namespace serial {

void evaluate_curve(const ApproxCurve& curve, std::span<const double> t, std::span<double> first,
                    std::span<double> c);

void lambert_w0(std::span<const double> x, std::span<double> w);

ErrorNorms error_norms(std::span<const double> t, std::span<const double> approx,
                       std::span<const double> reference, double norm);

std::vector<StabilityCheck> stability_sweep(std::span<const StabilityCase> cases);

}  // namespace serial

/// Evaluation of one stability case, shared by both sweeps.
StabilityCheck check_stability(const StabilityCase& c);

}  // namespace qssa::kernels

#endif  // QSSA_KERNELS_HPP
