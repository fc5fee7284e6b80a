#include "qssa/stability.hpp"

#include <cmath>

#include "qssa/errors.hpp"

namespace qssa {

Matrix2 jacobian(const ReducedState& x, const RateConstants& rates, double a2) {
    const double k1 = rates.k1();
    return {{
        {k1 * (x.c - a2), k1 * x.s + rates.k_minus1()},
        {k1 * (a2 - x.c), -k1 * x.s - (rates.k_minus1() + rates.k2())},
    }};
}

double origin_discriminant(const RateConstants& rates, double a2) {
    const double shifted = rates.k1() * a2 + (rates.k_minus1() - rates.k2());
    return shifted * shifted + 4.0 * rates.k_minus1() * rates.k2();
}

EigenPair eigenvalues_at_origin(const RateConstants& rates, double a2) {
    if (!(a2 > 0.0)) throw NotApplicableError("eigenvalues_at_origin: requires a2 > 0");
    const double trace = -(rates.k1() * a2 + rates.k_minus1() + rates.k2());
    const double det = rates.k1() * rates.k2() * a2;
    const double lambda_minus = 0.5 * (trace - std::sqrt(origin_discriminant(rates, a2)));
    // Product rule avoids cancellation in trace + sqrt(disc) when k1 a2 << k_{-1} + k2.
    return {det / lambda_minus, lambda_minus};
}

double dulac_divergence(const ReducedState& x, const RateConstants& rates, double a2) {
    if (!(x.s > 0.0) || !(x.c > 0.0)) {
        throw DomainError("dulac_divergence: defined only for s > 0 and c > 0");
    }
    return -rates.k_minus1() / (x.s * x.s) - rates.k1() * a2 / (x.c * x.c);
}

FullState full_steady_state(const DerivedConstants& dc, const InitialState& init) {
    if (dc.a2 > 0.0) return {0.0, dc.a2, 0.0, dc.a1};
    return {init.s0(), 0.0, 0.0, init.p0()};
}

}  // namespace qssa
