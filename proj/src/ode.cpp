#include "qssa/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qssa {

FullState secp_rhs(const FullState& x, const RateConstants& k) {
    const double binding = k.k1() * x.s * x.e;
    const double unbinding = k.k_minus1() * x.c;
    const double catalysis = k.k2() * x.c;
    return {
        -binding + unbinding,
        -binding + unbinding + catalysis,
        binding - unbinding - catalysis,
        catalysis,
    };
}

ReducedState sc_rhs(const ReducedState& x, const RateConstants& k, double a2) {
    const double k1 = k.k1();
    return {
        -k1 * a2 * x.s + k1 * x.s * x.c + k.k_minus1() * x.c,
        k1 * a2 * x.s - k1 * x.s * x.c - (k.k_minus1() + k.k2()) * x.c,
    };
}

namespace {

constexpr std::size_t kMinDenseSamples = 400;

double clamp_component(double v, double abs_tol, double t, const char* name) {
    if (v >= 0.0) return v;
    if (v < -abs_tol) {
        std::ostringstream msg;
        msg << "integrate: " << name << " = " << v << " below -abs_tol at t = " << t;
        throw FeasibilityError(msg.str());
    }
    return 0.0;
}

}  // namespace

Trajectory integrate(SystemKind system, const RateConstants& rates, const InitialState& init,
                     double t_end, const IntegrateOptions& options) {
    const DerivedConstants dc = derive_constants(rates, init);

    const double scale = dc.a1 > 0.0 ? dc.a1 : dc.a2;
    const double abs_tol =
        options.abs_tol.value_or(scale > 0.0 ? 1e-14 * scale : std::numeric_limits<double>::min());
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");

    OdeOptions opt;
    opt.rel_tol = options.rel_tol;
    opt.abs_tol = abs_tol;
    opt.output_times = options.output_times;
    double fast = std::min(dc.t1_s, t_end);
    if (dc.t1_r) fast = std::min(fast, *dc.t1_r);
    opt.initial_step = fast / 100.0;
    if (opt.output_times.empty()) opt.max_step = t_end / static_cast<double>(kMinDenseSamples);

    Trajectory traj;
    traj.system = system;

    if (system == SystemKind::Full) {
        auto rhs = [&rates](double, const std::array<double, 4>& y, std::array<double, 4>& dy) {
            const FullState d = secp_rhs({y[0], y[1], y[2], y[3]}, rates);
            dy = {d.s, d.e, d.c, d.p};
        };
        const auto sol = integrate_dopri5<4>(rhs, {init.s0(), init.e0(), init.c0(), init.p0()},
                                             t_end, opt);
        traj.t = sol.times;
        traj.stats = sol.stats;
        traj.x.reserve(sol.states.size());
        for (std::size_t i = 0; i < sol.states.size(); ++i) {
            const auto& y = sol.states[i];
            const double ti = sol.times[i];
            traj.x.push_back({clamp_component(y[0], abs_tol, ti, "S"),
                              clamp_component(y[1], abs_tol, ti, "E"),
                              clamp_component(y[2], abs_tol, ti, "C"),
                              clamp_component(y[3], abs_tol, ti, "P")});
        }
    } else {
        const double a2 = dc.a2;
        auto rhs = [&rates, a2](double, const std::array<double, 2>& y, std::array<double, 2>& dy) {
            const ReducedState d = sc_rhs({y[0], y[1]}, rates, a2);
            dy = {d.s, d.c};
        };
        const auto sol = integrate_dopri5<2>(rhs, {init.s0(), init.c0()}, t_end, opt);
        traj.t = sol.times;
        traj.stats = sol.stats;
        traj.x.reserve(sol.states.size());
        for (std::size_t i = 0; i < sol.states.size(); ++i) {
            const auto& y = sol.states[i];
            const double ti = sol.times[i];
            const double s = clamp_component(y[0], abs_tol, ti, "S");
            const double c = clamp_component(y[1], abs_tol, ti, "C");
            traj.x.push_back({s, dc.a2 - c, c, dc.a1 - s - c});
        }
    }

    traj.max_conservation_residual = max_conservation_residual(conservation_residuals(traj, dc));
    return traj;
}

std::vector<ConservationResidual> conservation_residuals(const Trajectory& traj,
                                                         const DerivedConstants& dc) {
    constexpr double floor = std::numeric_limits<double>::min();
    const double n1 = std::max(dc.a1, floor);
    const double n2 = std::max(dc.a2, floor);
    std::vector<ConservationResidual> out;
    out.reserve(traj.size());
    for (const FullState& x : traj.x) {
        out.push_back({std::abs(x.s + x.c + x.p - dc.a1) / n1, std::abs(x.e + x.c - dc.a2) / n2});
    }
    return out;
}

double max_conservation_residual(std::span<const ConservationResidual> residuals) {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max({m, r.substrate, r.enzyme});
    return m;
}

}  // namespace qssa
