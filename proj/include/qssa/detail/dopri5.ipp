// Implementation of integrate_dopri5; included from ode.hpp.

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qssa {

namespace detail::dopri5 {

inline std::string format_time(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}


inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                        a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// Difference between the 5th- and 4th-order weights.
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// PI controller constants (Hairer & Wanner, DOPRI5).
inline constexpr double beta = 0.04;
inline constexpr double expo1 = 0.2 - beta * 0.75;
inline constexpr double safety = 0.9;
inline constexpr double fac_min = 0.2;   // h_new >= fac_min * h
inline constexpr double fac_max = 10.0;  // h_new <= fac_max * h

}  // namespace detail::dopri5

template <std::size_t N, class Rhs>
OdeSolution<N> integrate_dopri5(Rhs&& rhs, const std::array<double, N>& y0, double t_end,
                                const OdeOptions& opt) {
    namespace dp = detail::dopri5;
    using State = std::array<double, N>;

    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw std::invalid_argument("integrate: t_end must be positive and finite");
    }
    if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0)) {
        throw std::invalid_argument("integrate: tolerances must be positive");
    }
    for (std::size_t i = 0; i < opt.output_times.size(); ++i) {
        const double ti = opt.output_times[i];
        const bool ordered = i == 0 ? ti > 0.0 : ti > opt.output_times[i - 1];
        if (!ordered || ti > t_end) {
            throw std::invalid_argument(
                "integrate: output_times must be strictly increasing within (0, t_end]");
        }
    }

    OdeSolution<N> sol;
    const bool dense_record = opt.output_times.empty();
    sol.times.push_back(0.0);
    sol.states.push_back(y0);

    auto error_norm = [&](const State& y, const State& y1, const State& err) {
        double sum = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            const double r = err[i] / sk;
            sum += r * r;
        }
        return std::sqrt(sum / static_cast<double>(N));
    };

    State y = y0;
    State k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ytmp{}, y1{}, yerr{};
    double t = 0.0;
    double h = opt.initial_step > 0.0 ? opt.initial_step : t_end * 1e-6;
    const double h_max = opt.max_step > 0.0 ? opt.max_step : t_end;
    h = std::min(h, h_max);
    double err_old = 1e-4;
    bool last_rejected = false;
    std::size_t next_output = 0;

    rhs(t, y, k1);
    while (t < t_end) {
        if (sol.stats.accepted_steps + sol.stats.rejected_steps >= opt.max_steps) {
            throw StiffnessError("integrate: step budget exhausted at t = " + dp::format_time(t), t);
        }
        const double target = dense_record ? t_end : opt.output_times[next_output];
        bool hits_target = false;
        double h_step = h;
        // Stretch slightly rather than leave a sliver before the target.
        if (t + 1.01 * h_step >= target) {
            h_step = target - t;
            hits_target = true;
        }
        if (h_step <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(t) ||
            h_step < std::numeric_limits<double>::min()) {
            throw StiffnessError("integrate: step size underflow at t = " + dp::format_time(t), t);
        }

        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h_step * dp::a21 * k1[i];
        rhs(t + dp::c2 * h_step, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h_step * (dp::a31 * k1[i] + dp::a32 * k2[i]);
        rhs(t + dp::c3 * h_step, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h_step * (dp::a41 * k1[i] + dp::a42 * k2[i] + dp::a43 * k3[i]);
        rhs(t + dp::c4 * h_step, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h_step * (dp::a51 * k1[i] + dp::a52 * k2[i] + dp::a53 * k3[i] +
                                       dp::a54 * k4[i]);
        rhs(t + dp::c5 * h_step, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h_step * (dp::a61 * k1[i] + dp::a62 * k2[i] + dp::a63 * k3[i] +
                                       dp::a64 * k4[i] + dp::a65 * k5[i]);
        const double t_new = hits_target ? target : t + h_step;
        rhs(t_new, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            y1[i] = y[i] + h_step * (dp::a71 * k1[i] + dp::a73 * k3[i] + dp::a74 * k4[i] +
                                     dp::a75 * k5[i] + dp::a76 * k6[i]);
        rhs(t_new, y1, k7);
        for (std::size_t i = 0; i < N; ++i)
            yerr[i] = h_step * (dp::e1 * k1[i] + dp::e3 * k3[i] + dp::e4 * k4[i] + dp::e5 * k5[i] +
                                dp::e6 * k6[i] + dp::e7 * k7[i]);

        const double err = error_norm(y, y1, yerr);
        const double fac11 = std::pow(err, dp::expo1);
        if (err <= 1.0 && std::isfinite(err)) {
            double fac = fac11 / std::pow(err_old, dp::beta);
            fac = std::clamp(fac / dp::safety, 1.0 / dp::fac_max, 1.0 / dp::fac_min);
            double h_new = h_step / fac;
            if (last_rejected) h_new = std::min(h_new, h_step);
            err_old = std::max(err, 1e-4);
            last_rejected = false;

            t = t_new;
            y = y1;
            k1 = k7;
            ++sol.stats.accepted_steps;

            if (dense_record || hits_target) {
                sol.times.push_back(t);
                sol.states.push_back(y);
                if (!dense_record) {
                    ++next_output;
                    if (next_output == opt.output_times.size()) break;
                }
            }
            // A step shortened to land on an output time does not shrink the next one.
            h = std::min(hits_target ? std::max(h_new, h) : h_new, h_max);
        } else {
            const double shrink = std::isfinite(err) ? std::min(1.0 / dp::fac_min, fac11 / dp::safety)
                                                     : 1.0 / dp::fac_min;
            h = h_step / shrink;
            last_rejected = true;
            ++sol.stats.rejected_steps;
        }
    }
    return sol;
}

}  // namespace qssa
