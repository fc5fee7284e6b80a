#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qssa/errors.hpp"
#include "qssa/ode.hpp"
#include "qssa/scaling.hpp"

using namespace qssa;

namespace {

const RateConstants kSegel{4e6, 25.0, 15.0};
const InitialState kStandard{1e-5, 1e-8, 0, 0};
const InitialState kReverse{1e-5, 1e-2, 0, 0};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

double group(const ScalingReport& r, const std::string& name) {
    for (const auto& [n, v] : r.named_groups) {
        if (n == name) return v;
    }
    FAIL("missing group " << name);
    return 0.0;
}

ScalingReport sc_report(const InitialState& init, RegimeKind kind) {
    const DerivedConstants dc = derive_constants(kSegel, init);
    return scale_system(sc_bounded_system(kSegel, dc, kind));
}

}  // namespace

TEST_CASE("standard SC scaling") {
    const DerivedConstants dc = derive_constants(kSegel, kStandard);
    const ScalingReport r = sc_report(kStandard, RegimeKind::StandardQSSA);
    REQUIRE(r.time_scales.size() == 2);
    CHECK(rel(r.time_scales[0], 1.25e-2) <= 1e-12);
    CHECK(rel(r.time_scales[1], 25.0) <= 1e-12);
    CHECK(r.variable_scales[0] == dc.a1);
    CHECK(rel(r.variable_scales[1], dc.epsilon * dc.a1) <= 1e-15);
    CHECK(rel(group(r, "epsilon"), 5e-4) <= 1e-12);
    CHECK(rel(group(r, "sigma"), 1.0) <= 1e-12);
    CHECK(rel(group(r, "rho"), 5.0 / 3.0) <= 1e-12);
    REQUIRE(r.separation_ratios.size() == 1);
    CHECK(rel(r.separation_ratios[0], 1.0 / dc.epsilon) <= 1e-12);
    CHECK(r.gathering_declared);
}

TEST_CASE("reverse SC scaling") {
    const DerivedConstants dc = derive_constants(kSegel, kReverse);
    const ScalingReport r = sc_report(kReverse, RegimeKind::ReverseQSSA);
    REQUIRE(r.time_scales.size() == 2);
    CHECK(rel(r.time_scales[0], 1.25e-5) <= 1e-12);
    CHECK(rel(r.time_scales[1], 1.25e-2) <= 1e-12);
    CHECK(r.variable_scales[1] == dc.a1);
    CHECK(rel(group(r, "eta"), 1e-3) <= 1e-12);
    CHECK(rel(r.separation_ratios[0], 1.0 / *dc.eta) <= 1e-12);
}

TEST_CASE("the automatic rule recovers the standard pair") {
    const ScalingReport r = sc_report(kStandard, RegimeKind::Intermediate);
    CHECK_FALSE(r.gathering_declared);
    REQUIRE(r.time_scales.size() == 2);
    CHECK(rel(r.time_scales[0], 1.25e-2) <= 1e-12);
    CHECK(rel(r.time_scales[1], 25.0) <= 1e-12);
}

TEST_CASE("SIR scaling") {
    const double beta = 0.37;
    const double gamma = 0.11;
    const double n0 = 1234.0;
    const ScalingReport r = scale_system(sir_bounded_system(beta, gamma, n0));
    REQUIRE(r.time_scales.size() == 1);
    CHECK(r.time_scales[0] == 1.0 / gamma);
    REQUIRE(r.candidates.size() == 1);
    REQUIRE(r.candidates[0].groups.size() == 1);
    CHECK(rel(r.candidates[0].groups[0], beta * n0 / gamma) <= 4e-16);
    CHECK(group(r, "R0") == beta * n0 / gamma);
    CHECK_THROWS_AS(sir_bounded_system(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("scale_system input validation") {
    BoundedSystem sys = sir_bounded_system(1.0, 1.0, 1.0);
    sys.bounds[1] = 0.0;
    CHECK_THROWS_AS(scale_system(sys), DegenerateBoundError);
    sys.bounds[1] = std::nan("");
    CHECK_THROWS_AS(scale_system(sys), DegenerateBoundError);
    sys = sir_bounded_system(1.0, 1.0, 1.0);
    sys.equations[0][0].exponents = {1, 1};
    CHECK_THROWS_AS(scale_system(sys), std::invalid_argument);
    sys = sir_bounded_system(1.0, 1.0, 1.0);
    sys.names.pop_back();
    CHECK_THROWS_AS(scale_system(sys), std::invalid_argument);
    CHECK_THROWS_AS(scale_system(BoundedSystem{}), std::invalid_argument);
}

TEST_CASE("coefficient groups are deduplicated") {
    BoundedSystem sys;
    sys.names = {"x", "y"};
    sys.bounds = {1.0, 1.0};
    sys.equations = {{{{1, 0}, -2.0}, {{1, 1}, 3.0}}, {{{0, 1}, -2.0 * (1 + 1e-12)}, {{1, 1}, 5.0}}};
    const ScalingReport r = scale_system(sys);
    REQUIRE(r.time_scales.size() == 1);
    CHECK(r.time_scales[0] == 0.5);
    // 3/2 and 5/2 remain; the unit magnitude of the gathered terms is not a group.
    REQUIRE(r.candidates[0].groups.size() == 2);
    CHECK(r.candidates[0].groups[0] == doctest::Approx(1.5));
    CHECK(r.candidates[0].groups[1] == doctest::Approx(2.5));
}

TEST_CASE("grouped forms of the scaled SC equations") {
    const DerivedConstants s = derive_constants(kSegel, kStandard);
    const ScaledScSystem s1 = scaled_sc_coefficients(s, RegimeKind::StandardQSSA, ScaleChoice::T1);
    CHECK(rel(s1.ds.prefactor, 5e-4) <= 1e-12);
    CHECK(s1.dc.prefactor == 1.0);
    const ScaledScSystem s2 = scaled_sc_coefficients(s, RegimeKind::StandardQSSA, ScaleChoice::T2);
    CHECK(s2.ds.prefactor == 1.0);
    CHECK(rel(s2.dc.prefactor, 1.0 / 5e-4) <= 1e-12);

    const DerivedConstants r = derive_constants(kSegel, kReverse);
    const ScaledScSystem r2 = scaled_sc_coefficients(r, RegimeKind::ReverseQSSA, ScaleChoice::T2);
    const double sigma = r.sigma;
    const double eta = *r.eta;
    CHECK(rel(r2.effective(0)[0], -sigma / (eta * (1.0 + sigma))) <= 1e-13);

    CHECK_THROWS_AS(scaled_sc_coefficients(s, RegimeKind::Intermediate, ScaleChoice::T1),
                    NotApplicableError);
    const DerivedConstants none = derive_constants(kSegel, {1e-5, 0, 0, 0});
    CHECK_THROWS_AS(scaled_sc_coefficients(none, RegimeKind::StandardQSSA, ScaleChoice::T1),
                    NotApplicableError);
}

TEST_CASE("scaled vector field equals the physical one after rescaling") {
    for (const auto& [init, kind] : {std::pair{kStandard, RegimeKind::StandardQSSA},
                                     std::pair{kReverse, RegimeKind::ReverseQSSA},
                                     std::pair{InitialState{3e-5, 1e-6, 0, 0}, RegimeKind::StandardQSSA},
                                     std::pair{InitialState{3e-6, 1e-3, 0, 0}, RegimeKind::ReverseQSSA}}) {
        const DerivedConstants dc = derive_constants(kSegel, init);
        for (ScaleChoice choice : {ScaleChoice::T1, ScaleChoice::T2}) {
            const ScaledScSystem sys = scaled_sc_coefficients(dc, kind, choice);
            for (double fs : {0.1, 0.5, 0.9}) {
                for (double fc : {0.05, 0.3, 0.7}) {
                    const ReducedState y{fs, fc};
                    const ReducedState d = sys.rhs(y);
                    const ReducedState phys =
                        sc_rhs({fs * sys.s_scale, fc * sys.c_scale}, kSegel, dc.a2);
                    const double ts = sys.time_scale;
                    const double mag_s = kSegel.k1() * dc.a2 * sys.s_scale +
                                         kSegel.k1() * sys.s_scale * sys.c_scale +
                                         kSegel.k_minus1() * sys.c_scale;
                    const double mag_c = mag_s + kSegel.k2() * sys.c_scale;
                    CHECK(std::abs(d.s * sys.s_scale / ts - phys.s) <= 1e-13 * mag_s);
                    CHECK(std::abs(d.c * sys.c_scale / ts - phys.c) <= 1e-13 * mag_c);
                }
            }
        }
    }
}

TEST_CASE("integrating the scaled system reproduces the physical trajectory") {
    for (const auto& [init, kind] : {std::pair{kStandard, RegimeKind::StandardQSSA},
                                     std::pair{kReverse, RegimeKind::ReverseQSSA}}) {
        const DerivedConstants dc = derive_constants(kSegel, init);
        for (ScaleChoice choice : {ScaleChoice::T1, ScaleChoice::T2}) {
            const ScaledScSystem sys = scaled_sc_coefficients(dc, kind, choice);
            const double t2 = kind == RegimeKind::StandardQSSA ? *dc.t2_s : dc.t2_r;
            const double t_end = 3.0 * t2;

            IntegrateOptions popt;
            OdeOptions sopt;
            sopt.rel_tol = 1e-11;
            sopt.abs_tol = 1e-16;
            sopt.initial_step = 1e-4 * (kind == RegimeKind::StandardQSSA ? dc.t1_s : *dc.t1_r) /
                                sys.time_scale;
            popt.rel_tol = 1e-11;
            for (int i = 1; i <= 100; ++i) {
                const double t = t_end * i / 100.0;
                popt.output_times.push_back(t);
                sopt.output_times.push_back(t / sys.time_scale);
            }
            sopt.output_times.back() = t_end / sys.time_scale;
            const Trajectory phys = integrate(SystemKind::Reduced, kSegel, init, t_end, popt);
            auto rhs = [&sys](double, const std::array<double, 2>& y, std::array<double, 2>& d) {
                const ReducedState r = sys.rhs({y[0], y[1]});
                d = {r.s, r.c};
            };
            const auto scaled = integrate_dopri5<2>(
                rhs, {init.s0() / sys.s_scale, init.c0() / sys.c_scale},
                sopt.output_times.back(), sopt);
            REQUIRE(scaled.states.size() == phys.size());
            double worst = 0.0;
            bool in_unit_box = true;
            for (std::size_t i = 0; i < phys.size(); ++i) {
                const auto& y = scaled.states[i];
                worst = std::max({worst, std::abs(y[0] * sys.s_scale - phys.x[i].s) / dc.a1,
                                  std::abs(y[1] * sys.c_scale - phys.x[i].c) / dc.a1});
                in_unit_box = in_unit_box && y[0] >= -1e-12 && y[0] <= 1.0 + 1e-12 &&
                              y[1] >= -1e-12 && y[1] <= 1.0 + 1e-12;
            }
            CAPTURE(static_cast<int>(kind));
            CAPTURE(static_cast<int>(choice));
            CHECK(worst <= 1e-9);
            CHECK(in_unit_box);
        }
    }
}
