#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qssa/errors.hpp"
#include "qssa/kinetics.hpp"

using namespace qssa;

namespace {

const RateConstants kSegel{4e6, 25.0, 15.0};

bool close(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("rate constants must be positive and finite") {
    CHECK_THROWS_AS(RateConstants(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RateConstants(1.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RateConstants(1.0, 1.0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(RateConstants(std::numeric_limits<double>::infinity(), 1.0, 1.0),
                    std::invalid_argument);
    CHECK_NOTHROW(RateConstants(1e-30, 1e30, 1.0));
}

TEST_CASE("initial state must be nonnegative") {
    CHECK_THROWS_AS(InitialState(-1e-9, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(InitialState(0, 0, std::nan(""), 0), std::invalid_argument);
    CHECK_NOTHROW(InitialState(0, 0, 0, 0));
}

TEST_CASE("standard-regime parameter set") {
    const DerivedConstants dc = derive_constants(kSegel, {1e-5, 1e-8, 0, 0});
    CHECK(close(dc.k_m, 1e-5));
    CHECK(close(dc.a1, 1e-5));
    CHECK(close(dc.a2, 1e-8));
    CHECK(close(dc.epsilon, 5e-4));
    CHECK(close(dc.t1_s, 1.25e-2));
    REQUIRE(dc.t2_s);
    CHECK(close(*dc.t2_s, 25.0));
    CHECK(close(dc.sigma, 1.0));
    CHECK(close(dc.rho, 25.0 / 15.0));
    CHECK(close(dc.a4, dc.epsilon * dc.a1));
    CHECK(classify_regime(dc).kind == RegimeKind::StandardQSSA);
}

TEST_CASE("reverse-regime parameter set") {
    const DerivedConstants dc = derive_constants(kSegel, {1e-5, 1e-2, 0, 0});
    CHECK(close(dc.epsilon, 500.0));
    REQUIRE(dc.eta);
    CHECK(close(*dc.eta, 1e-3));
    REQUIRE(dc.t1_r);
    CHECK(close(*dc.t1_r, 1.25e-5));
    CHECK(close(dc.t2_r, 1.25e-2));
    CHECK(dc.a4 == dc.a1);
    CHECK(classify_regime(dc).kind == RegimeKind::ReverseQSSA);
    const TimeScales ts = regime_time_scales(dc, RegimeKind::ReverseQSSA);
    CHECK(close(ts.fast, 1.25e-5));
    CHECK(close(ts.slow, 1.25e-2));
}

TEST_CASE("zero enzyme leaves eta and the enzyme time scales undefined") {
    const DerivedConstants dc = derive_constants(kSegel, {1e-5, 0, 0, 0});
    CHECK(dc.a2 == 0.0);
    CHECK(dc.epsilon == 0.0);
    CHECK_FALSE(dc.eta);
    CHECK_FALSE(dc.t2_s);
    CHECK_FALSE(dc.t1_r);
    CHECK_THROWS_AS(classify_regime(dc), NotApplicableError);
    CHECK_THROWS_AS(regime_time_scales(dc, RegimeKind::StandardQSSA), NotApplicableError);
}

TEST_CASE("zero substrate cannot be classified") {
    const DerivedConstants dc = derive_constants(kSegel, {0, 1e-8, 0, 0});
    CHECK_THROWS_AS(classify_regime(dc), NotApplicableError);
}

TEST_CASE("epsilon = 1 is intermediate") {
    const DerivedConstants dc = derive_constants(kSegel, {1e-5, 2e-5, 0, 0});
    CHECK(close(dc.epsilon, 1.0));
    CHECK(classify_regime(dc).kind == RegimeKind::Intermediate);
    CHECK_THROWS_AS(classify_regime(dc, {10.0, 0.1}), std::invalid_argument);
    CHECK(classify_regime(dc, {0.5, 1.0}).kind == RegimeKind::ReverseQSSA);
    CHECK(classify_regime(dc, {1.0, 2.0}).kind == RegimeKind::StandardQSSA);
}

TEST_CASE("complex and product initial values enter the totals") {
    const DerivedConstants dc = derive_constants(kSegel, {1e-5, 1e-8, 2e-9, 3e-6});
    CHECK(close(dc.a1, 1e-5 + 2e-9 + 3e-6));
    CHECK(close(dc.a2, 1e-8 + 2e-9));
}

TEST_CASE("to_string names") {
    CHECK(to_string(RegimeKind::StandardQSSA) == "sqssa");
    CHECK(to_string(RegimeKind::ReverseQSSA) == "rqssa");
    CHECK(to_string(RegimeKind::Intermediate) == "intermediate");
}

TEST_CASE("invariants over random parameters") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> lg(-8.0, 8.0);
    auto draw = [&] { return std::pow(10.0, lg(rng)); };
    for (int n = 0; n < 2000; ++n) {
        const RateConstants k(draw(), draw(), draw());
        const InitialState init(draw(), draw(), n % 3 == 0 ? draw() : 0.0, 0.0);
        const DerivedConstants dc = derive_constants(k, init);
        CHECK(close(dc.k_m * k.k1(), k.k_minus1() + k.k2(), 1e-14));
        CHECK(dc.a4 <= std::min({dc.a1, dc.a2, dc.a3}) * (1 + 1e-15));
        REQUIRE(dc.eta);
        // a1 / (k_m + a1) < 1, up to rounding once k_m is below an ulp of a1.
        CHECK(dc.epsilon * *dc.eta <= 1.0 + 4 * std::numeric_limits<double>::epsilon());
        if (dc.k_m > 1e-12 * dc.a1) CHECK(dc.epsilon * *dc.eta < 1.0);
        CHECK(close(*dc.t2_s, dc.t1_s / dc.epsilon, 1e-13));
        CHECK(close(dc.t2_r, *dc.t1_r / *dc.eta, 1e-13));
        CHECK(close(dc.a4, dc.a2 <= dc.k_m + dc.a1 ? dc.a1 * dc.a2 / (dc.k_m + dc.a1) : dc.a1));
    }
}

TEST_CASE("classification is monotone in epsilon") {
    auto rank = [](RegimeKind k) {
        return k == RegimeKind::StandardQSSA ? 0 : k == RegimeKind::Intermediate ? 1 : 2;
    };
    int previous = 0;
    for (double e0 = 1e-12; e0 < 1e3; e0 *= 1.3) {
        const DerivedConstants dc = derive_constants(kSegel, {1e-5, e0, 0, 0});
        const int r = rank(classify_regime(dc).kind);
        CHECK(r >= previous);
        previous = r;
    }
    CHECK(previous == 2);
}

TEST_CASE("intermediate time scales follow the closer regime") {
    const DerivedConstants lo = derive_constants(kSegel, {1e-5, 1e-5, 0, 0});
    const TimeScales a = regime_time_scales(lo, RegimeKind::Intermediate);
    CHECK(a.fast == lo.t1_s);
    CHECK(a.slow == *lo.t2_s);
    const DerivedConstants hi = derive_constants(kSegel, {1e-5, 1e-4, 0, 0});
    const TimeScales b = regime_time_scales(hi, RegimeKind::Intermediate);
    CHECK(b.fast == *hi.t1_r);
    CHECK(b.slow == hi.t2_r);
}
