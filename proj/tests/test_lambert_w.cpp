#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "qssa/errors.hpp"
#include "qssa/lambert_w.hpp"

using qssa::lambert_w0;
using qssa::lambert_w0_from_log;

namespace {

// Bisection on w e^w = x, independent of the library's Halley iteration.
double bisect_w(double x) {
    double lo = 0.0;
    double hi = std::max(1.0, std::log(x + 1.0) + 1.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("special values") {
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(std::abs(lambert_w0(std::numbers::e) - 1.0) <= 1e-15);
    CHECK(std::abs(lambert_w0(1.0) - 0.5671432904097838) <= 1e-15);
    CHECK(std::abs(bisect_w(1.0) - 0.5671432904097838) <= 1e-15);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(lambert_w0(-1e-300), qssa::DomainError);
    CHECK_THROWS_AS(lambert_w0(std::nan("")), qssa::DomainError);
    CHECK_THROWS_AS(lambert_w0(std::numeric_limits<double>::infinity()), qssa::DomainError);
    CHECK_THROWS_AS(lambert_w0_from_log(std::nan("")), qssa::DomainError);
    CHECK_THROWS_AS(lambert_w0_from_log(std::numeric_limits<double>::infinity()),
                    qssa::DomainError);
}

TEST_CASE("agrees with bisection") {
    for (double x : {1e-10, 1e-3, 0.1, 0.29, 0.31, 1.0, 5.0, 19.9, 20.1, 1e3, 1e8}) {
        CAPTURE(x);
        const double w = bisect_w(x);
        CHECK(std::abs(lambert_w0(x) - w) <= 1e-15 * w);
    }
}

TEST_CASE("round trip on a log grid") {
    const int n = 10000;
    double worst = 0.0;
    double prev = -1.0;
    bool monotone = true;
    for (int i = 0; i < n; ++i) {
        const double x = std::pow(10.0, -12.0 + 24.0 * i / (n - 1));
        const double w = lambert_w0(x);
        worst = std::max(worst, std::abs(w * std::exp(w) - x) / x);
        monotone = monotone && w > prev;
        prev = w;
    }
    CHECK(worst <= 1e-13);
    CHECK(monotone);
}

TEST_CASE("W(y e^y) = y") {
    for (double y = 1e-6; y < 600.0; y *= 1.7) {
        CAPTURE(y);
        CHECK(std::abs(lambert_w0(y * std::exp(y)) - y) <= 1e-13 * y);
    }
}

TEST_CASE("log-space evaluation") {
    CHECK(lambert_w0_from_log(-std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(lambert_w0_from_log(-1000.0) >= 0.0);
    CHECK(lambert_w0_from_log(-1000.0) < 1e-300);
    for (double lx : {-30.0, -1.0, 0.0, 1.0, 10.0, 700.0}) {
        CAPTURE(lx);
        CHECK(std::abs(lambert_w0_from_log(lx) - lambert_w0(std::exp(lx))) <=
              2e-15 * lambert_w0(std::exp(lx)));
    }
    // Beyond double range: w + ln w = ln x.
    for (double lx : {800.0, 1e4, 1e6}) {
        const double w = lambert_w0_from_log(lx);
        CHECK(std::abs(w + std::log(w) - lx) <= 1e-13 * lx);
    }
}
