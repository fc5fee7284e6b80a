#include "qssa/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qssa/errors.hpp"

namespace qssa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 8;

// Above this the iteration runs on w + ln(w) = ln(x); w > 2 there.
constexpr double kLogFormThreshold = 20.0;

// Halley on f(w) = w e^w - x.
double halley_direct(double x, double w) {
    for (int i = 0; i < kMaxIterations; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 4.0 * kEps * std::abs(w)) break;
    }
    return w;
}

// Halley on g(w) = w + ln(w) - log_x. Well conditioned for large arguments and
// never evaluates exp(w).
double halley_log(double log_x, double w) {
    for (int i = 0; i < kMaxIterations; ++i) {
        const double g = w + std::log(w) - log_x;
        const double dg = 1.0 + 1.0 / w;
        const double d2g = -1.0 / (w * w);
        const double step = g / (dg - g * d2g / (2.0 * dg));
        w -= step;
        if (std::abs(step) <= 4.0 * kEps * std::abs(w)) break;
    }
    return w;
}

double asymptotic_guess(double log_x) {
    const double l2 = std::log(log_x);
    return log_x - l2 + l2 / log_x;
}

}  // namespace

double lambert_w0(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("lambert_w0: argument must be finite and nonnegative, got " +
                          std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x > kLogFormThreshold) {
        const double log_x = std::log(x);
        return halley_log(log_x, asymptotic_guess(log_x));
    }
    double guess;
    if (x < 0.3) {
        guess = x * (1.0 - x * (1.0 - 1.5 * x));
    } else {
        const double l = std::log1p(x);
        guess = l * (1.0 - std::log1p(l) / (2.0 + l));
    }
    return halley_direct(x, guess);
}

double lambert_w0_from_log(double log_x) {
    if (std::isnan(log_x) || log_x == std::numeric_limits<double>::infinity()) {
        throw DomainError("lambert_w0_from_log: log argument must be < +inf");
    }
    if (log_x == -std::numeric_limits<double>::infinity()) return 0.0;
    if (log_x <= std::log(kLogFormThreshold)) {
        // exp may underflow to 0 here, which is also the correct limit of W.
        return lambert_w0(std::exp(log_x));
    }
    return halley_log(log_x, asymptotic_guess(log_x));
}

}  // namespace qssa
