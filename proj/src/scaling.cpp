#include "qssa/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qssa/errors.hpp"

namespace qssa {

namespace {

constexpr double kDedupTolerance = 1e-9;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= kDedupTolerance * std::max(std::abs(a), std::abs(b));
}

// Appends v to a set kept distinct under nearly_equal.
void insert_distinct(std::vector<double>& values, double v) {
    for (double existing : values) {
        if (nearly_equal(existing, v)) return;
    }
    values.push_back(v);
}

void validate(const BoundedSystem& sys) {
    const std::size_t n = sys.names.size();
    if (n == 0) throw std::invalid_argument("scale_system: empty system");
    if (sys.bounds.size() != n || sys.equations.size() != n) {
        throw std::invalid_argument("scale_system: names, bounds and equations differ in length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(sys.bounds[i]) || sys.bounds[i] <= 0.0) {
            throw DegenerateBoundError("scale_system: bound of '" + sys.names[i] +
                                       "' must be positive and finite");
        }
        for (const Term& term : sys.equations[i]) {
            if (term.exponents.size() != n) {
                throw std::invalid_argument("scale_system: exponent vector of wrong length in d" +
                                            sys.names[i] + "/dt");
            }
            if (std::any_of(term.exponents.begin(), term.exponents.end(),
                            [](int e) { return e < 0; })) {
                throw std::invalid_argument("scale_system: negative exponent in d" + sys.names[i] +
                                            "/dt");
            }
            if (!std::isfinite(term.coefficient)) {
                throw std::invalid_argument("scale_system: non-finite coefficient in d" +
                                            sys.names[i] + "/dt");
            }
        }
    }
    for (double r : sys.gathered_rates) {
        if (!std::isfinite(r) || r <= 0.0) {
            throw std::invalid_argument("scale_system: gathered rates must be positive");
        }
    }
}

}  // namespace

ScalingReport scale_system(const BoundedSystem& sys) {
    validate(sys);
    const std::size_t n = sys.names.size();

    ScalingReport report;
    report.names = sys.names;
    report.variable_scales = sys.bounds;
    report.named_groups = sys.named_groups;
    report.gathering_declared = !sys.gathered_rates.empty();

    // x_j = bound_j * y_j turns coefficient c of dx_i/dt into c * prod bound_j^e_j / bound_i.
    report.scaled_equations.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const Term& term : sys.equations[i]) {
            double factor = 1.0 / sys.bounds[i];
            for (std::size_t j = 0; j < n; ++j) factor *= std::pow(sys.bounds[j], term.exponents[j]);
            report.scaled_equations[i].push_back({term.exponents, term.coefficient * factor});
        }
    }

    std::vector<double> rates;
    if (report.gathering_declared) {
        for (double r : sys.gathered_rates) insert_distinct(rates, r);
    } else {
        for (const auto& eq : report.scaled_equations) {
            double leading = 0.0;
            for (const Term& term : eq) {
                const int degree = std::accumulate(term.exponents.begin(), term.exponents.end(), 0);
                if (degree == 1) leading = std::max(leading, std::abs(term.coefficient));
            }
            if (leading > 0.0) insert_distinct(rates, leading);
        }
    }
    if (rates.empty()) {
        throw std::invalid_argument("scale_system: no linear rate group to form a time scale from");
    }

    for (double r : rates) report.time_scales.push_back(1.0 / r);
    std::sort(report.time_scales.begin(), report.time_scales.end());

    for (double tau : report.time_scales) {
        TimeScaleCandidate cand;
        cand.time_scale = tau;
        for (const auto& eq : report.scaled_equations) {
            std::vector<double> row;
            for (const Term& term : eq) {
                const double value = term.coefficient * tau;
                row.push_back(value);
                const double magnitude = std::abs(value);
                if (magnitude > 0.0 && !nearly_equal(magnitude, 1.0)) {
                    insert_distinct(cand.groups, magnitude);
                }
            }
            cand.coefficients.push_back(std::move(row));
        }
        std::sort(cand.groups.begin(), cand.groups.end());
        report.candidates.push_back(std::move(cand));
    }
    for (std::size_t i = 1; i < report.time_scales.size(); ++i) {
        report.separation_ratios.push_back(report.time_scales[i] / report.time_scales[i - 1]);
    }
    return report;
}

BoundedSystem sc_bounded_system(const RateConstants& rates, const DerivedConstants& dc,
                                RegimeKind regime) {
    const double k1 = rates.k1();
    BoundedSystem sys;
    sys.names = {"S", "C"};
    sys.bounds = {dc.a1, dc.a4};
    sys.equations = {
        {{{1, 0}, -k1 * dc.a2}, {{1, 1}, k1}, {{0, 1}, rates.k_minus1()}},
        {{{1, 0}, k1 * dc.a2}, {{1, 1}, -k1}, {{0, 1}, -(rates.k_minus1() + rates.k2())}},
    };
    const double fast_cycle = k1 * (dc.k_m + dc.a1);
    switch (regime) {
        case RegimeKind::StandardQSSA:
            sys.gathered_rates = {k1 * dc.a2, fast_cycle};
            sys.named_groups = {{"epsilon", dc.epsilon}, {"sigma", dc.sigma}, {"rho", dc.rho}};
            break;
        case RegimeKind::ReverseQSSA:
            // Both equations share the prefactor k1 (k_m + a1) a2 / a1; the slow
            // scale is that prefactor's reciprocal divided by eta.
            sys.gathered_rates = {fast_cycle * dc.a2 / dc.a1, fast_cycle};
            if (dc.eta) sys.named_groups = {{"eta", *dc.eta}, {"sigma", dc.sigma}, {"rho", dc.rho}};
            break;
        case RegimeKind::Intermediate:
            sys.named_groups = {{"epsilon", dc.epsilon}, {"sigma", dc.sigma}, {"rho", dc.rho}};
            break;
    }
    return sys;
}

BoundedSystem sir_bounded_system(double beta, double gamma, double n0) {
    if (!(beta > 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("sir_bounded_system: beta and gamma must be positive");
    }
    BoundedSystem sys;
    sys.names = {"S", "I", "R"};
    sys.bounds = {n0, n0, n0};
    sys.equations = {
        {{{1, 1, 0}, -beta}},
        {{{0, 1, 0}, -gamma}, {{1, 1, 0}, beta}},
        {{{0, 1, 0}, gamma}},
    };
    sys.named_groups = {{"R0", beta * n0 / gamma}};
    return sys;
}

ReducedState ScaledScSystem::rhs(const ReducedState& y) const {
    auto eval = [&y](const ScaledEquation& eq) {
        double sum = 0.0;
        for (const auto& m : eq.terms) {
            sum += m.weight * std::pow(y.s, m.s_exponent) * std::pow(y.c, m.c_exponent);
        }
        return eq.prefactor * sum;
    };
    return {eval(ds), eval(dc)};
}

std::vector<double> ScaledScSystem::effective(int equation) const {
    const ScaledEquation& eq = equation == 0 ? ds : dc;
    std::vector<double> out;
    for (const auto& m : eq.terms) out.push_back(eq.prefactor * m.weight);
    return out;
}

ScaledScSystem scaled_sc_coefficients(const DerivedConstants& dc, RegimeKind regime,
                                      ScaleChoice choice) {
    if (regime == RegimeKind::Intermediate) {
        throw NotApplicableError("scaled_sc_coefficients: no grouped form for the intermediate regime");
    }
    if (!(dc.a1 > 0.0) || !(dc.a2 > 0.0)) {
        throw NotApplicableError("scaled_sc_coefficients: requires a1 > 0 and a2 > 0");
    }
    const double sigma = dc.sigma;
    const double rho = dc.rho;
    const double s_frac = sigma / (1.0 + sigma);                    // sigma/(1+sigma)
    const double unbind = rho / ((1.0 + rho) * (1.0 + sigma));     // rho/((1+rho)(1+sigma))
    const double c_decay = 1.0 / (1.0 + sigma);                    // 1/(1+sigma)

    ScaledScSystem out{};
    out.regime = regime;
    out.choice = choice;
    out.s_scale = dc.a1;

    if (regime == RegimeKind::StandardQSSA) {
        const double eps = dc.epsilon;
        out.c_scale = eps * dc.a1;
        out.ds.terms = {{1, 0, -1.0}, {1, 1, s_frac}, {0, 1, unbind}};
        out.dc.terms = {{1, 0, 1.0}, {1, 1, -s_frac}, {0, 1, -c_decay}};
        if (choice == ScaleChoice::T1) {
            out.time_scale = dc.t1_s;
            out.ds.prefactor = eps;
            out.dc.prefactor = 1.0;
        } else {
            out.time_scale = *dc.t2_s;
            out.ds.prefactor = 1.0;
            out.dc.prefactor = 1.0 / eps;
        }
    } else {
        const double eta = *dc.eta;
        out.c_scale = dc.a1;
        out.ds.terms = {{1, 0, -s_frac}, {1, 1, eta * s_frac}, {0, 1, eta * unbind}};
        out.dc.terms = {{1, 0, s_frac}, {1, 1, -eta * s_frac}, {0, 1, -eta * c_decay}};
        if (choice == ScaleChoice::T1) {
            out.time_scale = *dc.t1_r;
            out.ds.prefactor = 1.0;
            out.dc.prefactor = 1.0;
        } else {
            out.time_scale = dc.t2_r;
            out.ds.prefactor = 1.0 / eta;
            out.dc.prefactor = 1.0 / eta;
        }
    }
    return out;
}

}  // namespace qssa
