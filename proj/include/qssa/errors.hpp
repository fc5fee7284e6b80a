#ifndef QSSA_ERRORS_HPP
#define QSSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qssa {

/// Argument outside the mathematical domain of a function (e.g. W(x) for x < 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A regime-specific construction was requested where its assumption does not hold.
class NotApplicableError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Adaptive step size collapsed before reaching the end time.
class StiffnessError : public std::runtime_error {
public:
    StiffnessError(const std::string& what, double time_reached)
        : std::runtime_error(what), time_reached_(time_reached) {}

    double time_reached() const noexcept { return time_reached_; }

private:
    double time_reached_;
};

/// A trajectory left the feasible region by more than the absolute tolerance.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qssa

#endif  // QSSA_ERRORS_HPP
