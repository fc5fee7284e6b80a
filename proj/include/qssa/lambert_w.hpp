#ifndef QSSA_LAMBERT_W_HPP
#define QSSA_LAMBERT_W_HPP

namespace qssa {

/**
 * @brief Principal branch W0 of the Lambert W function on [0, inf).
 *
 * Solves w e^w = x for w >= 0. W(0) = 0 exactly.
 * @throws DomainError if x is negative or not finite.
 */
double lambert_w0(double x);

/**
 * @brief W0(exp(log_x)), evaluated without forming exp(log_x).
 *
 * Used where the argument is a product like a*exp(b) that may overflow or
 * underflow. log_x = -inf gives 0.
 * @throws DomainError if log_x is NaN or +inf.
 */
double lambert_w0_from_log(double log_x);

}  // namespace qssa

#endif  // QSSA_LAMBERT_W_HPP
