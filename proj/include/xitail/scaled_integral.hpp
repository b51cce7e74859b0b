#ifndef XITAIL_SCALED_INTEGRAL_HPP
#define XITAIL_SCALED_INTEGRAL_HPP

#include <cstdint>

#include "xitail/gram.hpp"

namespace xitail {

// Damping exponent and power of the weight e^{-alpha t} t^beta, and the
// proportionality constant a of Xi(t) ~ a e^{-alpha t} t^beta Z(t).
inline constexpr double kAlpha = 0.78539816339744830961;  // pi/4
inline constexpr double kBeta = 1.75;                     // 7/4
inline constexpr double kA = -1.1195151349202476787;      // -(pi/2)^{1/4}

/// Result of a scaled tail quadrature.  On success
/// err_est + tail_bound <= the requested tolerance; tail_bound covers the
/// truncated [T+L, inf) remainder analytically via |Z(t)| <= C_Z t^{1/4}.
struct QuadResult {
  double value;
  double err_est;
  double tail_bound;
  std::int64_t evals;
};

/// Psi(T) = e^{alpha T} T^{-beta} integral_T^inf Xi(t) dt by panelwise
/// Gauss-Kronrod quadrature of the scaled integrand.  T >= 50,
/// 1e-12 <= tol <= 1e-2.  Throws ToleranceNotMet when the roundoff floor
/// of the panel sum exceeds tol.
QuadResult psi_quad(double T, double tol);

/// e^{alpha T} T^{-beta} Phi_1(T), Phi_1(T) = integral_T^inf
/// e^{-alpha t} t^beta Z(t) dt; same contract as psi_quad.  The scaled
/// integrand is e^{-alpha(t-T)} (t/T)^beta Z(t), which equals Z(T) at t=T.
QuadResult phi1_scaled_quad(double T, double tol);

/// Explicit trigonometric-sum formula for Psi(T): leading term
/// (2a/alpha) [cos theta - (theta'/alpha) sin theta] / (1 + theta'^2/alpha^2)
/// plus the n-sum over 2 <= n <= sqrt(T/2pi), dropping the O(T^{-1/4})
/// remainder.  T >= 50.
double psi_explicit(double T);

/// Same sum with the factor 2/alpha instead of 2a/alpha, so that
/// a * phi1_scaled_explicit(T) == psi_explicit(T) exactly.
double phi1_scaled_explicit(double T);

/// Psi at a Gram point with coefficients frozen at T: the phases reduce
/// to (-1)^nu cos(t_nu ln n) and (-1)^nu sin(t_nu ln n).  Requires
/// gp.t in [T, T + 3 sqrt(T)/ln T] (window of the frozen-coefficient
/// formula); throws WindowViolation otherwise.
double psi_at_gram(const GramPoint& gp, double T);

namespace detail {
// Longest admissible frozen-coefficient window at T.
double psi_window(double T);
// Panelwise GK15 integral of the scaled Xi integrand
// sign(Xi(t)) exp(log|Xi(t)| + alpha*ref_T - beta*ln ref_T) over [a, b].
// Used for the equilibrium area decomposition; no tail handling.
double integrate_xi_scaled(double a, double b, double ref_T);
}  // namespace detail

}  // namespace xitail

#endif  // XITAIL_SCALED_INTEGRAL_HPP
