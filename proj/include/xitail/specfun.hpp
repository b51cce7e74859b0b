#ifndef XITAIL_SPECFUN_HPP
#define XITAIL_SPECFUN_HPP

#include <complex>

namespace xitail {

enum class ThetaMode { Exact, Asymptotic };

/// Riemann-Siegel theta at a point together with its first two
/// derivatives.  theta is strictly increasing on t >= 20 with
/// theta' = (1/2) ln(t/2pi) + O(1/t^2) and theta'' ~ 1/(2t).
struct ThetaJet {
  double t;
  double theta;
  double dtheta;
  double d2theta;
  ThetaMode mode;
};

/// Sign and natural log of magnitude, for quantities such as Xi(t)
/// that decay like e^{-pi t/4} and underflow doubles past t ~ 880.
/// log_mag is ignored when sign == 0.
struct ScaledValue {
  int sign;
  double log_mag;

  static ScaledValue from(double v);
  double value() const;
};

/// Principal-branch complex log-gamma for Re z > 0.  The imaginary part
/// is continuous along vertical lines (no 2pi jumps), which is what the
/// theta evaluation relies on.
std::complex<double> log_gamma(std::complex<double> z);

/// theta(t) = -(t/2) ln pi + Im ln Gamma(1/4 + it/2), for t >= 20.
/// Exact mode goes through log_gamma; Asymptotic mode uses the series
/// (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).  Derivatives
/// come from the asymptotic series in both modes.
ThetaJet theta_jet(double t, ThetaMode mode);

/// Hardy Z via Euler-Maclaurin evaluation of zeta(1/2+it); the
/// high-accuracy reference method.  0 < t <= 1e5; absolute error
/// <= 1e-10 for t <= 1e4.
double z_em(double t);

/// Hardy Z via the Riemann-Siegel main sum (order 0) or main sum plus
/// the first correction term (order 1), for t >= 50.
double z_rs(double t, int order);

/// Dispatcher: z_em below t = 200, z_rs order 1 from there on.  t >= 10.
double z(double t);

/// Scaled Xi(t) = -(1/(2 pi^{1/4})) (t^2 + 1/4) |Gamma(1/4 + it/2)| Z(t),
/// returned as sign + log-magnitude.  sign(Xi) = -sign(Z).  t >= 20.
ScaledValue xi_scaled(double t);

namespace detail {
// Unchecked evaluations used internally (Gram solving needs theta down
// to t ~ 10, z_em needs the phase at any t > 0).
double theta(double t);        // exact, any t > 0
double theta_asym(double t);   // series, t >= 10
double theta_fast(double t);   // exact below 1e4, series beyond
double dtheta(double t);       // series, t >= 10
double d2theta(double t);      // series, t >= 10
}  // namespace detail

}  // namespace xitail

#endif  // XITAIL_SPECFUN_HPP
