#ifndef XITAIL_EQUILIBRIUM_HPP
#define XITAIL_EQUILIBRIUM_HPP

#include <vector>

namespace xitail {

/// A zero of the scaled tail integral Psi, bracketed by a sign change.
/// bracket width < 1e-8; psi_residual < 1e-5 when the point was refined
/// against the quadrature (validate on).
struct EquilibriumPoint {
  int n;               // running index from the scan start (1-based)
  double omega;
  double bracket_lo;
  double bracket_hi;
  double psi_residual;
};

/// Per-interval verification record for [omega_lo, omega_hi]: signed
/// areas of the positive/negative parts of scaled Xi (common reference
/// scale fixed at omega_lo), the Z-zeros inside, and the gap law ratio.
struct IntervalReport {
  int n;
  double omega_lo;
  double omega_hi;
  double gap;
  double gap_ratio;      // gap / omega_lo^{1/6+epsilon}
  double pos_area;
  double neg_area;
  double cancellation;   // |pos+neg| / max(pos, |neg|)
  std::vector<double> zeros;
};

/// Scan psi_explicit from T_start on a grid of step pi/(4 theta'),
/// bisect each sign change to width 1e-9, and (with validate set)
/// re-locate each zero against psi_quad sign evaluations so the reported
/// omega is a zero of the quadrature Psi as well.  Strictly increasing;
/// throws ScanExhausted if [T_start, T_start + 100*count] runs out.
/// T_start >= 200, 1 <= count <= 1e4.
std::vector<EquilibriumPoint> find_omegas(double T_start, int count,
                                          bool validate);

/// Abscissas of sign changes of z on (a, b), each refined to 1e-9.
/// 200 <= a < b, b - a <= 100.  Empty result is valid.
std::vector<double> z_sign_changes(double a, double b);

/// Area decomposition of [lo.omega, hi.omega] split at the Z-zeros;
/// lo and hi must be consecutive outputs of find_omegas.
IntervalReport interval_report(const EquilibriumPoint& lo,
                               const EquilibriumPoint& hi, double epsilon);

}  // namespace xitail

#endif  // XITAIL_EQUILIBRIUM_HPP
