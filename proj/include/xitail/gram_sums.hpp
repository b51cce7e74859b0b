#ifndef XITAIL_GRAM_SUMS_HPP
#define XITAIL_GRAM_SUMS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace xitail {

/// Frozen-at-T coefficient arrays, index 0 holding n = 2:
///   a_n = (2a/alpha) / (1 + (theta'(T) - ln n)^2 / alpha^2)
///   b_n = (1/alpha)  (theta'(T) - ln n)
/// b_n uses the first power, the one the Psi formula at Gram points
/// carries (the squared variant appears only in the monotonicity note).
struct Coefs {
  double T;
  std::vector<double> a;
  std::vector<double> b;
};

/// Sums of Psi over the Gram points in [T, T+H] with the w-sum
/// decomposition: sum_plain = lead * sum(-1)^nu + w1 + w2 and
/// sum_alt = lead * count + w3 + w4, lead = (2a/alpha)/(1+theta'^2/alpha^2).
struct SumReport {
  double T;
  double H;
  std::int64_t count;
  double sum_plain;           // sum Psi(t_nu)
  double sum_alt;             // sum (-1)^nu Psi(t_nu)
  double main_term;           // (2a/(pi alpha)) H ln P0 / (1 + theta'^2/alpha^2)
  std::array<double, 4> w;    // w1..w4 by direct double summation
};

/// The four double sums evaluated two ways that must agree:
/// directly and through Abel summation by parts over n.
struct WSums {
  std::array<double, 4> direct;
  std::array<double, 4> abel;
};

/// One-parity Gram sums over [T, T + Hbar], Hbar = (1/3) T^{1/6+epsilon},
/// against the predicted main terms +-(a alpha/pi) Hbar / ln P0.
struct AsymReport {
  double T;
  double epsilon;
  double Hbar;
  std::int64_t count_even;
  std::int64_t count_odd;
  double sum_even;   // sum over t_{2nu}
  double sum_odd;    // sum over t_{2nu+1}
  double main_even;  // (a alpha/pi) Hbar / ln P0  (negative)
  double main_odd;   // exact negative of main_even
};

/// Coefficient arrays for 2 <= n < P0 = sqrt(T/2pi); T >= 200.
Coefs coefficients(double T);

/// Gram-point Psi sums over [T, T+H] with frozen-T coefficients.
/// T >= 200; H limited by both the stated window T^{1/2} and the
/// frozen-coefficient window of psi_at_gram.
SumReport gram_sum_psi(double T, double H);

/// w1..w4 by direct summation and by Abel transformation; same window
/// rules as gram_sum_psi.
WSums w_sums(double T, double H);

/// Parity-separated sums; T >= 1e4, 0.1 <= epsilon <= 0.5.  Throws
/// WindowViolation when Hbar exceeds the frozen-coefficient window.
AsymReport asymptotic_check(double T, double epsilon);

}  // namespace xitail

#endif  // XITAIL_GRAM_SUMS_HPP
