#include "xitail/specfun.hpp"

#include <cmath>
#include <numbers>

#include "xitail/detail/kahan.hpp"
#include "xitail/errors.hpp"

namespace xitail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Lanczos rational approximation, g = 607/128 with the 15-coefficient
// set of Godfrey (as used by GSL and Meta.Numerics).  Relative error
// < 1e-15 in the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

// Even Bernoulli numbers B_2 .. B_12 for the Euler-Maclaurin tail.
constexpr double kB2k[6] = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0,
                            -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

}  // namespace

std::complex<double> log_gamma(std::complex<double> zz) {
  if (!(zz.real() > 0.0))
    throw DomainError("log_gamma: requires Re z > 0");
  // ln Gamma(z) = ln sqrt(2pi) + (z - 1/2) ln w - w + ln S(z),
  // w = z + g - 1/2.  S(z) stays clear of the negative real axis for
  // Re z > 0, so the principal log of S introduces no branch jumps;
  // the unbounded part of Im ln Gamma is carried by (z - 1/2) ln w.
  const std::complex<double> w = zz + (kLanczosG - 0.5);
  std::complex<double> s(kLanczosC[0], 0.0);
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (zz + double(k - 1));
  return 0.5 * std::log(kTwoPi) + (zz - 0.5) * std::log(w) - w + std::log(s);
}

namespace detail {

double theta(double t) {
  return -0.5 * t * std::log(kPi) +
         log_gamma(std::complex<double>(0.25, 0.5 * t)).imag();
}

double theta_asym(double t) {
  const double t2 = t * t;
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 +
         1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2);
}

double theta_fast(double t) { return t < 1.0e4 ? theta(t) : theta_asym(t); }

double dtheta(double t) {
  const double t2 = t * t;
  return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t2) -
         7.0 / (1920.0 * t2 * t2);
}

double d2theta(double t) {
  const double t2 = t * t;
  return 0.5 / t + 1.0 / (24.0 * t * t2) + 7.0 / (480.0 * t * t2 * t2);
}

}  // namespace detail

ThetaJet theta_jet(double t, ThetaMode mode) {
  if (!(t >= 20.0)) throw DomainError("theta_jet: requires t >= 20");
  const double th =
      mode == ThetaMode::Exact ? detail::theta(t) : detail::theta_asym(t);
  return ThetaJet{t, th, detail::dtheta(t), detail::d2theta(t), mode};
}

double z_em(double t) {
  if (!(t > 0.0 && t <= 1.0e5))
    throw DomainError("z_em: requires 0 < t <= 1e5");
  const std::complex<double> s(0.5, t);
  const long long N = std::max(20LL, (long long)std::ceil(2.0 * t));

  // zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
  //           + sum_k B_2k/(2k)! (s)(s+1)...(s+2k-2) N^{1-s-2k}
  detail::KahanSum re, im;
  for (long long n = 1; n < N; ++n) {
    const double ln_n = std::log((double)n);
    const double r = 1.0 / std::sqrt((double)n);
    re.add(r * std::cos(t * ln_n));
    im.add(-r * std::sin(t * ln_n));
  }
  std::complex<double> zeta(re.value(), im.value());
  const double dN = (double)N;
  const std::complex<double> nN =
      std::exp(-s * std::log(dN));  // N^{-s}
  zeta += 0.5 * nN;
  zeta += nN * dN / (s - 1.0);
  double fact = 1.0;
  std::complex<double> rising(1.0, 0.0);
  double npow = 1.0;  // N^{2k-1}
  for (int k = 1; k <= 6; ++k) {
    fact *= (2 * k - 1) * (2 * k);
    rising = (k == 1) ? s : rising * (s + double(2 * k - 3)) * (s + double(2 * k - 2));
    npow *= (k == 1) ? dN : dN * dN;
    zeta += (kB2k[k - 1] / fact) * rising * nN / npow;
  }

  // Z = Re(e^{i theta} zeta); the imaginary part vanishes up to rounding.
  const double th = detail::theta_fast(t);
  return std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
}

namespace {

// First Riemann-Siegel correction C0(p) = cos(2pi(p^2-p-1/16))/cos(2pi p).
// Both factors vanish at p = 1/4 and 3/4; near those points use the
// Taylor ratio (cubic over cubic) of the removable singularity.
double rs_c0(double p) {
  const double den = std::cos(kTwoPi * p);
  if (std::abs(den) < 1.0e-3) {
    const double p0 = std::abs(p - 0.25) < std::abs(p - 0.75) ? 0.25 : 0.75;
    const double d = p - p0;
    // at both points: sin g = -1, cos g = 0, g' = -+pi; cos(2pi p0) = 0
    const double sgn = (p0 == 0.25) ? 1.0 : -1.0;
    const double num = 1.0 - sgn * 2.0 * d - (kPi * kPi / 6.0) * d * d;
    const double dnm = 2.0 - (4.0 * kPi * kPi / 3.0) * d * d;
    return num / dnm;
  }
  return std::cos(kTwoPi * (p * p - p - 1.0 / 16.0)) / den;
}

}  // namespace

double z_rs(double t, int order) {
  if (!(t >= 50.0)) throw DomainError("z_rs: requires t >= 50");
  if (order != 0 && order != 1) throw DomainError("z_rs: order must be 0 or 1");
  const double x = std::sqrt(t / kTwoPi);
  const long long m = (long long)x;
  const double th = detail::theta_fast(t);
  detail::KahanSum acc;
  for (long long n = 1; n <= m; ++n) {
    acc.add(std::cos(th - t * std::log((double)n)) /
            std::sqrt((double)n));
  }
  double val = 2.0 * acc.value();
  if (order == 1) {
    const double p = x - (double)m;
    const double corr = ((m & 1) ? 1.0 : -1.0)  // (-1)^{m+1}
                        * std::pow(t / kTwoPi, -0.25) * rs_c0(p);
    val += corr;
  }
  return val;
}

double z(double t) {
  if (!(t >= 10.0)) throw DomainError("z: requires t >= 10");
  return t < 200.0 ? z_em(t) : z_rs(t, 1);
}

ScaledValue ScaledValue::from(double v) {
  if (v == 0.0) return ScaledValue{0, 0.0};
  return ScaledValue{v > 0.0 ? 1 : -1, std::log(std::abs(v))};
}

double ScaledValue::value() const {
  return sign == 0 ? 0.0 : (double)sign * std::exp(log_mag);
}

ScaledValue xi_scaled(double t) {
  if (!(t >= 20.0)) throw DomainError("xi_scaled: requires t >= 20");
  const double zt = z(t);
  if (zt == 0.0) return ScaledValue{0, 0.0};
  // ln|Xi| = ln(t^2+1/4) + Re ln Gamma(1/4+it/2) - ln 2 - ln(pi)/4 + ln|Z|
  const double lg = log_gamma(std::complex<double>(0.25, 0.5 * t)).real();
  const double log_mag = std::log(t * t + 0.25) + lg - std::log(2.0) -
                         0.25 * std::log(kPi) + std::log(std::abs(zt));
  return ScaledValue{zt > 0.0 ? -1 : 1, log_mag};
}

}  // namespace xitail
