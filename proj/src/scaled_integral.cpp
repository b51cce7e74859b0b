#include "xitail/scaled_integral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "xitail/detail/kahan.hpp"
#include "xitail/errors.hpp"
#include "xitail/specfun.hpp"

namespace xitail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Empirical ceiling for |Z(t)| / t^{1/4} on [50, 1e6]; the measured
// maximum is ~1.74, so 4 leaves a wide margin.  The tail bounds below
// are invalid if this ever fails, and a test scans for exactly that.
constexpr double kCz = 4.0;
// |Gamma(1/4+it/2)| / (its leading asymptotic) deviates by O(1/t^2);
// 1.01 covers t >= 50 with orders of magnitude to spare.
constexpr double kCgamma = 1.01;

// 15-point Kronrod rule with embedded 7-point Gauss (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double err;     // |kronrod - gauss|
  double resabs;  // integral of |f|
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = kXgk[j] * h;
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * h, std::abs(resk - resg) * h, resabs * h};
}

// Panel edges over [lo, hi]: step ties the panel to <= 1/8 of the local
// oscillation period (h = pi / (4 theta')), and panels never straddle the
// integrand's model breakpoints -- the z dispatch at t = 200 and the
// Riemann-Siegel term entries t = 2 pi n^2 -- so every panel sees a
// smooth integrand.
std::vector<double> panel_edges(double lo, double hi, int halvings) {
  std::vector<double> brk;
  if (lo < 200.0 && 200.0 < hi) brk.push_back(200.0);
  for (auto n = (std::int64_t)std::max(2.0, std::ceil(std::sqrt(lo / kTwoPi)));
       kTwoPi * (double)n * (double)n < hi; ++n) {
    const double te = kTwoPi * (double)n * (double)n;
    if (te > lo) brk.push_back(te);
  }
  std::sort(brk.begin(), brk.end());
  brk.push_back(hi);

  std::vector<double> edges;
  edges.push_back(lo);
  double seg_lo = lo;
  for (double seg_hi : brk) {
    double t = seg_lo;
    while (t < seg_hi) {
      const double h = std::numbers::pi / (4.0 * detail::dtheta(t)) /
                       (double)(1LL << halvings);
      t = std::min(t + h, seg_hi);
      edges.push_back(t);
    }
    seg_lo = seg_hi;
  }
  return edges;
}

struct TailChoice {
  double length;
  double bound;
};

// Truncation length L so that c0 e^{-alpha L} T^{-beta} *
// integral-closed-form((T+L)^2 envelope) < tol/2, using
// int_X^inf t^2 e^{-alpha t} dt = e^{-alpha X}(X^2/a + 2X/a^2 + 2/a^3).
TailChoice tail_choice(double T, double tol, double c0) {
  double L = 60.0;
  for (int i = 0; i < 4; ++i) {
    const double X = T + L;
    const double poly =
        X * X / kAlpha + 2.0 * X / (kAlpha * kAlpha) + 2.0 / (kAlpha * kAlpha * kAlpha);
    L = std::log(std::max(c0 * poly * std::pow(T, -kBeta) / (0.5 * tol), 2.0)) /
        kAlpha;
  }
  const double X = T + L;
  const double poly =
      X * X / kAlpha + 2.0 * X / (kAlpha * kAlpha) + 2.0 / (kAlpha * kAlpha * kAlpha);
  return {L, c0 * std::exp(-kAlpha * L) * poly * std::pow(T, -kBeta)};
}

QuadResult run_quad(const std::function<double(double)>& f, double T,
                    double tol, double tail_c0, const char* name) {
  if (!(T >= 50.0)) throw DomainError(std::string(name) + ": requires T >= 50");
  if (!(tol >= 1.0e-12 && tol <= 1.0e-2))
    throw DomainError(std::string(name) + ": tol outside [1e-12, 1e-2]");
  const TailChoice tail = tail_choice(T, tol, tail_c0);

  double best_value = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  std::int64_t evals = 0;
  for (int halvings = 0; halvings <= 2; ++halvings) {
    const std::vector<double> edges = panel_edges(T, T + tail.length, halvings);
    detail::KahanSum val, err, resabs;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (!(edges[i + 1] > edges[i])) continue;
      const PanelResult p = gk15(f, edges[i], edges[i + 1]);
      val.add(p.value);
      err.add(p.err);
      resabs.add(p.resabs);
      evals += 15;
    }
    const double err_est =
        std::max(err.value(),
                 50.0 * std::numeric_limits<double>::epsilon() * resabs.value());
    if (err_est < best_err) {
      best_err = err_est;
      best_value = val.value();
    }
    if (err_est + tail.bound <= tol)
      return QuadResult{val.value(), err_est, tail.bound, evals};
    // A second pass only helps while the estimate is above the roundoff
    // floor of the panel sum; stop early once it is not.
    if (err.value() <= 100.0 * std::numeric_limits<double>::epsilon() *
                           resabs.value())
      break;
  }
  throw ToleranceNotMet(std::string(name) + ": tolerance not met",
                        best_value, best_err + tail.bound);
}

}  // namespace

QuadResult psi_quad(double T, double tol) {
  // |Xi(t)| <= (pi/2)^{1/4} Cgamma Cz e^{-alpha t} (t^2 + 1/4)
  const double c0 = std::pow(std::numbers::pi / 2.0, 0.25) * kCgamma * kCz *
                    (1.0 + 0.25 / (50.0 * 50.0));
  const double scale = kAlpha * T - kBeta * std::log(T);
  auto f = [&](double t) {
    const ScaledValue xi = xi_scaled(t);
    return xi.sign == 0 ? 0.0
                        : (double)xi.sign * std::exp(xi.log_mag + scale);
  };
  return run_quad(f, T, tol, c0, "psi_quad");
}

QuadResult phi1_scaled_quad(double T, double tol) {
  // |integrand| <= Cz e^{-alpha(t-T)} (t/T)^beta t^{1/4}, and
  // beta + 1/4 = 2 makes the same closed-form envelope work.
  const double ln_T = std::log(T);
  auto f = [&](double t) {
    return std::exp(-kAlpha * (t - T) + kBeta * (std::log(t) - ln_T)) * z(t);
  };
  return run_quad(f, T, tol, kCz, "phi1_scaled_quad");
}

double phi1_scaled_explicit(double T) {
  if (!(T >= 50.0)) throw DomainError("phi1_scaled_explicit: requires T >= 50");
  const double th = detail::theta(T);
  const double thp = detail::dtheta(T);
  const double lead = (std::cos(th) - (thp / kAlpha) * std::sin(th)) /
                      (1.0 + (thp / kAlpha) * (thp / kAlpha));
  const double P0 = std::sqrt(T / kTwoPi);
  const auto m = (std::int64_t)P0;  // n-sum runs over 2 <= n <= P0
  detail::KahanSum acc;
  for (std::int64_t n = 2; n <= m; ++n) {
    const double ln_n = std::log((double)n);
    const double d = (thp - ln_n) / kAlpha;
    const double ph = th - T * ln_n;
    acc.add((std::cos(ph) - d * std::sin(ph)) /
            (std::sqrt((double)n) * (1.0 + d * d)));
  }
  return (2.0 / kAlpha) * (lead + acc.value());
}

double psi_explicit(double T) { return kA * phi1_scaled_explicit(T); }

namespace detail {

double psi_window(double T) { return 3.0 * std::sqrt(T) / std::log(T); }

double integrate_xi_scaled(double a, double b, double ref_T) {
  const double scale = kAlpha * ref_T - kBeta * std::log(ref_T);
  auto f = [&](double t) {
    const ScaledValue xi = xi_scaled(t);
    return xi.sign == 0 ? 0.0
                        : (double)xi.sign * std::exp(xi.log_mag + scale);
  };
  const std::vector<double> edges = panel_edges(a, b, 0);
  KahanSum val;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    val.add(gk15(f, edges[i], edges[i + 1]).value);
  }
  return val.value();
}

}  // namespace detail

double psi_at_gram(const GramPoint& gp, double T) {
  if (!(T >= 50.0)) throw DomainError("psi_at_gram: requires T >= 50");
  if (!(gp.t >= T && gp.t <= T + detail::psi_window(T)))
    throw WindowViolation("psi_at_gram: Gram point outside [T, T + window]");
  const double thp = detail::dtheta(T);
  const double parity = (gp.nu & 1) ? -1.0 : 1.0;  // (-1)^nu
  const double lead =
      parity / (1.0 + (thp / kAlpha) * (thp / kAlpha));
  const double P0 = std::sqrt(T / kTwoPi);
  auto m = (std::int64_t)P0;
  if ((double)m == P0) --m;  // strict n < P0
  detail::KahanSum acc;
  for (std::int64_t n = 2; n <= m; ++n) {
    const double ln_n = std::log((double)n);
    const double d = (thp - ln_n) / kAlpha;
    acc.add((parity * std::cos(gp.t * ln_n) +
             d * parity * std::sin(gp.t * ln_n)) /
            (std::sqrt((double)n) * (1.0 + d * d)));
  }
  return (2.0 * kA / kAlpha) * (lead + acc.value());
}

}  // namespace xitail
