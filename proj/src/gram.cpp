#include "xitail/gram.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "xitail/errors.hpp"
#include "xitail/specfun.hpp"

namespace xitail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

// Invert the leading asymptotic theta(t) ~ (t/2) ln(t/(2 pi e)) - pi/8:
// with u = t/(2 pi e) and rho = (2 pi nu + pi/4)/(2 pi e), the equation
// u ln u = rho has u = e^{W(rho)}.  A few Newton steps on W are enough
// for a guess well inside the Newton basin of the full solve.
double initial_guess(std::int64_t nu) {
  const double rho = (2.0 * kPi * (double)nu + kPi / 4.0) / kTwoPiE;
  double w = std::log1p(rho);
  for (int i = 0; i < 4; ++i) {
    const double ew = std::exp(w);
    w -= (w * ew - rho) / (ew * (1.0 + w));
  }
  return kTwoPiE * std::exp(w);
}

}  // namespace

GramPoint gram_point(std::int64_t nu) {
  if (nu < 0) throw DomainError("gram_point: requires nu >= 0");
  const double target = kPi * (double)nu;
  // |theta| ~ pi nu, so the residual cannot be resolved below a few ulps
  // of the target at large indices.
  const double tol = std::max(
      1.0e-10, 4.0 * std::numeric_limits<double>::epsilon() * target);
  double t = initial_guess(nu);
  double f = detail::theta(t) - target;
  for (int it = 0; it < 12; ++it) {
    if (std::abs(f) <= tol)
      return GramPoint{nu, t, std::abs(f)};
    t -= f / detail::dtheta(t);
    f = detail::theta(t) - target;
  }
  if (std::abs(f) <= tol) return GramPoint{nu, t, std::abs(f)};
  throw NonConvergence("gram_point: Newton did not converge for nu=" +
                       std::to_string(nu));
}

std::vector<GramPoint> gram_points_in(double T, double H) {
  if (!(T >= 50.0)) throw DomainError("gram_points_in: requires T >= 50");
  if (!(H > 0.0 && H <= T))
    throw DomainError("gram_points_in: requires 0 < H <= T");
  const auto nu_lo = (std::int64_t)std::ceil(detail::theta(T) / kPi);
  const auto nu_hi = (std::int64_t)std::floor(detail::theta(T + H) / kPi);
  std::vector<GramPoint> out;
  if (nu_hi < nu_lo) return out;
  out.reserve((std::size_t)(nu_hi - nu_lo + 1));
  for (std::int64_t nu = nu_lo; nu <= nu_hi; ++nu)
    out.push_back(gram_point(nu));
  return out;
}

}  // namespace xitail
