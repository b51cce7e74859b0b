#include "xitail/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "xitail/errors.hpp"
#include "xitail/scaled_integral.hpp"
#include "xitail/specfun.hpp"

namespace xitail {

namespace {

// Calibrated ceiling of |psi_explicit - psi_quad| * T^{1/4} on the
// verification grid (measured ~1.76, frozen with margin).  Inside the
// band 2 K T^{-1/4} the explicit formula's sign is not trustworthy.
constexpr double kRemainderK = 2.0;

constexpr double kValidateTol = 1.0e-10;  // quadrature tol for sign checks
constexpr double kResidualTol = 1.0e-8;   // quadrature tol for the residual
constexpr double kBracketWidth = 1.0e-9;

double scan_step(double t) {
  return std::numbers::pi / (4.0 * detail::dtheta(t));
}

// Bisect f to the requested bracket width; flo = f(lo) on entry.
std::pair<double, double> bisect(const std::function<double(double)>& f,
                                 double lo, double hi, double flo,
                                 double width) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (std::signbit(f(mid)) == std::signbit(flo))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

struct Candidate {
  double zero;  // refined explicit-formula zero
  double lo;    // refined bracket
  double hi;
  double f_lo;  // psi_explicit at the refined bracket ends
  double f_hi;
};

class OmegaScan {
 public:
  OmegaScan(double T_start, int count, bool validate)
      : T_start_(T_start), count_(count), validate_(validate),
        fence_(T_start) {}

  std::vector<EquilibriumPoint> run() {
    const double t_limit = T_start_ + 100.0 * (double)count_;
    double t = T_start_;
    double f_prev = psi_explicit(t);
    while ((int)out_.size() < count_) {
      if (t > t_limit) {
        if (pending_) {
          const Candidate last = *pending_;
          pending_.reset();
          consume(last, std::numeric_limits<double>::max());
        }
        if ((int)out_.size() >= count_) break;
        throw ScanExhausted(
            "find_omegas: fewer than " + std::to_string(count_) +
            " sign changes in [T_start, T_start + 100*count]");
      }
      const double t2 = t + scan_step(t);
      const double f2 = psi_explicit(t2);
      if (std::signbit(f_prev) != std::signbit(f2)) {
        auto [lo, hi] = bisect(psi_explicit, t, t2, f_prev, kBracketWidth);
        const Candidate next{0.5 * (lo + hi), lo, hi, psi_explicit(lo),
                             psi_explicit(hi)};
        if (pending_) {
          const Candidate cur = *pending_;
          pending_.reset();
          consume(cur, next.zero);
        }
        pending_ = next;
      }
      t = t2;
      f_prev = f2;
    }
    out_.resize(std::min(out_.size(), (std::size_t)count_));
    return std::move(out_);
  }

 private:
  void accept(double om, double lo, double hi) {
    const double resid = validate_
                             ? std::abs(psi_quad(om, kResidualTol).value)
                             : std::abs(psi_explicit(om));
    out_.push_back(EquilibriumPoint{(int)out_.size() + 1, om, lo, hi, resid});
    fence_ = hi;
  }

  // Validate one candidate.  The quadrature bracket is clipped to the
  // fence below and to the midpoint towards the next candidate above, so
  // two candidates can never claim the same quadrature zero and omegas
  // stay strictly increasing.
  void consume(Candidate c, double next_zero) {
    if (!validate_) {
      accept(c.zero, c.lo, c.hi);
      return;
    }
    const double band = 2.0 * kRemainderK * std::pow(c.zero, -0.25);
    if (std::min(std::abs(c.f_lo), std::abs(c.f_hi)) >= band) {
      // Crossing steeper than the remainder model allows; cannot happen
      // for a refined bracket, kept as a guard.
      accept(c.zero, c.lo, c.hi);
      return;
    }
    auto quad = [](double x) { return psi_quad(x, kValidateTol).value; };
    const double h = scan_step(c.zero);
    const double blo = std::max(c.zero - h, fence_);
    const double bhi = std::min(c.zero + h, 0.5 * (c.zero + next_zero));
    if (!(bhi > blo)) return;
    const double slo = quad(blo);
    if (std::signbit(slo) != std::signbit(quad(bhi))) {
      auto [lo, hi] = bisect(quad, blo, bhi, slo, kBracketWidth);
      accept(0.5 * (lo + hi), lo, hi);
      return;
    }
    // Same sign at both ends: a spurious crossing inside the remainder
    // band, or a zero pair.  Probe the interior before dropping it.
    for (double p : {c.zero, 0.5 * (blo + c.zero), 0.5 * (c.zero + bhi)}) {
      const double fp = quad(p);
      if (std::signbit(fp) != std::signbit(slo)) {
        auto [lo1, hi1] = bisect(quad, blo, p, slo, kBracketWidth);
        accept(0.5 * (lo1 + hi1), lo1, hi1);
        auto [lo2, hi2] = bisect(quad, p, bhi, fp, kBracketWidth);
        accept(0.5 * (lo2 + hi2), lo2, hi2);
        return;
      }
    }
  }

  double T_start_;
  int count_;
  bool validate_;
  double fence_;
  std::optional<Candidate> pending_;
  std::vector<EquilibriumPoint> out_;
};

}  // namespace

std::vector<EquilibriumPoint> find_omegas(double T_start, int count,
                                          bool validate) {
  if (!(T_start >= 200.0))
    throw DomainError("find_omegas: requires T_start >= 200");
  if (count < 1 || count > 10000)
    throw DomainError("find_omegas: count outside [1, 1e4]");
  OmegaScan scan(T_start, count, validate);
  auto out = scan.run();
  return out;
}

std::vector<double> z_sign_changes(double a, double b) {
  if (!(a >= 200.0 && a < b))
    throw DomainError("z_sign_changes: requires 200 <= a < b");
  if (!(b - a <= 100.0))
    throw DomainError("z_sign_changes: requires b - a <= 100");
  const double step =
      std::min(0.05, std::numbers::pi / (8.0 * detail::dtheta(a)));
  std::vector<double> zeros;
  double t = a;
  double f_prev = z(t);
  while (t < b) {
    const double t2 = std::min(t + step, b);
    const double f2 = z(t2);
    if (std::signbit(f_prev) != std::signbit(f2)) {
      const auto [lo, hi] = bisect([](double x) { return z(x); }, t, t2,
                                   f_prev, kBracketWidth);
      zeros.push_back(0.5 * (lo + hi));
    }
    t = t2;
    f_prev = f2;
  }
  return zeros;
}

IntervalReport interval_report(const EquilibriumPoint& lo,
                               const EquilibriumPoint& hi, double epsilon) {
  if (!(lo.omega < hi.omega))
    throw DomainError("interval_report: requires lo.omega < hi.omega");
  std::vector<double> zeros = z_sign_changes(lo.omega, hi.omega);
  std::vector<double> cuts{lo.omega};
  cuts.insert(cuts.end(), zeros.begin(), zeros.end());
  cuts.push_back(hi.omega);

  // Each sub-interval has one sign of Xi, so pos/neg are both smooth
  // quadratures; the common reference scale keeps them in one unit.
  double pos = 0.0;
  double neg = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double v =
        detail::integrate_xi_scaled(cuts[i], cuts[i + 1], lo.omega);
    (v >= 0.0 ? pos : neg) += v;
  }
  const double gap = hi.omega - lo.omega;
  const double denom = std::max(pos, -neg);
  return IntervalReport{lo.n,
                        lo.omega,
                        hi.omega,
                        gap,
                        gap / std::pow(lo.omega, 1.0 / 6.0 + epsilon),
                        pos,
                        neg,
                        denom > 0.0 ? std::abs(pos + neg) / denom : 1.0,
                        std::move(zeros)};
}

}  // namespace xitail
