#include "xitail/gram_sums.hpp"

#include <cmath>
#include <numbers>

#include "xitail/detail/kahan.hpp"
#include "xitail/errors.hpp"
#include "xitail/scaled_integral.hpp"
#include "xitail/specfun.hpp"

namespace xitail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t coef_range(double T) {
  const double P0 = std::sqrt(T / kTwoPi);
  auto m = (std::int64_t)P0;
  if ((double)m == P0) --m;  // strict n < P0
  return m;
}

void check_sum_window(double T, double H, const char* name) {
  if (!(T >= 200.0))
    throw DomainError(std::string(name) + ": requires T >= 200");
  if (!(H >= 0.0) || H > std::pow(T, 0.25 + 0.25) ||
      H > detail::psi_window(T))
    throw WindowViolation(std::string(name) + ": H outside the window");
}

}  // namespace

Coefs coefficients(double T) {
  if (!(T >= 200.0)) throw DomainError("coefficients: requires T >= 200");
  const double thp = detail::dtheta(T);
  const std::int64_t m = coef_range(T);
  Coefs c{T, {}, {}};
  c.a.reserve((std::size_t)std::max<std::int64_t>(m - 1, 0));
  c.b.reserve(c.a.capacity());
  for (std::int64_t n = 2; n <= m; ++n) {
    const double d = (thp - std::log((double)n)) / kAlpha;
    c.a.push_back((2.0 * kA / kAlpha) / (1.0 + d * d));
    c.b.push_back(d);
  }
  return c;
}

SumReport gram_sum_psi(double T, double H) {
  check_sum_window(T, H, "gram_sum_psi");
  const auto gps = H > 0.0 ? gram_points_in(T, H) : std::vector<GramPoint>{};
  detail::KahanSum plain, alt;
  for (const GramPoint& gp : gps) {
    const double psi = psi_at_gram(gp, T);
    plain.add(psi);
    alt.add((gp.nu & 1) ? -psi : psi);
  }
  const double thp = detail::dtheta(T);
  const double D0 = 1.0 + (thp / kAlpha) * (thp / kAlpha);
  const double lnP0 = 0.5 * std::log(T / kTwoPi);
  const WSums ws = w_sums(T, H);
  return SumReport{T,
                   H,
                   (std::int64_t)gps.size(),
                   plain.value(),
                   alt.value(),
                   (2.0 * kA / (std::numbers::pi * kAlpha)) * H * lnP0 / D0,
                   ws.direct};
}

WSums w_sums(double T, double H) {
  check_sum_window(T, H, "w_sums");
  const auto gps = H > 0.0 ? gram_points_in(T, H) : std::vector<GramPoint>{};
  const Coefs cf = coefficients(T);
  const std::int64_t m = coef_range(T);

  // Inner Gram sums s_i(n) with the 1/sqrt(n) weight folded in:
  // i = 0: (-1)^nu cos, 1: (-1)^nu sin, 2: cos, 3: sin.
  auto inner = [&](std::int64_t n, int kind) {
    const double ln_n = std::log((double)n);
    detail::KahanSum s;
    for (const GramPoint& gp : gps) {
      const double sgn = (gp.nu & 1) ? -1.0 : 1.0;
      switch (kind) {
        case 0: s.add(sgn * std::cos(gp.t * ln_n)); break;
        case 1: s.add(sgn * std::sin(gp.t * ln_n)); break;
        case 2: s.add(std::cos(gp.t * ln_n)); break;
        default: s.add(std::sin(gp.t * ln_n)); break;
      }
    }
    return s.value() / std::sqrt((double)n);
  };
  auto coef = [&](std::int64_t n, int i) {
    const double an = cf.a[(std::size_t)(n - 2)];
    return (i == 1 || i == 3) ? an * cf.b[(std::size_t)(n - 2)] : an;
  };

  WSums out{};
  for (int i = 0; i < 4; ++i) {  // w1,w2 alternate; w3,w4 plain
    detail::KahanSum direct;
    for (std::int64_t n = 2; n <= m; ++n) direct.add(coef(n, i) * inner(n, i));
    out.direct[(std::size_t)i] = direct.value();

    // Abel: sum c_n s_n = c_m S(m) - sum_{n<m} (c_{n+1} - c_n) S(n),
    // S(n) the running partial sum of s.
    detail::KahanSum abel, partial;
    for (std::int64_t n = 2; n <= m; ++n) {
      partial.add(inner(n, i));
      if (n < m)
        abel.add(-(coef(n + 1, i) - coef(n, i)) * partial.value());
      else
        abel.add(coef(n, i) * partial.value());
    }
    out.abel[(std::size_t)i] = m >= 2 ? abel.value() : 0.0;
  }
  return out;
}

AsymReport asymptotic_check(double T, double epsilon) {
  if (!(T >= 1.0e4)) throw DomainError("asymptotic_check: requires T >= 1e4");
  if (!(epsilon >= 0.1 && epsilon <= 0.5))
    throw DomainError("asymptotic_check: epsilon outside [0.1, 0.5]");
  const double Hbar = std::pow(T, 1.0 / 6.0 + epsilon) / 3.0;
  if (Hbar > detail::psi_window(T))
    throw WindowViolation("asymptotic_check: Hbar exceeds the window");
  detail::KahanSum even, odd;
  std::int64_t n_even = 0;
  std::int64_t n_odd = 0;
  for (const GramPoint& gp : gram_points_in(T, Hbar)) {
    const double psi = psi_at_gram(gp, T);
    if (gp.nu & 1) {
      odd.add(psi);
      ++n_odd;
    } else {
      even.add(psi);
      ++n_even;
    }
  }
  const double lnP0 = 0.5 * std::log(T / kTwoPi);
  const double main = (kA * kAlpha / std::numbers::pi) * Hbar / lnP0;
  return AsymReport{T,    epsilon,      Hbar, n_even, n_odd,
                    even.value(), odd.value(), main, -main};
}

}  // namespace xitail
