#ifndef XITAIL_GRAM_HPP
#define XITAIL_GRAM_HPP

#include <cstdint>
#include <vector>

namespace xitail {

/// Solution of theta(t_nu) = pi nu.  t is strictly increasing in nu and
/// residual = |theta(t) - pi nu| < 1e-9.
struct GramPoint {
  std::int64_t nu;
  double t;
  double residual;
};

/// Newton solve for the Gram point of index nu >= 0; the initial guess
/// inverts t ln(t/2pi e) ~ 2pi nu, which lands in the Newton basin for
/// every nu.  Throws NonConvergence past 12 iterations (must not happen).
GramPoint gram_point(std::int64_t nu);

/// All Gram points with t_nu in [T, T+H], T >= 50, 0 < H <= T.
/// May be empty for narrow windows.
std::vector<GramPoint> gram_points_in(double T, double H);

}  // namespace xitail

#endif  // XITAIL_GRAM_HPP
