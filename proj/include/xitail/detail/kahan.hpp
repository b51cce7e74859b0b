#ifndef XITAIL_DETAIL_KAHAN_HPP
#define XITAIL_DETAIL_KAHAN_HPP

#include <cmath>

namespace xitail::detail {

// Neumaier-compensated accumulator. All long sums in the library go
// through this so results are deterministic and carry ~1 ulp error
// regardless of term count.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace xitail::detail

#endif  // XITAIL_DETAIL_KAHAN_HPP
