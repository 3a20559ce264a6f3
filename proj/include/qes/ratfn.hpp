#ifndef QES_RATFN_HPP
#define QES_RATFN_HPP

#include "qes/mpoly.hpp"

#include <optional>

namespace qes {

// X^a * (X-1)^b as a polynomial.
MPoly x_denominator(unsigned pow_x, unsigned pow_xm1);

// Exact division by X or by (X-1); nullopt when the factor is absent.
std::optional<MPoly> divide_by_x(const MPoly& p);
std::optional<MPoly> divide_by_x_minus_one(const MPoly& p);

// num / (X^pow_x * (X-1)^pow_xm1), always stored fully reduced: num carries
// no factor X while pow_x > 0 and no factor (X-1) while pow_xm1 > 0.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(MPoly num, unsigned pow_x = 0, unsigned pow_xm1 = 0);

  const MPoly& num() const { return num_; }
  unsigned pow_x() const { return pow_x_; }
  unsigned pow_xm1() const { return pow_xm1_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a);
  friend bool operator==(const RatFn& a, const RatFn& b) = default;

  std::string to_string() const;

 private:
  MPoly num_;
  unsigned pow_x_ = 0;
  unsigned pow_xm1_ = 0;
};

// d/dX.
RatFn derivative(const RatFn& f);

// Both fractions lifted to the denominator X^max(a) (X-1)^max(b) before
// subtraction; the numerator is returned without any cancellation. This is
// the "cleared" form that the reduced difference is checked against.
struct UnreducedFraction {
  MPoly num;
  unsigned pow_x = 0;
  unsigned pow_xm1 = 0;
};
UnreducedFraction unreduced_product_difference(const RatFn& a, const RatFn& b, const RatFn& c,
                                               const RatFn& d);  // a*b - c*d

}  // namespace qes

#endif
