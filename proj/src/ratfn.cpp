#include "qes/ratfn.hpp"

#include <algorithm>

namespace qes {

MPoly x_denominator(unsigned pow_x, unsigned pow_xm1) {
  MPoly xm1 = MPoly::var(Var::X) - MPoly(1);
  return MPoly::var(Var::X, pow_x) * xm1.pow(pow_xm1);
}

std::optional<MPoly> divide_by_x(const MPoly& p) {
  if (p.is_zero()) return MPoly{};
  if (p.min_degree(Var::X) == 0) return std::nullopt;
  std::vector<MPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(m.with_exponent(Var::X, m.exponent(Var::X) - 1), c);
  return MPoly::from_terms(std::move(out));
}

std::optional<MPoly> divide_by_x_minus_one(const MPoly& p) {
  if (p.is_zero()) return MPoly{};
  // Synthetic division on the X-slices: q_{k-1} = c_k + q_k.
  auto slices = p.coefficients_in(Var::X);
  std::size_t deg = slices.size() - 1;
  if (deg == 0) return std::nullopt;
  std::vector<MPoly> q(deg);
  MPoly carry;
  for (std::size_t k = deg; k >= 1; --k) {
    carry += slices[k];
    q[k - 1] = carry;
  }
  if (!(carry + slices[0]).is_zero()) return std::nullopt;
  MPoly out;
  for (std::size_t k = 0; k < deg; ++k) out += q[k] * MPoly::var(Var::X, static_cast<unsigned>(k));
  return out;
}

RatFn::RatFn(MPoly num, unsigned pow_x, unsigned pow_xm1)
    : num_(std::move(num)), pow_x_(pow_x), pow_xm1_(pow_xm1) {
  if (num_.is_zero()) {
    pow_x_ = pow_xm1_ = 0;
    return;
  }
  while (pow_x_ > 0) {
    auto q = divide_by_x(num_);
    if (!q) break;
    num_ = std::move(*q);
    --pow_x_;
  }
  while (pow_xm1_ > 0) {
    auto q = divide_by_x_minus_one(num_);
    if (!q) break;
    num_ = std::move(*q);
    --pow_xm1_;
  }
}

namespace {

MPoly lift(const RatFn& f, unsigned px, unsigned pm) {
  return f.num() * x_denominator(px - f.pow_x(), pm - f.pow_xm1());
}

}  // namespace

RatFn operator+(const RatFn& a, const RatFn& b) {
  unsigned px = std::max(a.pow_x(), b.pow_x()), pm = std::max(a.pow_xm1(), b.pow_xm1());
  return RatFn(lift(a, px, pm) + lift(b, px, pm), px, pm);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  unsigned px = std::max(a.pow_x(), b.pow_x()), pm = std::max(a.pow_xm1(), b.pow_xm1());
  return RatFn(lift(a, px, pm) - lift(b, px, pm), px, pm);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num() * b.num(), a.pow_x() + b.pow_x(), a.pow_xm1() + b.pow_xm1());
}

RatFn operator-(const RatFn& a) { return RatFn(-a.num(), a.pow_x(), a.pow_xm1()); }

RatFn derivative(const RatFn& f) {
  // (N/D)' = [N' X(X-1) - N (a (X-1) + b X)] / (D X (X-1)),  D = X^a (X-1)^b.
  const MPoly x = MPoly::var(Var::X);
  const MPoly xm1 = x - MPoly(1);
  MPoly num = derivative(f.num(), Var::X) * (x * xm1) -
              f.num() * (Rat(f.pow_x()) * xm1 + Rat(f.pow_xm1()) * x);
  return RatFn(std::move(num), f.pow_x() + 1, f.pow_xm1() + 1);
}

std::string RatFn::to_string() const {
  if (pow_x_ == 0 && pow_xm1_ == 0) return num_.to_string();
  std::string den;
  if (pow_x_) den += pow_x_ == 1 ? "X" : "X^" + std::to_string(pow_x_);
  if (pow_xm1_) {
    if (!den.empty()) den += '*';
    den += pow_xm1_ == 1 ? "(X-1)" : "(X-1)^" + std::to_string(pow_xm1_);
  }
  return "(" + num_.to_string() + ")/(" + den + ")";
}

UnreducedFraction unreduced_product_difference(const RatFn& a, const RatFn& b, const RatFn& c,
                                               const RatFn& d) {
  unsigned ax = a.pow_x() + b.pow_x(), am = a.pow_xm1() + b.pow_xm1();
  unsigned cx = c.pow_x() + d.pow_x(), cm = c.pow_xm1() + d.pow_xm1();
  unsigned px = std::max(ax, cx), pm = std::max(am, cm);
  MPoly left = a.num() * b.num() * x_denominator(px - ax, pm - am);
  MPoly right = c.num() * d.num() * x_denominator(px - cx, pm - cm);
  return {left - right, px, pm};
}

}  // namespace qes
