#include "qes/aim.hpp"

#include <stdexcept>
#include <string>

namespace qes {

namespace {

void check_range(unsigned n, unsigned lo, unsigned n_max) {
  if (n < lo || n > n_max)
    throw std::out_of_range("AIM iteration " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(n_max) + "]");
}

}  // namespace

AimState aim_step(const AimState& prev, const AimSeed& seed) {
  AimState next;
  next.n = prev.n + 1;
  next.r = derivative(prev.r) + prev.s + seed.r0 * prev.r;
  next.s = derivative(prev.s) + seed.s0 * prev.r;
  return next;
}

std::vector<AimState> aim_chain(unsigned n, unsigned n_max) {
  check_range(n, 0, n_max);
  const AimSeed seed = initial_aim_pair();
  std::vector<AimState> out;
  out.reserve(n + 1);
  out.push_back({0, seed.r0, seed.s0});
  while (out.size() <= n) out.push_back(aim_step(out.back(), seed));
  return out;
}

TerminationData termination_from_states(const AimState& prev, const AimState& cur) {
  TerminationData t;
  t.n = cur.n;
  t.raw = unreduced_product_difference(cur.s, prev.r, prev.s, cur.r);

  MPoly num = t.raw.num;
  if (num.is_zero()) throw std::logic_error("AIM cross-difference vanished identically");
  while (auto q = divide_by_x(num)) {
    num = std::move(*q);
    ++t.removed_x;
  }
  while (auto q = divide_by_x_minus_one(num)) {
    num = std::move(*q);
    ++t.removed_xm1;
  }

  // Leading term in the X-major order has the top power of X.
  if (num.leading_term().second < 0) {
    t.sign = -1;
    num = -num;
  }
  t.delta = std::move(num);

  auto slices = t.delta.coefficients_in(Var::X);
  for (unsigned d = 0; d < slices.size(); ++d) {
    if (slices[d].is_zero()) continue;
    AimCoefficient c{d, slices[d], peel_structure(slices[d])};
    t.coeffs.push_back(std::move(c));
  }
  if (!t.coeffs.empty() && t.coeffs.front().d == 0) t.y_poly = t.coeffs.front().peeled.residual;
  return t;
}

TerminationData termination_poly(unsigned n, unsigned n_max) {
  check_range(n, 1, n_max);
  auto chain = aim_chain(n, n_max);
  return termination_from_states(chain[n - 1], chain[n]);
}

std::vector<TerminationData> termination_polys(unsigned n_last, unsigned n_max) {
  check_range(n_last, 1, n_max);
  auto chain = aim_chain(n_last, n_max);
  std::vector<TerminationData> out;
  for (unsigned n = 1; n <= n_last; ++n) out.push_back(termination_from_states(chain[n - 1], chain[n]));
  return out;
}

MPoly y_polynomial(unsigned n, unsigned n_max) {
  if (n == 0) return -ode_coefficients().p0.substitute(Var::X, MPoly(0));
  return termination_poly(n, n_max).y_poly;
}

std::vector<AimEnergy> qes_energies_from_aim(const TerminationData& t) {
  std::vector<AimEnergy> out;
  if (t.coeffs.empty()) return out;
  for (unsigned k : t.coeffs.back().peeled.linear_ks) {
    if (!out.empty() && out.back().k == k) continue;
    out.push_back({k, MPoly(Rat(k)) - MPoly::var(Var::L)});
  }
  return out;
}

std::vector<AimEnergy> qes_energies_from_aim(unsigned n, unsigned n_max) {
  return qes_energies_from_aim(termination_poly(n, n_max));
}

}  // namespace qes
