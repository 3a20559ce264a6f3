#include "qes/rabi_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qes {

ModelParams ModelParams::exact(const Rat& lambda2, const Rat& beta2) {
  if (lambda2 < 0 || beta2 < 0) throw std::domain_error("lambda^2 and beta^2 must be non-negative");
  ModelParams p;
  p.lambda2_exact_ = lambda2;
  p.beta2_exact_ = beta2;
  p.lambda_ = std::sqrt(lambda2.get_d());
  p.beta_ = std::sqrt(beta2.get_d());
  return p;
}

ModelParams ModelParams::approximate(double lambda, double beta) {
  if (!(lambda >= 0.0) || !(beta >= 0.0) || !std::isfinite(lambda) || !std::isfinite(beta))
    throw std::domain_error("lambda and beta must be finite and non-negative");
  ModelParams p;
  p.lambda_ = lambda;
  p.beta_ = beta;
  return p;
}

OdeCoefficients ode_coefficients() {
  return {
      MPoly::parse("X-X^2"),
      MPoly::parse("L*(4*X^2-2*X-1)+E*(2*X-1)-X+1"),
      MPoly::parse("L^2*(3-4*X)+2*E*L*(1-2*X)+B-E^2"),
  };
}

AimSeed initial_aim_pair() {
  auto ode = ode_coefficients();
  return {RatFn(ode.p1, 1, 1), RatFn(ode.p0, 1, 1)};
}

MPoly ode_residual(const MPoly& chi) {
  auto ode = ode_coefficients();
  MPoly d1 = derivative(chi, Var::X);
  MPoly d2 = derivative(d1, Var::X);
  return ode.p2 * d2 + ode.p1 * d1 + ode.p0 * chi;
}

double xi_of_x(double x, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("xi_of_x: lambda must be positive");
  return 0.5 * (x / lambda + 1.0);
}

double x_of_xi(double xi, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("x_of_xi: lambda must be positive");
  return lambda * (2.0 * xi - 1.0);
}

namespace {

std::vector<double> x_only_coefficients(const MPoly& chi) {
  for (Var v : {Var::E, Var::L, Var::B})
    if (chi.depends_on(v)) throw std::invalid_argument("chi must be a polynomial in X only");
  std::vector<double> c(chi.degree(Var::X) + 1, 0.0);
  for (const auto& [m, coef] : chi.terms()) c[m.exponent(Var::X)] = coef.get_d();
  return c;
}

Jet horner(const std::vector<double>& c, double t) {
  Jet j;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    j.d2 = j.d2 * t + 2.0 * j.d1;
    j.d1 = j.d1 * t + j.value;
    j.value = j.value * t + *it;
  }
  return j;
}

}  // namespace

PsiPair psi_pair_from_chi(const MPoly& chi, double energy, const ModelParams& params) {
  const double lam = params.lambda(), beta = params.beta(), l2 = params.lambda2();
  if (!(beta > 0.0)) throw std::domain_error("psi2 reconstruction needs beta > 0");
  if (!(lam > 0.0)) throw std::domain_error("psi reconstruction needs lambda > 0");
  auto coeffs = x_only_coefficients(chi);

  auto psi1 = [coeffs, lam, l2](double x) {
    const double xi = xi_of_x(x, lam);
    const double g = std::exp(-2.0 * l2 * xi);
    const Jet c = horner(coeffs, xi);
    const double s = 1.0 / (2.0 * lam);  // d xi / dx
    return Jet{g * c.value, g * (c.d1 - 2.0 * l2 * c.value) * s,
               g * (c.d2 - 4.0 * l2 * c.d1 + 4.0 * l2 * l2 * c.value) * s * s};
  };
  auto psi2 = [psi1, energy, lam, beta](double x) {
    const Jet p = psi1(x);
    const double value = ((energy - lam * x) * p.value - (x + lam) * p.d1) / beta;
    const double d1 = (-lam * p.value + (energy - lam * x) * p.d1 - p.d1 - (x + lam) * p.d2) / beta;
    return Jet{value, d1, 0.0};
  };
  return {psi1, psi2};
}

double system_residual(const PsiPair& psi, double energy, const ModelParams& params,
                       std::span<const double> grid, double margin) {
  const double lam = params.lambda(), beta = params.beta();
  double worst = 0.0;
  for (double x : grid) {
    if (std::abs(x - lam) < margin || std::abs(x + lam) < margin)
      throw std::domain_error("residual grid point " + std::to_string(x) + " too close to x = +-lambda");
    const Jet a = psi.psi1(x), b = psi.psi2(x);
    const double r1 = a.d1 - ((energy - lam * x) * a.value - beta * b.value) / (x + lam);
    const double r2 = b.d1 - (-beta * a.value + (energy + lam * x) * b.value) / (x - lam);
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
  }
  return worst;
}

std::vector<double> residual_grid(double lo, double hi, int count, double lambda, double margin) {
  std::vector<double> out;
  if (count <= 0) return out;
  for (int i = 0; i < count; ++i) {
    double x = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    if (std::abs(x - lambda) < margin || std::abs(x + lambda) < margin) continue;
    out.push_back(x);
  }
  return out;
}

double psi1_second_order_residual(const Jet& p, double x, double energy, const ModelParams& params) {
  const double l = params.lambda(), b2 = params.beta2(), e = energy;
  return (x * x - l * l) * p.d2 - ((e - l * x - 1.0) * (x - l) + (x + l) * (e + l * x)) * p.d1 -
         (b2 - e * e + l * l * x * x - l * (x - l)) * p.value;
}

double chi_equation_residual(const MPoly& chi, double xi, double energy, const ModelParams& params) {
  auto coeffs = x_only_coefficients(chi);
  const Jet c = horner(coeffs, xi);
  auto ode = ode_coefficients();
  const std::array<double, 4> at{energy, params.lambda2(), params.beta2(), xi};
  return ode.p2.evaluate(at) * c.d2 + ode.p1.evaluate(at) * c.d1 + ode.p0.evaluate(at) * c.value;
}

SecondOrderOperator eliminate_psi2() {
  // Here L plays lambda and X plays x. First-order forms:
  //   beta psi2 = (E - L X) psi1 - (X + L) psi1'            (from eq. 1)
  //   (X - L) psi2' - (E + L X) psi2 + beta psi1 = 0        (eq. 2)
  // Multiply eq. 2 by beta and substitute.
  const MPoly x = MPoly::var(Var::X), l = MPoly::var(Var::L), e = MPoly::var(Var::E);
  // beta psi2 = u1 psi1' + u0 psi1
  const MPoly u1 = -(x + l), u0 = e - l * x;
  // (beta psi2)' = u1 psi1'' + (u1' + u0) psi1' + u0' psi1
  SecondOrderOperator op;
  op.a = (x - l) * u1;
  op.b = (x - l) * (derivative(u1, Var::X) + u0) - (e + l * x) * u1;
  op.c = (x - l) * derivative(u0, Var::X) - (e + l * x) * u0 + MPoly::var(Var::B);
  return op;
}

SecondOrderOperator psi1_operator() {
  return {
      MPoly::parse("X^2-L^2"),
      MPoly::parse("-((E-L*X-1)*(X-L)+(X+L)*(E+L*X))"),
      MPoly::parse("-(B-E^2+L^2*X^2-L*(X-L))"),
  };
}

}  // namespace qes
