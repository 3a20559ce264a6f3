#ifndef QES_RABI_MODEL_HPP
#define QES_RABI_MODEL_HPP

#include "qes/mpoly.hpp"
#include "qes/ratfn.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qes {

// Physical parameters with hbar = omega = 1 and Omega = 2 beta. Symbolic
// code works with L = lambda^2 and B = beta^2, which are kept exact when the
// parameters were built from rationals.
class ModelParams {
 public:
  // lambda2 >= 0, beta2 >= 0.
  static ModelParams exact(const Rat& lambda2, const Rat& beta2);
  static ModelParams approximate(double lambda, double beta);

  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  double lambda2() const { return lambda_ * lambda_; }
  double beta2() const { return beta_ * beta_; }
  const std::optional<Rat>& lambda2_exact() const { return lambda2_exact_; }
  const std::optional<Rat>& beta2_exact() const { return beta2_exact_; }

 private:
  ModelParams() = default;
  double lambda_ = 0.0;
  double beta_ = 0.0;
  std::optional<Rat> lambda2_exact_;
  std::optional<Rat> beta2_exact_;
};

// p2 chi'' + p1 chi' + p0 chi = 0 in the variable X = xi.
struct OdeCoefficients {
  MPoly p2;
  MPoly p1;
  MPoly p0;
};

OdeCoefficients ode_coefficients();

// The AIM form chi'' = r0 chi' + s0 chi. With p2 = X(1 - X) we have
// r0 = -p1/p2 = p1 / (X(X-1)) and s0 = -p0/p2 = p0 / (X(X-1)), so the
// numerators are exactly p1 and p0 over the denominator X(X-1).
struct AimSeed {
  RatFn r0;
  RatFn s0;
};

AimSeed initial_aim_pair();

// Applies the ODE operator to a polynomial chi(X) (coefficients may involve
// E, L, B).
MPoly ode_residual(const MPoly& chi);

// x = lambda (2 xi - 1). Precondition: lambda > 0.
double xi_of_x(double x, double lambda);
double x_of_xi(double xi, double lambda);

// Value and first two derivatives at a point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

using Evaluator = std::function<Jet(double)>;

struct PsiPair {
  Evaluator psi1;
  Evaluator psi2;
};

// psi1(x) = exp(-2 L xi) chi(xi) and psi2 recovered from the first
// first-order equation:
//   psi2 = [(E - lambda x) psi1 - (x + lambda) psi1'] / beta.
// chi must be a polynomial in X alone. Throws when beta == 0.
PsiPair psi_pair_from_chi(const MPoly& chi, double energy, const ModelParams& params);

// Max over the grid of |residual| of both first-order equations
//   psi1' = [(E - lambda x) psi1 - beta psi2] / (x + lambda)
//   psi2' = [-beta psi1 + (E + lambda x) psi2] / (x - lambda).
// Throws if a grid point lies within `margin` of x = +-lambda.
double system_residual(const PsiPair& psi, double energy, const ModelParams& params,
                       std::span<const double> grid, double margin = 1e-3);

// `count` evenly spaced points on [lo, hi], dropping any closer than
// `margin` to the singular points x = +-lambda.
std::vector<double> residual_grid(double lo, double hi, int count, double lambda, double margin = 1e-3);

// Second-order equation for psi1 alone, evaluated at x:
//   (x^2 - l^2) psi1'' - [(E - l x - 1)(x - l) + (x + l)(E + l x)] psi1'
//     - [b^2 - E^2 + l^2 x^2 - l (x - l)] psi1
double psi1_second_order_residual(const Jet& psi1, double x, double energy, const ModelParams& params);

// The chi-equation evaluated numerically at xi for a polynomial chi(X).
double chi_equation_residual(const MPoly& chi, double xi, double energy, const ModelParams& params);

// a psi1'' + b psi1' + c psi1 with polynomial coefficients in X = x, where
// the symbol L stands for lambda itself (not lambda^2) and B for beta^2.
struct SecondOrderOperator {
  MPoly a;
  MPoly b;
  MPoly c;
};

// Result of eliminating psi2 between the two first-order equations
// (multiplied through by beta).
SecondOrderOperator eliminate_psi2();
// The psi1 equation in its published closed form, same symbol conventions.
SecondOrderOperator psi1_operator();

}  // namespace qes

#endif
