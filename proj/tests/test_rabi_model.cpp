#include "qes/rabi_model.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace qes;
using qes::testing::P;
using qes::testing::R;

namespace {

MPoly at_x0(const MPoly& p) { return p.substitute(Var::X, MPoly(0)); }

// N=1 Juddian point: beta = 1/2, L = 3/16, E = 13/16, chi = 1 + 3 xi.
ModelParams n1_params() { return ModelParams::exact(R("3/16"), R("1/4")); }

}  // namespace

TEST_CASE("ode_coefficients transcription") {
  auto ode = ode_coefficients();
  CHECK(ode.p2 == P("X-X^2"));
  CHECK(at_x0(ode.p1) == P("1-L-E"));
  CHECK(at_x0(ode.p0) == P("3*L^2+2*E*L+B-E^2"));
  CHECK(ode.p1.degree(Var::X) == 2);
  CHECK(ode.p0.degree(Var::X) == 1);
}

TEST_CASE("AIM seed reproduces r0, s0 over X(X-1)") {
  auto seed = initial_aim_pair();
  CHECK(seed.r0.pow_x() == 1);
  CHECK(seed.r0.pow_xm1() == 1);
  CHECK(seed.r0.num() == P("L*(4*X^2-2*X-1)+E*(2*X-1)-X+1"));
  CHECK(seed.s0.num() == P("L^2*(3-4*X)+2*E*L*(1-2*X)+B-E^2"));

  // chi'' = r0 chi' + s0 chi against p2 chi'' + p1 chi' + p0 chi = 0.
  auto ode = ode_coefficients();
  CHECK((RatFn(ode.p2) * seed.r0 + RatFn(ode.p1)).is_zero());
  CHECK((RatFn(ode.p2) * seed.s0 + RatFn(ode.p0)).is_zero());
}

TEST_CASE("gauge variable maps") {
  const double lam = 0.7;
  CHECK(xi_of_x(-lam, lam) == doctest::Approx(0.0));
  CHECK(xi_of_x(lam, lam) == doctest::Approx(1.0));
  CHECK(xi_of_x(0.0, lam) == doctest::Approx(0.5));
  CHECK_THROWS(xi_of_x(1.0, 0.0));

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-50.0, 50.0), ul(0.05, 5.0);
  for (int i = 0; i < 10000; ++i) {
    double x = ux(rng), l = ul(rng);
    double back = x_of_xi(xi_of_x(x, l), l);
    REQUIRE(std::abs(back - x) <= 8 * std::numeric_limits<double>::epsilon() * (std::abs(x) + l));
  }
}

TEST_CASE("model parameters keep exact squares") {
  auto p = ModelParams::exact(R("3/16"), R("1/4"));
  CHECK(*p.lambda2_exact() == R("3/16"));
  CHECK(p.beta() == doctest::Approx(0.5));
  CHECK(p.lambda2() == doctest::Approx(0.1875).epsilon(1e-15));
  CHECK_THROWS(ModelParams::exact(R("-1"), R("0")));
  CHECK_THROWS(ModelParams::approximate(0.5, -1.0));
  CHECK_FALSE(ModelParams::approximate(0.5, 0.5).lambda2_exact());
}

TEST_CASE("psi pair from trivial chi") {
  auto params = ModelParams::approximate(0.6, 0.4);
  auto zero = psi_pair_from_chi(MPoly{}, 1.3, params);
  CHECK(zero.psi1(0.2).value == 0.0);
  CHECK(zero.psi2(-0.9).value == 0.0);

  const double e = 0.75, lam = 0.6, b = 0.4, x = 0.31;
  auto one = psi_pair_from_chi(MPoly(1), e, params);
  const double xi = xi_of_x(x, lam);
  const double p1 = std::exp(-2 * lam * lam * xi);
  const double dp1 = -lam * p1;  // d/dx exp(-2 L xi) = -(2L)(1/(2 lam)) exp(...)
  CHECK(one.psi1(x).value == doctest::Approx(p1));
  CHECK(one.psi1(x).d1 == doctest::Approx(dp1));
  CHECK(one.psi2(x).value == doctest::Approx(((e - lam * x) * p1 - (x + lam) * dp1) / b));

  CHECK_THROWS(psi_pair_from_chi(MPoly(1), e, ModelParams::approximate(0.6, 0.0)));
  CHECK_THROWS(psi_pair_from_chi(P("E*X"), e, params));
}

TEST_CASE("N=1 Juddian eigenfunction solves the first-order system") {
  auto params = n1_params();
  const MPoly chi = P("1+3*X");
  const Rat e = R("13/16");
  CHECK(ode_residual(chi).substitute(Assignment{}.set(Var::E, e).set(Var::L, R("3/16")).set(Var::B, R("1/4"))).is_zero());

  const double lam = params.lambda();
  auto grid = residual_grid(-2 * lam + 1e-3, 2 * lam, 101, lam);
  auto psi = psi_pair_from_chi(chi, e.get_d(), params);
  CHECK(system_residual(psi, e.get_d(), params, grid) < 1e-10);

  auto wrong = psi_pair_from_chi(chi, e.get_d() + 0.1, params);
  CHECK(system_residual(wrong, e.get_d() + 0.1, params, grid) > 1e-3);
  CHECK(system_residual(psi, e.get_d() + 0.1, params, grid) > 1e-3);
}

TEST_CASE("residual grid and singular points") {
  auto params = ModelParams::approximate(0.5, 0.5);
  auto psi = psi_pair_from_chi(MPoly(0), 1.0, params);
  std::vector<double> bad{0.1, 0.5};
  CHECK_THROWS_AS(system_residual(psi, 1.0, params, bad), std::domain_error);
  std::vector<double> ok{0.1, 0.2};
  CHECK(system_residual(psi, 1.0, params, ok) == 0.0);

  auto g = residual_grid(-1.0, 1.0, 5, 0.5);  // -1, -0.5, 0, 0.5, 1
  CHECK(g == std::vector<double>{-1.0, 0.0, 1.0});
}

TEST_CASE("eliminating psi2 gives the closed psi1 equation") {
  auto elim = eliminate_psi2();
  auto op = psi1_operator();
  CHECK(elim.a == -op.a);
  CHECK(elim.b == -op.b);
  CHECK(elim.c == -op.c);
}

TEST_CASE("psi1 equation equals minus the gauged chi equation") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.2, 1.6), ue(-1.0, 3.0), uxi(0.02, 0.98);
  for (int trial = 0; trial < 50; ++trial) {
    const double lam = u(rng), beta = u(rng), e = ue(rng);
    auto params = ModelParams::approximate(lam, beta);
    MPoly chi = testing::random_mpoly(rng, 5, 0);
    for (int k = 1; k <= 4; ++k) chi += MPoly(testing::random_rat(rng)) * MPoly::var(Var::X, k);
    auto psi = psi_pair_from_chi(chi, e, params);
    for (int j = 0; j < 10; ++j) {
      const double xi = uxi(rng), x = x_of_xi(xi, lam);
      const double lhs = psi1_second_order_residual(psi.psi1(x), x, e, params);
      const double rhs = -std::exp(-2 * lam * lam * xi) * chi_equation_residual(chi, xi, e, params);
      REQUIRE(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}
