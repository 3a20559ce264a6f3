#include "qes/norms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace qes;
using qes::testing::R;

TEST_CASE("recursion examples") {
  CHECK(gamma_recursion(1, R("1/2")).values[1] == R("1/3"));
  CHECK(gamma_recursion(1, R("5/2")).values[1] == R("-15/7"));
  auto one = gamma_recursion(6, Rat(1));
  CHECK(one.values[0] == 1);
  for (unsigned n = 1; n <= 6; ++n) CHECK(one.values[n] == 0);
  CHECK_THROWS_AS(gamma_recursion(3, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(gamma_recursion(3, R("-1/2")), std::domain_error);
}

TEST_CASE("Pochhammer form examples") {
  CHECK(gamma_pochhammer(0, R("7/3")) == 1);
  CHECK(gamma_pochhammer(2, R("1/2")) == R("1/5"));
  CHECK(gamma_pochhammer(1, R("5/2")) == R("-15/7"));
}

TEST_CASE("recursion and Pochhammer forms agree exactly") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const Rat l = testing::random_positive_rat(rng);
    auto seq = gamma_recursion(20, l);
    for (unsigned n = 0; n <= 20; ++n) REQUIRE(seq.values[n] == gamma_pochhammer(n, l));
  }
}

TEST_CASE("closed form examples") {
  CHECK(gamma_closed_form(2, 0.5) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(gamma_closed_form(1, 2.5) == doctest::Approx(-15.0 / 7.0).epsilon(1e-10));
  CHECK(gamma_closed_form(0, 0.3) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_closed_form(3, 2.0), std::domain_error);
  CHECK_THROWS_AS(gamma_closed_form(3, -0.5), std::domain_error);
}

TEST_CASE("closed form matches the exact forms to 1e-10 relative") {
  for (const char* ls : {"0.3", "0.5", "1.7", "2.5", "3.9"}) {
    const Rat l = R(ls);
    for (unsigned n = 0; n <= 20; ++n) {
      const double exact = gamma_pochhammer(n, l).get_d();
      const double closed = gamma_closed_form(n, l.get_d());
      REQUIRE(std::abs(closed - exact) <= 1e-10 * std::abs(exact));
    }
  }
}

TEST_CASE("log-Gamma against high-precision references") {
  struct Ref {
    double x, value;
  };
  // mpmath.loggamma at 25 digits
  const Ref refs[] = {
      {0.1, 2.252712651734205959869702},  {0.5, 0.5723649429247000870717137},
      {1.5, -0.1207822376352452223455184}, {3.7, 1.428072326665387921872381},
      {10.0, 12.80182748008146961120772},  {25.25, 55.58568604486942970798867},
      {50.0, 144.5657439463448860089184},
  };
  for (const auto& r : refs) {
    auto g = log_gamma(r.x);
    CHECK(g.sign == 1);
    CHECK_MESSAGE(std::abs(g.log_abs - r.value) <= 1e-12 * std::abs(r.value), "x=" << r.x);
  }
  // ln Gamma(1) = ln Gamma(2) = 0: absolute check
  CHECK(std::abs(log_gamma(1.0).log_abs) < 1e-14);
  CHECK(std::abs(log_gamma(2.0).log_abs) < 1e-14);

  // negative arguments: Gamma(-0.5) = -2 sqrt(pi)
  auto neg = log_gamma(-0.5);
  CHECK(neg.sign == -1);
  CHECK(neg.log_abs == doctest::Approx(std::log(2.0 * std::sqrt(M_PI))).epsilon(1e-13));
  CHECK(log_gamma(-1.5).sign == 1);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("sign profile") {
  CHECK(norm_sign_profile(5, R("5/2")) == std::vector<int>{1, -1, 1, 1, 1, 1});
  CHECK(norm_sign_profile(4, R("1/2")) == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(norm_sign_profile(4, Rat(2)) == std::vector<int>{1, -1, 0, 0, 0});
  CHECK_THROWS(norm_sign_profile(3, Rat(0)));
}

TEST_CASE("sign rule and vanishing rule agree with the exact values") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const Rat l = testing::random_positive_rat(rng, 30, 4);
    auto seq = gamma_recursion(15, l);
    CHECK(seq.signs == norm_sign_profile(15, l));
  }
  for (long m = 1; m <= 6; ++m) {
    auto seq = gamma_recursion(12, Rat(m));
    for (unsigned n = 0; n <= 12; ++n) CHECK((seq.values[n] == 0) == (n >= static_cast<unsigned>(m)));
  }
}

TEST_CASE("CSV layout") {
  auto csv = norms_csv(gamma_recursion(2, R("5/2")));
  CHECK(csv ==
        "n,gamma_exact_num,gamma_exact_den,gamma_float,sign\n"
        "0,1,1,1,+\n"
        "1,-15,7,-2.1428571428571428,-\n"
        "2,25,21,1.1904761904761905,+\n");
}
