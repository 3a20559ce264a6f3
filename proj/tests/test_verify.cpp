#include "qes/bender_dunne.hpp"
#include "qes/verify.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qes;
using qes::testing::P;
using qes::testing::R;

TEST_CASE("J_1 solves exactly") {
  auto s = solve_juddian(1, R("1/4"));
  REQUIRE(s.roots.size() == 1);
  CHECK(s.roots[0].lambda2 == R("3/16"));
  CHECK(s.roots[0].exact);
  CHECK(s.boundary_roots.empty());
  CHECK(qes_energy(1, 0, s.roots[0].lambda2) == R("13/16"));
}

TEST_CASE("beta = 1 leaves only the boundary root for N = 1") {
  auto s = solve_juddian(1, Rat(1));
  CHECK(s.roots.empty());
  CHECK(s.boundary_roots == std::vector<Rat>{Rat(0)});
}

TEST_CASE("root enclosures are certified and tight") {
  for (unsigned N = 2; N <= 5; ++N) {
    CAPTURE(N);
    auto s = solve_juddian(N, R("1/4"));
    auto seq = sturm_sequence(squarefree_part(s.poly));
    REQUIRE(!s.roots.empty());
    for (const auto& r : s.roots) {
      CHECK(r.interval.hi - r.interval.lo <= R("1e-24"));
      CHECK(sturm_count(seq, r.interval.lo, r.interval.hi) == 1);
      CHECK(r.lambda2 > 0);
    }
    for (size_t i = 1; i < s.roots.size(); ++i) CHECK(s.roots[i - 1].lambda2 < s.roots[i].lambda2);
  }
  // smallest roots seen by the oracle
  CHECK(std::abs(solve_juddian(2, R("1/4")).roots[0].lambda2.get_d() - 0.11044) < 1e-5);
  CHECK(std::abs(solve_juddian(2, R("1/4")).roots[1].lambda2.get_d() - 0.79581) < 1e-5);
}

TEST_CASE("AIM fixture report") {
  auto chain = termination_polys(5);
  auto rep = check_aim_fixture(chain);
  CHECK(rep.passed);
  CHECK(rep.entries_checked == 25);
  CHECK(rep.mismatches.empty());
  REQUIRE(rep.applied_errata.size() == 1);
  CHECK(rep.applied_errata[0].n == 5);
  CHECK(rep.applied_errata[0].d == 5);
  CHECK(rep.global_signs == std::vector<int>(5, -1));

  // a corrupted coefficient is caught
  chain[1].coeffs[1].peeled.content *= 2;
  auto bad = check_aim_fixture(chain);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].rfind("C[2,1]", 0) == 0);
}

TEST_CASE("cross-engine quotient") {
  auto chain = termination_polys(5);
  for (unsigned N = 1; N <= 5; ++N) {
    auto r = check_cross(N, chain[N - 1]);
    CHECK(r.ok);
    CHECK(r.constant != 0);
    CHECK(r.b_power == 1);
    CHECK(r.constant == (N % 2 ? 1 : -1));
  }
  // one step earlier the chain already carries J_N, without the B factor
  for (unsigned N = 2; N <= 5; ++N) {
    auto r = check_cross(N, chain[N - 2]);
    CHECK(r.ok);
    CHECK(r.b_power == 0);
    CHECK(r.constant == (N % 2 ? -1 : 1));
  }
  CHECK_FALSE(check_cross(3, chain[0]).ok);
  CHECK_FALSE(check_cross(1, chain[2]).ok);
}

TEST_CASE("verify levels") {
  CHECK(parse_verify_level("all") == VerifyLevel::All);
  CHECK_THROWS_AS(parse_verify_level("some"), std::invalid_argument);

  auto fx = run_verify(VerifyLevel::Fixtures);
  CHECK(fx.size() == 8);
  for (const auto& c : fx) {
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(fx[0].detail.find("erratum C[5,5]") != std::string::npos);

  auto cr = run_verify(VerifyLevel::Cross);
  CHECK(cr.size() == 5);
  for (const auto& c : cr) CHECK(c.passed);
  CHECK(cr[0].id == "cross.1");
}
