#ifndef QES_VERIFY_HPP
#define QES_VERIFY_HPP

#include "qes/aim.hpp"
#include "qes/fixtures.hpp"
#include "qes/fock.hpp"
#include "qes/numerics.hpp"

#include <string>
#include <vector>

namespace qes {

struct JuddianRoot {
  IsolatingInterval interval;  // certified, width <= the requested tolerance
  Rat lambda2;                 // midpoint, or the exact root
  bool exact = false;          // J_N vanishes at lambda2 exactly
};

struct JuddianSolve {
  unsigned N = 0;
  Rat beta2;
  UPoly poly;                       // J_N(L; B)
  std::vector<JuddianRoot> roots;   // L > 0, ascending
  std::vector<Rat> boundary_roots;  // L = 0 (non-physical)
};

// Positive roots in L of J_N(L; B) for fixed B.
JuddianSolve solve_juddian(unsigned N, const Rat& beta2, const Rat& tol = parse_rat("1e-24"));

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct AimFixtureReport {
  bool passed = true;
  int entries_checked = 0;
  std::vector<std::string> mismatches;
  std::vector<Erratum> applied_errata;
  std::vector<int> global_signs;  // per n, sign that multiplied the raw cross-difference
};

// Compares computed data for n = 1..data.size() (at most 5) with the printed
// table. Errata are applied and reported, never silently.
AimFixtureReport check_aim_fixture(const std::vector<TerminationData>& data);

struct CrossResult {
  unsigned N = 0;
  bool ok = false;
  Rat constant;           // Y_N(E = N - L) = constant * B^b_power * J_N
  unsigned b_power = 0;
};

CrossResult check_cross(unsigned N, const TerminationData& t);

struct OracleResult {
  unsigned N = 0;
  Rat beta2;
  Rat lambda2;
  QesCheck check;
};

// Confirms the smallest positive root of J_N(.; B) with the Fock oracle.
OracleResult check_oracle(unsigned N, const Rat& beta2, int n_max, double tol);

enum class VerifyLevel { Fixtures, Cross, Oracle, All };
VerifyLevel parse_verify_level(const std::string& s);

// The individual checks behind `verify`, in a stable order.
std::vector<CheckResult> run_verify(VerifyLevel level);

}  // namespace qes

#endif
