#ifndef QES_AIM_HPP
#define QES_AIM_HPP

#include "qes/peel.hpp"
#include "qes/rabi_model.hpp"
#include "qes/ratfn.hpp"

#include <vector>

namespace qes {

inline constexpr unsigned kDefaultAimNMax = 8;

struct AimState {
  unsigned n = 0;
  RatFn r;
  RatFn s;
};

// r_n = r'_{n-1} + s_{n-1} + r0 r_{n-1},  s_n = s'_{n-1} + s0 r_{n-1}.
AimState aim_step(const AimState& prev, const AimSeed& seed);

// States 0..n for the Rabi seed.
std::vector<AimState> aim_chain(unsigned n, unsigned n_max = kDefaultAimNMax);

struct AimCoefficient {
  unsigned d = 0;  // power of X
  MPoly poly;      // C_nd after sign normalization
  PeeledForm peeled;
};

struct TerminationData {
  unsigned n = 0;
  // s_n r_{n-1} - s_{n-1} r_n over the common denominator, no cancellation.
  UnreducedFraction raw;
  unsigned removed_x = 0;    // X factors divided out of raw.num
  unsigned removed_xm1 = 0;  // (X-1) factors divided out of raw.num
  int sign = 1;              // delta = sign * raw.num / (X^removed_x (X-1)^removed_xm1)
  MPoly delta;
  std::vector<AimCoefficient> coeffs;  // d = 0..deg_X(delta)
  MPoly y_poly;                        // peeled residual of C_n0
};

// Termination data from an existing chain (needs states n-1 and n).
TerminationData termination_from_states(const AimState& prev, const AimState& cur);

// 1 <= n <= n_max, otherwise std::out_of_range.
TerminationData termination_poly(unsigned n, unsigned n_max = kDefaultAimNMax);

// All of n = 1..n_last from one shared chain.
std::vector<TerminationData> termination_polys(unsigned n_last, unsigned n_max = kDefaultAimNMax);

// Y_0 = -p0(X=0); Y_n for n >= 1 from the termination polynomial.
MPoly y_polynomial(unsigned n, unsigned n_max = kDefaultAimNMax);

struct AimEnergy {
  unsigned k = 0;
  MPoly energy;  // k - L
};

// Distinct roots E = k - L of the linear factors in the top coefficient.
std::vector<AimEnergy> qes_energies_from_aim(const TerminationData& t);
std::vector<AimEnergy> qes_energies_from_aim(unsigned n, unsigned n_max = kDefaultAimNMax);

}  // namespace qes

#endif
