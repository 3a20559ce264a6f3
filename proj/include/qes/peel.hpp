#ifndef QES_PEEL_HPP
#define QES_PEEL_HPP

#include "qes/mpoly.hpp"

#include <string>
#include <vector>

namespace qes {

// p == content * L^l_power * prod_k (E + L - k) * residual, where residual
// is primitive with a positive leading coefficient.
struct PeeledForm {
  Rat content;
  unsigned l_power = 0;
  std::vector<unsigned> linear_ks;  // ascending, with multiplicity
  MPoly residual;

  MPoly expand() const;
  // "content*L^a*(E+L-k1)*(E+L-k2)*[residual]"; the bracket is omitted when
  // the residual is 1.
  std::string to_string() const;
};

// (E + L - k)
MPoly energy_shift_factor(unsigned k);

// Strips the integer content, the largest power of L, and every monic
// factor (E + L - k) for 0 <= k <= deg_E(p). Precondition: p != 0.
PeeledForm peel_structure(const MPoly& p);

}  // namespace qes

#endif
