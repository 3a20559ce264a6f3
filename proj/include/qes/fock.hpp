#ifndef QES_FOCK_HPP
#define QES_FOCK_HPP

#include "qes/numerics.hpp"
#include "qes/rabi_model.hpp"

#include <string>
#include <vector>

namespace qes {

// original:    a^dag a + beta sigma_z + lambda sigma_x (a + a^dag)
// transformed: a^dag a + beta sigma_x + lambda sigma_z (a + a^dag)
// Basis |n> (x) |s>, index 2n + s, s = 0 is sigma_z = +1.
enum class HamiltonianForm { Original, Transformed };

const char* form_name(HamiltonianForm f);
HamiltonianForm parse_form(const std::string& name);  // "original" | "transformed"

struct TruncationSpec {
  int n_max = 40;
  HamiltonianForm form = HamiltonianForm::Transformed;

  int dim() const { return 2 * (n_max + 1); }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  TruncationSpec spec;
  ModelParams params;
};

SymMatrix build_hamiltonian(const ModelParams& params, const TruncationSpec& spec);
Spectrum oracle_spectrum(const ModelParams& params, const TruncationSpec& spec);

// 40 + 40 L rounded up, unless QES_RABI_NMAX_DEFAULT holds a positive integer.
int default_oracle_nmax(double lambda2);

struct QesCheck {
  bool ok = false;
  double distance = 0.0;  // min |E_oracle - (N - L)|
  double nearest = 0.0;   // that oracle eigenvalue
  double target = 0.0;    // N - L
  bool juddian = false;   // J_N vanishes at (L, B) or changes sign within 1e-9 of L
  std::string warning;
};

QesCheck verify_qes_point(unsigned N, const Rat& lambda2, const Rat& beta2, int n_max, double tol);

}  // namespace qes

#endif
