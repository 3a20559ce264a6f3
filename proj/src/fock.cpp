#include "qes/fock.hpp"

#include "qes/bender_dunne.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qes {

const char* form_name(HamiltonianForm f) { return f == HamiltonianForm::Original ? "original" : "transformed"; }

HamiltonianForm parse_form(const std::string& name) {
  if (name == "original") return HamiltonianForm::Original;
  if (name == "transformed") return HamiltonianForm::Transformed;
  throw std::invalid_argument("unknown Hamiltonian form '" + name + "' (original|transformed)");
}

SymMatrix build_hamiltonian(const ModelParams& params, const TruncationSpec& spec) {
  if (spec.n_max < 0) throw std::invalid_argument("Fock cutoff must be >= 0");
  const double lam = params.lambda(), beta = params.beta();
  SymMatrix h(spec.dim());
  auto idx = [](int n, int s) { return 2 * n + s; };
  for (int n = 0; n <= spec.n_max; ++n) {
    const double up = std::sqrt(static_cast<double>(n + 1));
    if (spec.form == HamiltonianForm::Transformed) {
      h.set(idx(n, 0), idx(n, 0), n);
      h.set(idx(n, 1), idx(n, 1), n);
      h.set(idx(n, 0), idx(n, 1), beta);
      if (n < spec.n_max) {
        h.set(idx(n, 0), idx(n + 1, 0), lam * up);
        h.set(idx(n, 1), idx(n + 1, 1), -lam * up);
      }
    } else {
      h.set(idx(n, 0), idx(n, 0), n + beta);
      h.set(idx(n, 1), idx(n, 1), n - beta);
      if (n < spec.n_max) {
        h.set(idx(n, 0), idx(n + 1, 1), lam * up);
        h.set(idx(n, 1), idx(n + 1, 0), lam * up);
      }
    }
  }
  return h;
}

Spectrum oracle_spectrum(const ModelParams& params, const TruncationSpec& spec) {
  return {symmetric_eigenvalues(build_hamiltonian(params, spec)), spec, params};
}

int default_oracle_nmax(double lambda2) {
  if (const char* env = std::getenv("QES_RABI_NMAX_DEFAULT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 40 + static_cast<int>(std::ceil(40.0 * std::max(lambda2, 0.0)));
}

QesCheck verify_qes_point(unsigned N, const Rat& lambda2, const Rat& beta2, int n_max, double tol) {
  QesCheck out;
  const MPoly j = juddian_polynomial(N, std::max(N, kDefaultJuddianNMax));
  auto j_at = [&](const Rat& l) { return j.evaluate(Assignment{}.set(Var::L, l).set(Var::B, beta2)); };
  const Rat delta("1/1000000000");
  out.juddian = j_at(lambda2) == 0 || sign(j_at(lambda2 - delta)) * sign(j_at(lambda2 + delta)) < 0;
  if (!out.juddian)
    out.warning = "J_" + std::to_string(N) + " does not vanish near L = " + to_string(lambda2) +
                  "; not a Juddian point";

  const auto spectrum = oracle_spectrum(ModelParams::exact(lambda2, beta2), {n_max, HamiltonianForm::Transformed});
  out.target = qes_energy(N, 0, lambda2).get_d();
  out.distance = std::numeric_limits<double>::infinity();
  for (double e : spectrum.eigenvalues) {
    const double d = std::abs(e - out.target);
    if (d < out.distance) {
      out.distance = d;
      out.nearest = e;
    }
  }
  out.ok = out.distance <= tol;
  return out;
}

}  // namespace qes
