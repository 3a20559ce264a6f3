#include "qes/peel.hpp"

#include <stdexcept>

namespace qes {

MPoly energy_shift_factor(unsigned k) {
  return MPoly::var(Var::E) + MPoly::var(Var::L) - MPoly(Rat(k));
}

MPoly PeeledForm::expand() const {
  MPoly out = MPoly(content) * MPoly::var(Var::L, l_power);
  for (unsigned k : linear_ks) out *= energy_shift_factor(k);
  return out * residual;
}

std::string PeeledForm::to_string() const {
  std::string out = qes::to_string(content);
  if (l_power == 1) out += "*L";
  else if (l_power > 1) out += "*L^" + std::to_string(l_power);
  for (unsigned k : linear_ks) out += k == 0 ? "*(E+L)" : "*(E+L-" + std::to_string(k) + ")";
  if (residual != MPoly(1)) out += "*[" + residual.to_string() + "]";
  return out;
}

PeeledForm peel_structure(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("peel_structure: zero polynomial");
  PeeledForm out;

  out.l_power = p.min_degree(Var::L);
  std::vector<MPoly::Term> shifted;
  shifted.reserve(p.size());
  for (const auto& [m, c] : p.terms())
    shifted.emplace_back(m.with_exponent(Var::L, m.exponent(Var::L) - out.l_power), c);
  MPoly rest = MPoly::from_terms(std::move(shifted));

  const unsigned max_k = p.degree(Var::E);
  for (unsigned k = 0; k <= max_k; ++k) {
    const MPoly factor = energy_shift_factor(k);
    while (rest.degree(Var::E) > 0) {
      auto q = div_exact(rest, factor);
      if (!q) break;
      rest = std::move(*q);
      out.linear_ks.push_back(k);
    }
  }

  auto [scale, part] = normalize_primitive(rest);
  out.content = scale;
  out.residual = std::move(part);
  return out;
}

}  // namespace qes
