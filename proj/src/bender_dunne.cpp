#include "qes/bender_dunne.hpp"

#include "qes/rabi_model.hpp"

#include <stdexcept>
#include <string>

namespace qes {

namespace {

// x (x-1) ... (x-k+1)
MPoly falling(const MPoly& x, unsigned k) {
  MPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= x - MPoly(Rat(i));
  return out;
}

Rat as_constant(const MPoly& p, const char* what) {
  if (!p.is_constant()) throw std::logic_error(std::string(what) + " is not numeric");
  return p.constant_term();
}

Assignment point(const Rat& e, const Rat& l, const Rat& b) {
  return Assignment{}.set(Var::E, e).set(Var::L, l).set(Var::B, b);
}

}  // namespace

SeriesRelation::SeriesRelation(MPoly q) : q_(std::move(q)) {
  if (q_.depends_on(Var::X)) throw std::invalid_argument("indicial exponent cannot depend on X");
  auto ode = ode_coefficients();
  slices_ = {ode.p0.coefficients_in(Var::X), ode.p1.coefficients_in(Var::X), ode.p2.coefficients_in(Var::X)};
  // Only shifts -1, 0, +1 may appear, otherwise the relation is not three-term.
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < static_cast<int>(slices_[k].size()); ++j)
      if (!slices_[k][j].is_zero() && (k - j > 1 || k - j < -1))
        throw std::logic_error("series relation is not three-term");
}

MPoly SeriesRelation::shift_coefficient(long n, int s) const {
  MPoly out;
  const MPoly index = MPoly(Rat(n + s)) + q_;
  for (int k = 0; k < 3; ++k) {
    const int j = k - s;
    if (j < 0 || j >= static_cast<int>(slices_[k].size())) continue;
    out += slices_[k][j] * falling(index, k);
  }
  return out;
}

SeriesRelation series_relation(const MPoly& q) { return SeriesRelation(q); }

MPoly indicial_polynomial() {
  // Lowest power X^(q-1): only u_0 with shift +1 contributes.
  auto ode = ode_coefficients();
  const MPoly q = MPoly::var(Var::X);
  MPoly out;
  for (int k = 1; k < 3; ++k) {
    auto slice = (k == 1 ? ode.p1 : ode.p2).coefficient_of(Var::X, k - 1);
    out += slice * falling(q, k);
  }
  return out;
}

std::array<MPoly, 2> indicial_roots() {
  auto rest = div_exact(indicial_polynomial(), MPoly::var(Var::X));
  if (!rest || rest->degree(Var::X) != 1) throw std::logic_error("unexpected indicial polynomial");
  const MPoly c1 = rest->coefficient_of(Var::X, 1), c0 = rest->coefficient_of(Var::X, 0);
  if (!c1.is_constant()) throw std::logic_error("indicial root is not polynomial");
  return {MPoly{}, MPoly(-1 / c1.constant_term()) * c0};
}

MPoly pochhammer(const MPoly& a, unsigned n) {
  MPoly out(1);
  for (unsigned k = 0; k < n; ++k) out *= a + MPoly(Rat(k));
  return out;
}

RationalExpr series_prefactor(unsigned n) {
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  return {(-MPoly::var(Var::B)).pow(n), MPoly(Rat(fact)) * pochhammer(MPoly(1) - MPoly::var(Var::L), n)};
}

Rat series_prefactor(unsigned n, const Rat& lambda2, const Rat& beta2) {
  Rat den(1);
  for (unsigned k = 1; k <= n; ++k) {
    if (lambda2 == k)
      throw std::domain_error("series prefactor pole: (1-L)_n vanishes at k = " + std::to_string(k));
    den *= Rat(k) * (Rat(k) - lambda2);
  }
  return pow(-beta2, n) / den;
}

std::vector<RationalExpr> u_sequence(const MPoly& energy, unsigned n_max) {
  const SeriesRelation rel;
  auto at = [&](const MPoly& p) { return p.substitute(Var::E, energy); };
  std::vector<RationalExpr> out{{MPoly(1), MPoly(1)}};
  MPoly a_prev;  // A(n-1)
  for (unsigned n = 0; n < n_max; ++n) {
    const MPoly a = at(rel.A(n));
    if (a.is_zero())
      throw std::domain_error("A(" + std::to_string(n) + ") vanishes at this energy; use the QES eigenfunction path");
    MPoly w = at(rel.M(n)) * out[n].num;
    if (n > 0) w += at(rel.G(n)) * a_prev * out[n - 1].num;
    out.push_back({-w, out[n].den * a});
    a_prev = a;
  }
  return out;
}

std::vector<Rat> u_values(const Rat& energy, const Rat& lambda2, const Rat& beta2, unsigned n_max) {
  const SeriesRelation rel;
  const Assignment pt = point(energy, lambda2, beta2);
  std::vector<Rat> u{Rat(1)};
  for (unsigned n = 0; n < n_max; ++n) {
    const Rat a = rel.A(n).evaluate(pt);
    if (a == 0)
      throw std::domain_error("A(" + std::to_string(n) + ") vanishes at this energy; use the QES eigenfunction path");
    Rat rhs = rel.M(n).evaluate(pt) * u[n];
    if (n > 0) rhs += rel.G(n).evaluate(pt) * u[n - 1];
    u.push_back(-rhs / a);
  }
  return u;
}

std::vector<BdPolynomial> bd_polynomials(unsigned n_last) {
  auto u = u_sequence(MPoly::var(Var::E), n_last);
  std::vector<BdPolynomial> out;
  for (unsigned n = 0; n <= n_last; ++n) out.push_back({n, n % 2 ? -u[n].num : u[n].num, n});
  return out;
}

BdPolynomial bd_polynomial(unsigned n) { return bd_polynomials(n).back(); }

MPoly juddian_polynomial(unsigned N, unsigned n_max) {
  if (N < 1 || N > n_max)
    throw std::out_of_range("constraint index " + std::to_string(N) + " outside [1, " + std::to_string(n_max) + "]");
  const SeriesRelation rel;
  const MPoly energy = MPoly(Rat(N)) - MPoly::var(Var::L);
  auto at = [&](const MPoly& p) { return p.substitute(Var::E, energy); };

  // Rows 0..N-2 have constant, nonzero A(n) = (n+1)(n+1-N).
  std::vector<MPoly> u{MPoly(1)};
  for (unsigned n = 0; n + 2 <= N; ++n) {
    const Rat a = as_constant(at(rel.A(n)), "A(n)");
    MPoly rhs = at(rel.M(n)) * u[n];
    if (n > 0) rhs += at(rel.G(n)) * u[n - 1];
    u.push_back(MPoly(-1 / a) * rhs);
  }
  // Row N-1 has A(N-1) = 0: what remains must vanish.
  MPoly raw = at(rel.M(N - 1)) * u[N - 1];
  if (N >= 2) raw += at(rel.G(N - 1)) * u[N - 2];
  if (raw.is_zero()) throw std::logic_error("constraint polynomial vanished identically");
  return normalize_primitive(raw).part;
}

Rat qes_energy(long N, const Rat& q, const Rat& lambda2) { return Rat(N) + q - lambda2; }

namespace {

QesEigenfunction build_eigenfunction(unsigned N, const Rat& lambda2, const Rat& beta2, bool exact) {
  if (N < 1) throw std::out_of_range("eigenfunction index must be >= 1");
  QesEigenfunction out;
  out.N = N;
  out.energy = qes_energy(N, 0, lambda2);
  out.juddian_value = juddian_polynomial(N, std::max(N, kDefaultJuddianNMax))
                          .evaluate(Assignment{}.set(Var::L, lambda2).set(Var::B, beta2));
  if (exact && out.juddian_value != 0)
    throw std::domain_error("not a Juddian point: J_" + std::to_string(N) + "(L, B) = " + to_string(out.juddian_value));

  const SeriesRelation rel;
  const Assignment pt = point(out.energy, lambda2, beta2);
  std::vector<Rat> u{Rat(1)};
  for (unsigned n = 0; n + 2 <= N; ++n) {
    Rat rhs = rel.M(n).evaluate(pt) * u[n];
    if (n > 0) rhs += rel.G(n).evaluate(pt) * u[n - 1];
    u.push_back(-rhs / rel.A(n).evaluate(pt));
  }
  const Rat m = rel.M(N).evaluate(pt);
  if (m == 0) throw std::domain_error("degenerate truncation: M(N) = 0 at E = N - L");
  u.push_back(-rel.G(N).evaluate(pt) * u[N - 1] / m);

  std::vector<MPoly::Term> terms;
  for (unsigned n = 0; n <= N; ++n)
    if (u[n] != 0) terms.emplace_back(Monomial::from_exponents(0, 0, 0, n), u[n]);
  out.chi = MPoly::from_terms(std::move(terms));
  return out;
}

}  // namespace

QesEigenfunction qes_eigenfunction(unsigned N, const Rat& lambda2, const Rat& beta2) {
  return build_eigenfunction(N, lambda2, beta2, true);
}

QesEigenfunction near_qes_eigenfunction(unsigned N, const Rat& lambda2, const Rat& beta2) {
  return build_eigenfunction(N, lambda2, beta2, false);
}

QesLevel qes_level(unsigned N) {
  return {N, MPoly{}, MPoly(Rat(N)) - MPoly::var(Var::L), juddian_polynomial(N, std::max(N, kDefaultJuddianNMax)),
          std::nullopt};
}

QesLevel qes_level(unsigned N, const Rat& lambda2, const Rat& beta2) {
  QesLevel level = qes_level(N);
  if (level.juddian.evaluate(Assignment{}.set(Var::L, lambda2).set(Var::B, beta2)) == 0)
    level.eigenfunction = qes_eigenfunction(N, lambda2, beta2).chi;
  return level;
}

}  // namespace qes
