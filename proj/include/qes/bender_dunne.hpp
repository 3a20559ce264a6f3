#ifndef QES_BENDER_DUNNE_HPP
#define QES_BENDER_DUNNE_HPP

#include "qes/mpoly.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qes {

inline constexpr unsigned kDefaultJuddianNMax = 8;

// num / den with polynomial parts in E, L, B.
struct RationalExpr {
  MPoly num;
  MPoly den;
};

// A(n) u_{n+1} + M(n) u_n + G(n) u_{n-1} = 0, obtained by inserting
// chi = X^q sum u_n X^n into the chi-equation. q is a polynomial in E, L
// (0 or the second indicial root).
class SeriesRelation {
 public:
  explicit SeriesRelation(MPoly q = MPoly{});

  const MPoly& q() const { return q_; }
  MPoly A(long n) const { return shift_coefficient(n, +1); }
  MPoly M(long n) const { return shift_coefficient(n, 0); }
  MPoly G(long n) const { return shift_coefficient(n, -1); }

 private:
  // Coefficient of u_{n+s} at the power X^{n+q}.
  MPoly shift_coefficient(long n, int s) const;

  MPoly q_;
  // slices_[k][j]: coefficient of X^j in the coefficient of chi^(k).
  std::array<std::vector<MPoly>, 3> slices_;
};

SeriesRelation series_relation(const MPoly& q = MPoly{});

// Roots of the indicial polynomial, first root 0.
std::array<MPoly, 2> indicial_roots();
// The indicial polynomial with X standing for q.
MPoly indicial_polynomial();

// c_n = (-B)^n / (n! (1-L)_n).
RationalExpr series_prefactor(unsigned n);
// Throws std::domain_error naming k when L = k for some 1 <= k <= n.
Rat series_prefactor(unsigned n, const Rat& lambda2, const Rat& beta2);

// (a)_n as a polynomial.
MPoly pochhammer(const MPoly& a, unsigned n);

// u_0..u_{n_max} for q = 0 with E replaced by `energy` (pass MPoly::var(E)
// for the symbolic sequence). den is prod_{k<n} A(k). Throws
// std::domain_error if some A(k), k < n_max, vanishes identically: that
// energy belongs to the truncated (QES) path.
std::vector<RationalExpr> u_sequence(const MPoly& energy, unsigned n_max);
// Fully numeric version.
std::vector<Rat> u_values(const Rat& energy, const Rat& lambda2, const Rat& beta2, unsigned n_max);

// B^n P_n(E), a polynomial in E, L, B; P_n = scaled / B^b_power.
// With this normalization u_n = c_n P_n (1-L)_n / (1-L-E)_n, and
// B^n P_n(E = n - L) is the n-th constraint polynomial.
struct BdPolynomial {
  unsigned n = 0;
  MPoly scaled;
  unsigned b_power = 0;
};
BdPolynomial bd_polynomial(unsigned n);
std::vector<BdPolynomial> bd_polynomials(unsigned n_last);

// Constraint on (L, B) for an exact level at E = N - L. Primitive with
// integer coefficients, top power of L positive. 1 <= N <= n_max.
MPoly juddian_polynomial(unsigned N, unsigned n_max = kDefaultJuddianNMax);

Rat qes_energy(long N, const Rat& q, const Rat& lambda2);

struct QesEigenfunction {
  unsigned N = 0;
  Rat energy;
  MPoly chi;           // polynomial in X of degree N
  Rat juddian_value;   // J_N(L, B); zero at an exact point
};

// Requires J_N(L, B) == 0 (std::domain_error "not a Juddian point") and
// M(N) != 0 at E = N - L (std::domain_error, degenerate truncation).
QesEigenfunction qes_eigenfunction(unsigned N, const Rat& lambda2, const Rat& beta2);

// Same construction without the J_N check, for rational approximations of
// irrational roots. The chi-equation residual is then
// c * J_N(L, B) * X^(N-1) for a constant c.
QesEigenfunction near_qes_eigenfunction(unsigned N, const Rat& lambda2, const Rat& beta2);

struct QesLevel {
  unsigned N = 0;
  MPoly q;        // indicial branch, 0
  MPoly energy;   // N - L
  MPoly juddian;  // J_N
  std::optional<MPoly> eigenfunction;
};

QesLevel qes_level(unsigned N);
QesLevel qes_level(unsigned N, const Rat& lambda2, const Rat& beta2);

}  // namespace qes

#endif
