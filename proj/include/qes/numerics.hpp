#ifndef QES_NUMERICS_HPP
#define QES_NUMERICS_HPP

#include "qes/mpoly.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace qes {

// Dense univariate polynomial over Q, coefficients ascending, no trailing
// zeros (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& leading() const { return c_.back(); }

  Rat operator()(const Rat& x) const;
  double operator()(double x) const;
  int sign_at(const Rat& x) const { return sign((*this)(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  std::string to_string(char var = 'x') const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
  friend UPoly operator*(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  UPoly quot;
  UPoly rem;
};
DivMod divmod(const UPoly& a, const UPoly& b);  // b != 0
UPoly gcd(const UPoly& a, const UPoly& b);      // monic, gcd(0, 0) = 0
UPoly squarefree_part(const UPoly& p);          // monic

// Substitutes every assigned variable; exactly one variable of p may stay
// free, otherwise std::invalid_argument.
UPoly specialize(const MPoly& p, const Assignment& fixed);
// The variable left free by specialize.
Var free_variable(const MPoly& p, const Assignment& fixed);

std::vector<UPoly> sturm_sequence(const UPoly& p);  // p squarefree
// Sign variations at x, zeros skipped.
int sign_variations(const std::vector<UPoly>& seq, const Rat& x);
// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const Rat& a, const Rat& b);

struct IsolatingInterval {
  Rat lo;
  Rat hi;
  int sign_lo = 0;  // of the squarefree part
  int sign_hi = 0;
  int root_count = 1;

  Rat midpoint() const { return (lo + hi) / 2; }
};

// Every real root in the open interval (lo, hi), one interval per root,
// sorted. Endpoints of the returned intervals are never roots.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi);
// Which of lo, hi are roots (the open-domain isolation skips them).
std::vector<Rat> boundary_roots(const UPoly& p, const Rat& lo, const Rat& hi);

// Bisects in exact arithmetic until hi - lo <= tol and returns the
// midpoint. Degree-1 squarefree parts are solved exactly. A tolerance at
// least the interval width returns the original midpoint.
Rat refine_root(const UPoly& p, const IsolatingInterval& iv, const Rat& tol);
IsolatingInterval refine_interval(const UPoly& p, const IsolatingInterval& iv, const Rat& tol);

// Symmetric by construction: set(i, j) writes both triangles.
class SymMatrix {
 public:
  explicit SymMatrix(int dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {}
  int dim() const { return static_cast<int>(m_.rows()); }
  void set(int i, int j, double v) { m_(i, j) = m_(j, i) = v; }
  void add(int i, int j, double v) {
    m_(i, j) += v;
    if (i != j) m_(j, i) += v;
  }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Ascending. Householder tridiagonalization + implicit shifted iteration.
std::vector<double> symmetric_eigenvalues(const SymMatrix& m);

struct EigenSystem {
  std::vector<double> values;
  Eigen::MatrixXd vectors;  // column k pairs with values[k]
};
EigenSystem symmetric_eigensystem(const SymMatrix& m);

}  // namespace qes

#endif
