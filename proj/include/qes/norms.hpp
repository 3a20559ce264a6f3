#ifndef QES_NORMS_HPP
#define QES_NORMS_HPP

#include "qes/rational.hpp"

#include <string>
#include <vector>

namespace qes {

// gamma_0..gamma_n of the polynomial family, exact.
struct NormSequence {
  Rat lambda2;
  std::vector<Rat> values;
  std::vector<int> signs;  // -1, 0, +1
};

// gamma_n = 2L (n-L)/(n+L) gamma_{n-1}, gamma_0 = 1. L <= 0 rejected.
NormSequence gamma_recursion(unsigned n_max, const Rat& lambda2);

// gamma_n = 2^n L^n (1-L)_n / (1+L)_n. L <= 0 rejected.
Rat gamma_pochhammer(unsigned n, const Rat& lambda2);

struct LogGamma {
  double log_abs = 0.0;  // ln|Gamma(x)|
  int sign = 1;
};

// Lanczos (g = 7, 9 terms) with reflection below 1/2. Throws at the poles
// x = 0, -1, -2, ...
LogGamma log_gamma(double x);

// gamma_n through Gamma functions and the reflection formula; a floating
// cross-check of the exact forms. Requires L > 0 and L not an integer.
double gamma_closed_form(unsigned n, double lambda2);

// sign(gamma_n) = sign prod_{k=1..n} (k - L), n = 0..n_max.
std::vector<int> norm_sign_profile(unsigned n_max, const Rat& lambda2);

char sign_char(int s);

// Header "n,gamma_exact_num,gamma_exact_den,gamma_float,sign"; floats with
// 17 significant digits.
std::string norms_csv(const NormSequence& seq);

}  // namespace qes

#endif
