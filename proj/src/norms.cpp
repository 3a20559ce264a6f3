#include "qes/norms.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qes {

namespace {

void require_positive(const Rat& lambda2) {
  if (lambda2 <= 0) throw std::domain_error("norms need lambda^2 > 0, got " + to_string(lambda2));
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_log(double x) {  // x >= 1/2
  x -= 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

NormSequence gamma_recursion(unsigned n_max, const Rat& lambda2) {
  require_positive(lambda2);
  NormSequence seq;
  seq.lambda2 = lambda2;
  seq.values.push_back(Rat(1));
  for (unsigned n = 1; n <= n_max; ++n) {
    Rat next = 2 * lambda2 * (Rat(n) - lambda2) / (Rat(n) + lambda2) * seq.values.back();
    seq.values.push_back(next);
  }
  for (const auto& v : seq.values) seq.signs.push_back(sign(v));
  return seq;
}

Rat gamma_pochhammer(unsigned n, const Rat& lambda2) {
  require_positive(lambda2);
  Rat num = pow(Rat(2 * lambda2), n), den(1);
  for (unsigned k = 0; k < n; ++k) {
    num *= Rat(1) - lambda2 + k;
    den *= Rat(1) + lambda2 + k;
  }
  return num / den;
}

LogGamma log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("log_gamma: pole at non-positive integer");
  if (x >= 0.5) return {lanczos_log(x), 1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = std::sin(std::numbers::pi * x);
  return {std::log(std::numbers::pi / std::abs(s)) - lanczos_log(1.0 - x), s > 0 ? 1 : -1};
}

double gamma_closed_form(unsigned n, double lambda2) {
  if (!(lambda2 > 0.0)) throw std::domain_error("gamma_closed_form needs lambda^2 > 0");
  if (lambda2 == std::round(lambda2))
    throw std::domain_error("gamma_closed_form: integer lambda^2 hits the reflection pole; use the exact forms");
  const double s = std::sin(std::numbers::pi * lambda2);
  const LogGamma g1 = log_gamma(lambda2), g2 = log_gamma(1.0 + lambda2), g3 = log_gamma(n + 1.0 - lambda2),
                 g4 = log_gamma(n + 1.0 + lambda2);
  const double log_abs = n * std::log(2.0 * lambda2) + std::log(std::abs(s) / std::numbers::pi) + g1.log_abs +
                         g2.log_abs + g3.log_abs - g4.log_abs;
  const int sgn = (s > 0 ? 1 : -1) * g1.sign * g2.sign * g3.sign * g4.sign;
  return sgn * std::exp(log_abs);
}

std::vector<int> norm_sign_profile(unsigned n_max, const Rat& lambda2) {
  require_positive(lambda2);
  std::vector<int> out{1};
  int s = 1;
  for (unsigned k = 1; k <= n_max; ++k) {
    s *= sign(Rat(Rat(k) - lambda2));
    out.push_back(s);
  }
  return out;
}

char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

std::string norms_csv(const NormSequence& seq) {
  std::string out = "n,gamma_exact_num,gamma_exact_den,gamma_float,sign\n";
  for (std::size_t n = 0; n < seq.values.size(); ++n) {
    const Rat& v = seq.values[n];
    out += fmt::format("{},{},{},{:.17g},{}\n", n, v.get_num().get_str(), v.get_den().get_str(), to_double(v),
                       sign_char(seq.signs[n]));
  }
  return out;
}

}  // namespace qes
