#ifndef QES_TESTS_SUPPORT_HPP
#define QES_TESTS_SUPPORT_HPP

#include "qes/mpoly.hpp"

#include <random>

namespace qes::testing {

inline MPoly P(std::string_view s) { return MPoly::parse(s); }

inline Rat R(std::string_view s) { return parse_rat(s); }

inline Rat random_rat(std::mt19937_64& rng, long max_num = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rat random_positive_rat(std::mt19937_64& rng, long max_num = 40, long max_den = 9) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline MPoly random_mpoly(std::mt19937_64& rng, int max_terms = 6, unsigned max_exp = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<MPoly::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    terms.emplace_back(Monomial::from_exponents(exp(rng), exp(rng), exp(rng), exp(rng)), random_rat(rng));
  return MPoly::from_terms(std::move(terms));
}

inline MPoly random_nonzero_mpoly(std::mt19937_64& rng, int max_terms = 6, unsigned max_exp = 3) {
  for (;;) {
    MPoly p = random_mpoly(rng, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

}  // namespace qes::testing

#endif
