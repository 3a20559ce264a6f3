#ifndef QES_RATIONAL_HPP
#define QES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qes {

// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every constructor from separate
// numerator/denominator goes through make_rat().
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(const Int& num, const Int& den);

// Parses "3", "-7/16", "0.1875", "2.5e-3" exactly (no binary float step).
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }
inline double to_double(const Rat& q) { return q.get_d(); }

Rat pow(const Rat& base, unsigned exponent);

// Exact conversion of a finite double; useful for pinning float inputs.
Rat from_double(double v);

}  // namespace qes

#endif
