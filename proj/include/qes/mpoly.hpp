#ifndef QES_MPOLY_HPP
#define QES_MPOLY_HPP

#include "qes/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qes {

// The four symbols used throughout: energy E, L = lambda^2, B = beta^2 and
// the ODE variable X = xi.
enum class Var : unsigned { E = 0, L = 1, B = 2, X = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::E, Var::L, Var::B, Var::X};

char var_name(Var v);

// Exponent tuple packed into 16-bit fields. The field layout (X highest,
// then E, L, B) makes integer comparison of the packed word coincide with
// the canonical lexicographic order on (eX, eE, eL, eB).
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 0xFFFF;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(unsigned e_E, unsigned e_L, unsigned e_B, unsigned e_X);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((packed_ >> shift(v)) & kMaxExponent);
  }
  Monomial with_exponent(Var v, unsigned e) const;
  unsigned total_degree() const;
  bool is_one() const { return packed_ == 0; }

  bool divides(Monomial other) const;
  // Precondition: divides(other).
  Monomial quotient_of(Monomial other) const;

  friend Monomial operator*(Monomial a, Monomial b);
  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

  std::uint64_t packed() const { return packed_; }
  static Monomial from_packed(std::uint64_t p) {
    Monomial m;
    m.packed_ = p;
    return m;
  }

 private:
  static constexpr unsigned shift(Var v) {
    switch (v) {
      case Var::X: return 48;
      case Var::E: return 32;
      case Var::L: return 16;
      case Var::B: return 0;
    }
    return 0;
  }
  std::uint64_t packed_ = 0;
};

// Partial assignment of values to variables.
class Assignment {
 public:
  Assignment& set(Var v, Rat value) {
    values_[static_cast<unsigned>(v)] = std::move(value);
    return *this;
  }
  const std::optional<Rat>& get(Var v) const { return values_[static_cast<unsigned>(v)]; }
  bool has(Var v) const { return get(v).has_value(); }

 private:
  std::array<std::optional<Rat>, 4> values_;
};

// Sparse polynomial in {E, L, B, X} over the rationals. Terms are kept in
// ascending canonical order with no zero coefficients, so structural
// equality is mathematical equality.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT

  static MPoly var(Var v, unsigned e = 1);
  static MPoly monomial(const Rat& c, Monomial m);
  static MPoly from_terms(std::vector<Term> terms);
  // Parses the canonical rendering, and more generally any expression built
  // from rationals, E/L/B/X, + - * ^, parentheses, and division by constants.
  static MPoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_integral() const;
  Rat constant_term() const;
  Rat coefficient(Monomial m) const;
  // Largest term in canonical order. Precondition: nonzero.
  const Term& leading_term() const { return terms_.back(); }

  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  // Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coefficient_of(Var v, unsigned k) const;
  // coefficients_in(v)[k] == coefficient_of(v, k) for k = 0..degree(v).
  std::vector<MPoly> coefficients_in(Var v) const;

  MPoly substitute(Var v, const MPoly& value) const;
  MPoly substitute(const Assignment& a) const;
  // Throws if a variable present in the polynomial is left unassigned.
  Rat evaluate(const Assignment& a) const;
  // values indexed by Var.
  double evaluate(const std::array<double, 4>& values) const;

  // Positive rational c such that *this / c has coprime integer coefficients.
  Rat content() const;

  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

MPoly derivative(const MPoly& p, Var v);

// Exact quotient num/den, or nullopt when den does not divide num.
// Precondition: den != 0.
std::optional<MPoly> div_exact(const MPoly& num, const MPoly& den);

// Primitive part with positive leading coefficient; the returned scale s
// satisfies p == s * part.
struct Normalized {
  Rat scale;
  MPoly part;
};
Normalized normalize_primitive(const MPoly& p);

}  // namespace qes

#endif
