#include "qes/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qes {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Int parse_int_digits(std::string_view s) {
  if (s.empty()) return 0;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number");
  return Int(std::string(s), 10);
}

Int pow10(unsigned k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("cannot parse rational '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw bad();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rat a = parse_rat(s.substr(0, slash));
    Rat b = parse_rat(s.substr(slash + 1));
    if (b == 0) throw bad();
    Rat r = a / b;
    return r;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    bool eneg = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      eneg = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (ex.empty()) throw bad();
    try {
      exponent = parse_int_digits(ex).get_si();
    } catch (const std::invalid_argument&) {
      throw bad();
    }
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw bad();
  Int mant;
  try {
    mant = parse_int_digits(std::string(int_part) + std::string(frac_part));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rat r = scale >= 0 ? make_rat(mant, pow10(static_cast<unsigned>(scale)))
                     : Rat(mant * pow10(static_cast<unsigned>(-scale)));
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

Rat pow(const Rat& base, unsigned exponent) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rat(num, den);
}

Rat from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value");
  return Rat(v);
}

}  // namespace qes
