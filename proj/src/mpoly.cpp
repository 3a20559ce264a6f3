#include "qes/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qes {

char var_name(Var v) {
  switch (v) {
    case Var::E: return 'E';
    case Var::L: return 'L';
    case Var::B: return 'B';
    case Var::X: return 'X';
  }
  return '?';
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned e) { return Monomial{}.with_exponent(v, e); }

Monomial Monomial::from_exponents(unsigned e_E, unsigned e_L, unsigned e_B, unsigned e_X) {
  return of(Var::E, e_E).with_exponent(Var::L, e_L).with_exponent(Var::B, e_B).with_exponent(Var::X, e_X);
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
  Monomial m = *this;
  m.packed_ &= ~(std::uint64_t{kMaxExponent} << shift(v));
  m.packed_ |= std::uint64_t{e} << shift(v);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Var v : kAllVars) d += exponent(v);
  return d;
}

bool Monomial::divides(Monomial other) const {
  for (Var v : kAllVars)
    if (exponent(v) > other.exponent(v)) return false;
  return true;
}

Monomial Monomial::quotient_of(Monomial other) const {
  // Fields never borrow when divides(other) holds.
  return from_packed(other.packed_ - packed_);
}

Monomial operator*(Monomial a, Monomial b) {
  for (Var v : kAllVars)
    if (a.exponent(v) + b.exponent(v) > Monomial::kMaxExponent)
      throw std::overflow_error("monomial exponent out of range");
  return Monomial::from_packed(a.packed_ + b.packed_);
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(Var v, unsigned e) { return monomial(Rat(1), Monomial::of(v, e)); }

MPoly MPoly::monomial(const Rat& c, Monomial m) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return Rat(0);
}

Rat MPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rat(0);
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

unsigned MPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = Monomial::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, t.first.exponent(v));
  return d;
}

MPoly MPoly::coefficient_of(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.first.exponent(v) == k) out.emplace_back(t.first.with_exponent(v, 0), t.second);
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_)
    buckets[t.first.exponent(v)].emplace_back(t.first.with_exponent(v, 0), t.second);
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  auto slices = coefficients_in(v);
  MPoly acc;
  for (auto it = slices.rbegin(); it != slices.rend(); ++it) acc = acc * value + *it;
  return acc;
}

MPoly MPoly::substitute(const Assignment& a) const {
  std::array<std::vector<Rat>, 4> powers;
  auto power = [&](Var v, unsigned e) -> const Rat& {
    auto& cache = powers[static_cast<unsigned>(v)];
    if (cache.empty()) cache.push_back(Rat(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *a.get(v));
    return cache[e];
  };
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    Monomial rest = m;
    for (Var v : kAllVars) {
      if (!a.has(v)) continue;
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      coef *= power(v, e);
      rest = rest.with_exponent(v, 0);
    }
    out.emplace_back(rest, std::move(coef));
  }
  return from_terms(std::move(out));
}

Rat MPoly::evaluate(const Assignment& a) const {
  MPoly r = substitute(a);
  if (!r.is_constant()) throw std::invalid_argument("evaluate: unassigned variable in " + to_string());
  return r.constant_term();
}

double MPoly::evaluate(const std::array<double, 4>& values) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (Var v : kAllVars) {
      unsigned e = m.exponent(v);
      if (e) t *= std::pow(values[static_cast<unsigned>(v)], static_cast<int>(e));
    }
    sum += t;
  }
  return sum;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rat(abs(g), l);
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(Rat(1)), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                               bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Rat(-j->second) : j->second);
      ++j;
    } else {
      Rat c = subtract ? Rat(i->second - j->second) : Rat(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly{};
  if (b.size() == 1) {
    std::vector<MPoly::Term> out;
    out.reserve(a.size());
    for (const auto& [m, c] : a.terms_) out.emplace_back(m * b.terms_[0].first, c * b.terms_[0].second);
    // Multiplying every monomial by the same monomial preserves order.
    MPoly p;
    p.terms_ = std::move(out);
    return p;
  }
  if (a.size() == 1) return b * a;

  std::vector<MPoly::Term> out;
  if (a.is_integral() && b.is_integral()) {
    // Integer fast path: fused multiply-add without rational normalization.
    std::unordered_map<std::uint64_t, Int> acc;
    acc.reserve(a.size() * 4 + b.size() * 4);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Int& slot = acc[(ma * mb).packed()];
        mpz_addmul(slot.get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
      }
    out.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (v != 0) out.emplace_back(Monomial::from_packed(k), Rat(v));
  } else {
    std::unordered_map<std::uint64_t, Rat> acc;
    acc.reserve(a.size() * 4 + b.size() * 4);
    Rat tmp;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        acc[(ma * mb).packed()] += tmp;
      }
    out.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (v != 0) out.emplace_back(Monomial::from_packed(k), std::move(v));
  }
  return MPoly::from_terms(std::move(out));
}

MPoly derivative(const MPoly& p, Var v) {
  std::vector<MPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m.with_exponent(v, e - 1), c * e);
  }
  return MPoly::from_terms(std::move(out));
}

std::optional<MPoly> div_exact(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return MPoly{};
  if (den.is_constant()) return num * Rat(1 / den.constant_term());

  // Lexicographic division: if den | num, every intermediate remainder is a
  // multiple of den, so its leading monomial is divisible by lt(den).
  std::map<Monomial, Rat> rem;
  for (const auto& t : num.terms()) rem.emplace(t.first, t.second);
  const auto& [lead_m, lead_c] = den.leading_term();
  std::vector<MPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lead_m.divides(top->first)) return std::nullopt;
    Monomial qm = lead_m.quotient_of(top->first);
    Rat qc = top->second / lead_c;
    for (const auto& [dm, dc] : den.terms()) {
      Monomial target = dm * qm;
      auto [it, inserted] = rem.try_emplace(target, 0);
      it->second -= qc * dc;
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return MPoly::from_terms(std::move(quotient));
}

Normalized normalize_primitive(const MPoly& p) {
  if (p.is_zero()) return {Rat(0), MPoly{}};
  Rat c = p.content();
  if (p.leading_term().second < 0) c = -c;
  return {c, p * Rat(1 / c)};
}

// --------------------------------------------------------------- rendering

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    Rat mag = abs(c);
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;

    std::string vars;
    for (Var v : {Var::E, Var::L, Var::B, Var::X}) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += var_name(v);
      if (e > 1) vars += '^' + std::to_string(e);
    }
    if (vars.empty()) {
      out += qes::to_string(mag);
    } else {
      if (mag != 1) out += qes::to_string(mag) + '*';
      out += vars;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why +
                                " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rat(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > Monomial::kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return MPoly(parse_rat(s_.substr(start, pos_ - start)));
    }
    ++pos_;
    switch (c) {
      case 'E': return MPoly::var(Var::E);
      case 'L': return MPoly::var(Var::L);
      case 'B': return MPoly::var(Var::B);
      case 'X': return MPoly::var(Var::X);
      default: --pos_; fail(std::string("unexpected '") + c + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace qes
