#include "qes/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <utility>

namespace qes {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rat> out = c_;
  const Rat lead = c_.back();
  for (auto& c : out) c /= lead;
  return UPoly(std::move(out));
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = abs(c);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    const bool unit = mag == 1;
    if (!unit || k == 0) out += qes::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat q = rem[k + db] / b.leading();
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).rem;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UPoly({Rat(1)});
  return divmod(p, gcd(p, p.derivative())).quot.monic();
}

Var free_variable(const MPoly& p, const Assignment& fixed) {
  std::vector<Var> free;
  for (Var v : kAllVars)
    if (p.depends_on(v) && !fixed.has(v)) free.push_back(v);
  if (free.size() != 1)
    throw std::invalid_argument("specialize: expected exactly one free variable, found " + std::to_string(free.size()));
  return free.front();
}

UPoly specialize(const MPoly& p, const Assignment& fixed) {
  const Var v = free_variable(p, fixed);
  const MPoly q = p.substitute(fixed);
  std::vector<Rat> coeffs;
  for (const auto& slice : q.coefficients_in(v)) {
    if (!slice.is_constant()) throw std::logic_error("specialize: coefficient still symbolic");
    coeffs.push_back(slice.constant_term());
  }
  return UPoly(std::move(coeffs));
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  for (;;) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    // -r scaled by a positive constant keeps every sign.
    std::vector<Rat> c = r.coeffs();
    const Rat scale = -1 / abs(r.leading());
    for (auto& x : c) x *= scale;
    seq.emplace_back(std::move(c));
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_count(const std::vector<UPoly>& seq, const Rat& a, const Rat& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

namespace {

// A point strictly inside (a, b) where p does not vanish.
Rat split_point(const UPoly& p, const Rat& a, const Rat& b) {
  for (unsigned den = 2;; ++den)
    for (unsigned num = 1; num < den; ++num) {
      Rat m = a + (b - a) * Rat(num, den);
      if (p.sign_at(m) != 0) return m;
    }
}

void bisect(const UPoly& p, const std::vector<UPoly>& seq, const Rat& a, const Rat& b, int count,
            std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b, p.sign_at(a), p.sign_at(b), 1});
    return;
  }
  const Rat m = split_point(p, a, b);
  const int left = sturm_count(seq, a, m);
  bisect(p, seq, a, m, left, out);
  bisect(p, seq, m, b, count - left, out);
}

}  // namespace

std::vector<Rat> boundary_roots(const UPoly& p, const Rat& lo, const Rat& hi) {
  std::vector<Rat> out;
  if (p(lo) == 0) out.push_back(lo);
  if (hi != lo && p(hi) == 0) out.push_back(hi);
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: empty domain");
  const UPoly sf = squarefree_part(p);
  std::vector<IsolatingInterval> out;
  if (sf.degree() <= 0) return out;
  const auto seq = sturm_sequence(sf);

  Rat a = lo, b = hi;
  if (sf.sign_at(a) == 0) {
    Rat step = (b - a) / 2;
    while (sf.sign_at(a + step) == 0 || sturm_count(seq, a, a + step) != 0) step /= 2;
    a += step;
  }
  if (sf.sign_at(b) == 0) {
    Rat step = (b - a) / 2;
    while (sf.sign_at(b - step) == 0 || sturm_count(seq, b - step, b) != 1) step /= 2;
    b -= step;
  }
  bisect(sf, seq, a, b, sturm_count(seq, a, b), out);
  return out;
}

IsolatingInterval refine_interval(const UPoly& p, const IsolatingInterval& iv, const Rat& tol) {
  const UPoly sf = squarefree_part(p);
  if (sf.degree() == 1) {
    const Rat r = -sf.coeffs()[0] / sf.coeffs()[1];
    return {r, r, 0, 0, 1};
  }
  IsolatingInterval cur = iv;
  cur.sign_lo = sf.sign_at(cur.lo);
  cur.sign_hi = sf.sign_at(cur.hi);
  if (cur.sign_lo == 0 || cur.sign_hi == 0 || cur.sign_lo == cur.sign_hi)
    throw std::invalid_argument("refine: interval endpoints do not bracket a sign change");
  while (cur.hi - cur.lo > tol) {
    const Rat m = cur.midpoint();
    const int s = sf.sign_at(m);
    if (s == 0) return {m, m, 0, 0, 1};
    if (s == cur.sign_lo) cur.lo = m;
    else cur.hi = m;
  }
  return cur;
}

Rat refine_root(const UPoly& p, const IsolatingInterval& iv, const Rat& tol) {
  return refine_interval(p, iv, tol).midpoint();
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& m) {
  if (m.dim() < 1) throw std::invalid_argument("symmetric_eigenvalues: empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

EigenSystem symmetric_eigensystem(const SymMatrix& m) {
  if (m.dim() < 1) throw std::invalid_argument("symmetric_eigensystem: empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const auto& v = es.eigenvalues();
  return {{v.data(), v.data() + v.size()}, es.eigenvectors()};
}

}  // namespace qes
