#include "qpr/cycpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qpr {

void CycPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::constant(const CycNum& a) {
  CycPoly p;
  if (!a.is_zero()) p.c_ = {a};
  return p;
}

CycPoly CycPoly::variable() {
  CycPoly p;
  p.c_ = {CycNum::zero(), CycNum::one()};
  return p;
}

const CycNum& CycPoly::leading() const {
  if (c_.empty()) throw std::domain_error("CycPoly::leading: zero polynomial");
  return c_.back();
}

CycNum CycPoly::coeff(long long k) const {
  if (k < 0 || k >= static_cast<long long>(c_.size())) return CycNum::zero();
  return c_[k];
}

CycPoly CycPoly::operator-() const {
  CycPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
  std::vector<CycNum> out(std::max(a.c_.size(), b.c_.size()), CycNum::zero());
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return CycPoly(std::move(out));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) { return a + (-b); }

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.is_zero() || b.is_zero()) return CycPoly();
  std::vector<CycNum> out(a.c_.size() + b.c_.size() - 1, CycNum::zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return CycPoly(std::move(out));
}

CycPoly CycPoly::scaled(const CycNum& s) const {
  std::vector<CycNum> out = c_;
  for (auto& v : out) v *= s;
  return CycPoly(std::move(out));
}

CycPoly CycPoly::derivative() const {
  if (c_.size() <= 1) return CycPoly();
  std::vector<CycNum> out(c_.size() - 1, CycNum::zero());
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * CycNum(static_cast<long long>(i));
  return CycPoly(std::move(out));
}

CycNum CycPoly::eval(const CycNum& x) const {
  CycNum acc = CycNum::zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CycPoly CycPoly::compose_linear(const CycNum& a, const CycNum& b) const {
  // Horner on p(a + b*x)
  CycPoly lin(std::vector<CycNum>{a, b});
  CycPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + CycPoly::constant(*it);
  return acc;
}

void CycPoly::divmod(const CycPoly& num, const CycPoly& den, CycPoly& quot, CycPoly& rem) {
  if (den.is_zero()) throw std::domain_error("CycPoly::divmod: division by zero polynomial");
  rem = num;
  quot = CycPoly();
  if (rem.degree() < den.degree()) return;
  std::vector<CycNum> q(rem.c_.size() - den.c_.size() + 1, CycNum::zero());
  CycNum lead_inv = den.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    size_t shift = rem.c_.size() - den.c_.size();
    CycNum c = rem.c_.back() * lead_inv;
    q[shift] = c;
    for (size_t j = 0; j < den.c_.size(); ++j) rem.c_[shift + j] -= c * den.c_[j];
    rem.strip();
  }
  quot = CycPoly(std::move(q));
}

CycPoly CycPoly::monic() const {
  if (is_zero()) throw std::domain_error("CycPoly::monic: zero polynomial");
  return scaled(leading().inverse());
}

CycPoly poly_gcd(const CycPoly& a, const CycPoly& b) {
  CycPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    CycPoly q, rem;
    CycPoly::divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    if (!r1.is_zero()) r1 = r1.monic();  // keeps coefficient growth in check
  }
  if (r0.is_zero()) return r0;
  return r0.monic();
}

SquarefreeInfo poly_gcd_squarefree(const CycPoly& p) {
  if (p.is_zero()) throw std::domain_error("poly_gcd_squarefree: zero polynomial");
  SquarefreeInfo info;
  info.gcd_with_derivative = poly_gcd(p, p.derivative());
  info.is_squarefree = info.gcd_with_derivative.degree() == 0;
  CycPoly quot, rem;
  CycPoly::divmod(p, info.gcd_with_derivative, quot, rem);
  if (!rem.is_zero()) throw std::logic_error("poly_gcd_squarefree: gcd does not divide p");
  info.squarefree_part = quot.monic();
  return info;
}

std::string CycPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].to_string() << ")";
    if (k == 1) os << "*" << var;
    if (k > 1) os << "*" << var << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace qpr
