#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qpr/numtheory.hpp"

namespace qpr {

// Exact element of the cyclotomic field Q(zeta_N), stored on the power basis
// zeta^0 .. zeta^(phi(N)-1) with coordinates reduced modulo Phi_N.  Two values
// are equal iff their coordinate vectors agree after lifting to a common
// level, so operator== is safe across levels.
class CycNum {
 public:
  CycNum() : level_(1), c_(1, Rational(0)) {}
  explicit CycNum(const Rational& r) : level_(1), c_(1, r) {}
  explicit CycNum(long long n) : level_(1), c_(1, Rational(static_cast<long>(n))) {}

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(Rational(1)); }
  // zeta_n^k
  static CycNum root_of_unity(long long n, long long k);
  // from raw power-basis coordinates (any length; reduced mod Phi_n)
  static CycNum from_coeffs(long long n, std::vector<Rational> coeffs);

  long long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  CycNum lift_to(long long new_level) const;  // level_ must divide new_level

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;  // throws on zero
  CycNum pow(long long e) const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // multiplicative order if this is a root of unity, else 0
  long long order_as_root_of_unity() const;

  // debug/display form "a/b*z^k + ..." (canonical literal grammar)
  std::string to_string() const;

 private:
  long long level_;
  std::vector<Rational> c_;  // size phi(level_)

  void reduce_tail(std::vector<Rational>& raw) const;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// common-level lift of both operands (lcm of levels)
void align_levels(CycNum& a, CycNum& b);

// q-integer (a)_v = 1 + v + ... + v^(a-1)
CycNum q_integer(long long a, const CycNum& v);

}  // namespace qpr
