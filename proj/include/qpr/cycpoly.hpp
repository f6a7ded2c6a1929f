#pragma once

#include <string>
#include <vector>

#include "qpr/cyclotomic.hpp"

namespace qpr {

// Univariate polynomial over Q(zeta_N), lowest degree first, trailing zeros
// stripped.  The zero polynomial has an empty coefficient vector.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { strip(); }
  static CycPoly constant(const CycNum& a);
  static CycPoly variable();  // x

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<CycNum>& coeffs() const { return c_; }
  const CycNum& leading() const;
  CycNum coeff(long long k) const;  // 0 beyond degree

  CycPoly operator-() const;
  friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  CycPoly scaled(const CycNum& s) const;

  bool operator==(const CycPoly& o) const { return c_ == o.c_; }

  CycPoly derivative() const;
  CycNum eval(const CycNum& x) const;
  CycPoly compose_linear(const CycNum& a, const CycNum& b) const;  // p(a + b*x)

  // division with remainder; divisor must be nonzero
  static void divmod(const CycPoly& num, const CycPoly& den, CycPoly& quot, CycPoly& rem);

  CycPoly monic() const;  // throws on zero

  std::string to_string(const std::string& var = "c") const;

 private:
  std::vector<CycNum> c_;
  void strip();
};

// monic gcd via the Euclidean algorithm
CycPoly poly_gcd(const CycPoly& a, const CycPoly& b);

struct SquarefreeInfo {
  CycPoly gcd_with_derivative;  // monic
  bool is_squarefree = false;
  CycPoly squarefree_part;  // p / gcd(p, p'), monic
};

// gcd(p, p') and the squarefree flag; p must be nonzero
SquarefreeInfo poly_gcd_squarefree(const CycPoly& p);

}  // namespace qpr
