#pragma once

#include <mpfr.h>

#include <string>

#include "qpr/numtheory.hpp"

namespace qpr {

// Thin RAII wrapper around mpfr_t with explicit precision.  Binary operations
// produce results at the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(long prec = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& q, long prec);
  static BigFloat from_double(double d, long prec = 53);
  static BigFloat from_long(long v, long prec = 53);

  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(size_t digits = 40) const;

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  // upward-rounded variants for conservative error accounting
  static BigFloat add_up(const BigFloat& a, const BigFloat& b);
  static BigFloat mul_up(const BigFloat& a, const BigFloat& b);
  static BigFloat div_up(const BigFloat& a, const BigFloat& b);

  BigFloat abs() const;
  BigFloat sqrt() const;

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

  // 2^e at the given precision
  static BigFloat pow2(long e, long prec = 64);

  // trig values needed for the root-of-unity embedding
  static void sin_cos_2pi_over(long long n, long long k, long prec, BigFloat& cos_out,
                               BigFloat& sin_out);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace qpr
