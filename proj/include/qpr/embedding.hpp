#pragma once

#include <string>

#include "qpr/bigfloat.hpp"
#include "qpr/cyclotomic.hpp"

namespace qpr {

// Complex value with a conservatively propagated absolute error bound.
// The bound is kept in a low-precision BigFloat rounded upward, so it never
// silently underflows to zero.
class ComplexApprox {
 public:
  ComplexApprox() : re_(53), im_(53), err_(kErrPrec) {}
  ComplexApprox(BigFloat re, BigFloat im, BigFloat err)
      : re_(std::move(re)), im_(std::move(im)), err_(std::move(err)) {}

  static ComplexApprox exact_zero(long prec);
  static ComplexApprox from_rational(const Rational& q, long prec);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& error_bound() const { return err_; }
  long prec() const { return std::max(re_.prec(), im_.prec()); }

  ComplexApprox operator+(const ComplexApprox& o) const;
  ComplexApprox operator-(const ComplexApprox& o) const;
  ComplexApprox operator*(const ComplexApprox& o) const;
  ComplexApprox operator-() const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  // upper bound on |z| including the error bound
  BigFloat abs_upper() const;
  // |z| at working precision, error ignored
  BigFloat abs_approx() const;

  std::string to_string(size_t digits = 40) const;

  static constexpr long kErrPrec = 64;

 private:
  BigFloat re_, im_;
  BigFloat err_;
};

// |a - b| (midpoints only)
BigFloat complex_distance(const ComplexApprox& a, const ComplexApprox& b);

// zeta_N -> exp(2 pi i / N) at the requested precision
ComplexApprox embed_cyclotomic(const CycNum& x, long prec);

}  // namespace qpr
