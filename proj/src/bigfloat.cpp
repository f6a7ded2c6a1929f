#include "qpr/bigfloat.hpp"

#include <sstream>

namespace qpr {

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, 2);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& q, long prec) {
  BigFloat x(prec);
  mpfr_set_q(x.v_, q.get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_double(double d, long prec) {
  BigFloat x(prec);
  mpfr_set_d(x.v_, d, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_long(long v, long prec) {
  BigFloat x(prec);
  mpfr_set_si(x.v_, v, MPFR_RNDN);
  return x;
}

std::string BigFloat::to_string(size_t digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(prec());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDU);
  return out;
}

BigFloat BigFloat::mul_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDU);
  return out;
}

BigFloat BigFloat::div_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDU);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(prec());
  mpfr_abs(out.v_, v_, MPFR_RNDU);
  return out;
}

BigFloat BigFloat::sqrt() const {
  BigFloat out(prec());
  mpfr_sqrt(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow2(long e, long prec) {
  BigFloat out(prec);
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

void BigFloat::sin_cos_2pi_over(long long n, long long k, long prec, BigFloat& cos_out,
                                BigFloat& sin_out) {
  // angle = 2 pi k / n
  mpfr_t pi, angle;
  mpfr_init2(pi, prec + 8);
  mpfr_init2(angle, prec + 8);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(angle, pi, 2 * (k % n), MPFR_RNDN);
  mpfr_div_si(angle, angle, n, MPFR_RNDN);
  BigFloat c(prec), s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), angle, MPFR_RNDN);
  cos_out = std::move(c);
  sin_out = std::move(s);
  mpfr_clear(pi);
  mpfr_clear(angle);
}

}  // namespace qpr
