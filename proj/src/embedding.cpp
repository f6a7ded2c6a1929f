#include "qpr/embedding.hpp"

#include <sstream>

namespace qpr {

ComplexApprox ComplexApprox::exact_zero(long prec) {
  return ComplexApprox(BigFloat(prec), BigFloat(prec), BigFloat(kErrPrec));
}

ComplexApprox ComplexApprox::from_rational(const Rational& q, long prec) {
  BigFloat re = BigFloat::from_rational(q, prec);
  // one rounding: |error| <= mag * 2^(1-prec)
  BigFloat mag = re.abs();
  BigFloat err = BigFloat::mul_up(mag, BigFloat::pow2(1 - prec, kErrPrec));
  return ComplexApprox(std::move(re), BigFloat(prec), std::move(err));
}

namespace {

// ulp-scale rounding slop for a freshly computed value of magnitude ~mag
BigFloat rounding_slop(const BigFloat& mag, long prec) {
  return BigFloat::mul_up(mag, BigFloat::pow2(2 - prec, ComplexApprox::kErrPrec));
}

BigFloat mag_upper(const BigFloat& re, const BigFloat& im) {
  // |re| + |im| >= |z|; cheap and safely rounded up
  return BigFloat::add_up(re.abs(), im.abs());
}

}  // namespace

ComplexApprox ComplexApprox::operator+(const ComplexApprox& o) const {
  BigFloat re = re_ + o.re_;
  BigFloat im = im_ + o.im_;
  BigFloat err = BigFloat::add_up(err_, o.err_);
  err = BigFloat::add_up(err, rounding_slop(mag_upper(re, im), std::max(prec(), o.prec())));
  return ComplexApprox(std::move(re), std::move(im), std::move(err));
}

ComplexApprox ComplexApprox::operator-(const ComplexApprox& o) const { return *this + (-o); }

ComplexApprox ComplexApprox::operator-() const {
  return ComplexApprox(-re_, -im_, err_);
}

ComplexApprox ComplexApprox::operator*(const ComplexApprox& o) const {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  // |(a+da)(b+db) - ab| <= |a| db + |b| da + da db, plus rounding
  BigFloat ma = mag_upper(re_, im_);
  BigFloat mb = mag_upper(o.re_, o.im_);
  BigFloat err = BigFloat::add_up(BigFloat::mul_up(ma, o.err_), BigFloat::mul_up(mb, err_));
  err = BigFloat::add_up(err, BigFloat::mul_up(err_, o.err_));
  err = BigFloat::add_up(err, rounding_slop(mag_upper(re, im), std::max(prec(), o.prec())));
  return ComplexApprox(std::move(re), std::move(im), std::move(err));
}

BigFloat ComplexApprox::abs_upper() const {
  BigFloat h(prec());
  mpfr_hypot(h.raw(), re_.raw(), im_.raw(), MPFR_RNDU);
  return BigFloat::add_up(h, err_);
}

BigFloat ComplexApprox::abs_approx() const {
  BigFloat h(prec());
  mpfr_hypot(h.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return h;
}

std::string ComplexApprox::to_string(size_t digits) const {
  std::ostringstream os;
  os << re_.to_string(digits);
  if (im_.sign() >= 0)
    os << " + " << im_.to_string(digits) << "i";
  else
    os << " - " << (-im_).to_string(digits) << "i";
  return os.str();
}

BigFloat complex_distance(const ComplexApprox& a, const ComplexApprox& b) {
  BigFloat dre = a.re() - b.re();
  BigFloat dim = a.im() - b.im();
  BigFloat h(std::max(a.prec(), b.prec()));
  mpfr_hypot(h.raw(), dre.raw(), dim.raw(), MPFR_RNDN);
  return h;
}

ComplexApprox embed_cyclotomic(const CycNum& x, long prec) {
  long long n = x.level();
  BigFloat re(prec), im(prec);
  BigFloat mag(ComplexApprox::kErrPrec);
  long long terms = 0;
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (sgn(c) == 0) continue;
    BigFloat cf = BigFloat::from_rational(c, prec);
    BigFloat co(prec), si(prec);
    BigFloat::sin_cos_2pi_over(n, static_cast<long long>(k), prec, co, si);
    re = re + cf * co;
    im = im + cf * si;
    mag = BigFloat::add_up(mag, cf.abs());
    ++terms;
  }
  // each term costs a few roundings, summation a few more
  BigFloat err = BigFloat::mul_up(
      mag, BigFloat::mul_up(BigFloat::from_long(4 * (terms + 2), ComplexApprox::kErrPrec),
                             BigFloat::pow2(1 - prec, ComplexApprox::kErrPrec)));
  return ComplexApprox(std::move(re), std::move(im), std::move(err));
}

}  // namespace qpr
