#include "qpr/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpr {

namespace {

// plain complex arithmetic at a fixed working precision (no error tracking;
// certification happens separately with ComplexApprox)
struct Cpx {
  BigFloat re, im;
};

Cpx c_make(long prec) { return Cpx{BigFloat(prec), BigFloat(prec)}; }

Cpx operator+(const Cpx& a, const Cpx& b) { return {a.re + b.re, a.im + b.im}; }
Cpx operator-(const Cpx& a, const Cpx& b) { return {a.re - b.re, a.im - b.im}; }
Cpx operator*(const Cpx& a, const Cpx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cpx operator/(const Cpx& a, const Cpx& b) {
  BigFloat den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigFloat c_abs(const Cpx& a) {
  BigFloat h(std::max(a.re.prec(), a.im.prec()));
  mpfr_hypot(h.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return h;
}

Cpx horner(const std::vector<Cpx>& coeffs, const Cpx& z, long prec) {
  Cpx acc = c_make(prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexApprox horner_tracked(const std::vector<ComplexApprox>& coeffs, const ComplexApprox& z) {
  ComplexApprox acc = ComplexApprox::exact_zero(z.prec());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Cpx> embed_plain(const CycPoly& p, long prec) {
  std::vector<Cpx> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    ComplexApprox e = embed_cyclotomic(c, prec);
    out.push_back(Cpx{e.re(), e.im()});
  }
  return out;
}

}  // namespace

RootFindResult complex_roots(const CycPoly& p, long precision_bits) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("complex_roots: need a nonzero polynomial of degree >= 1");
  const long long n = p.degree();
  const CycPoly monic = p.monic();
  const CycPoly deriv = monic.derivative();
  if (precision_bits < 16) precision_bits = 16;
  const BigFloat target = BigFloat::pow2(-(precision_bits / 2), ComplexApprox::kErrPrec);
  const long start_prec = std::max<long>(precision_bits, 64);
  const long max_prec = std::max<long>(1024, start_prec);

  RootFindResult best;
  best.achieved_bound = BigFloat::from_double(1e308, ComplexApprox::kErrPrec);

  for (long wp = start_prec; wp <= max_prec; wp *= 2) {
    std::vector<Cpx> coeffs = embed_plain(monic, wp);

    // Cauchy bound for the initial circle
    BigFloat radius = BigFloat::from_long(1, wp);
    for (long long i = 0; i < n; ++i) {
      BigFloat m = c_abs(coeffs[static_cast<size_t>(i)]);
      if (radius < m) radius = m;
    }
    radius = radius + BigFloat::from_long(1, wp);

    // initial points: radius * zeta^(k) * offset, offset breaks symmetry
    std::vector<Cpx> z(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k) {
      BigFloat co(wp), si(wp);
      // angle (2k+1)/(2n) turns, irrationally shifted a little
      BigFloat::sin_cos_2pi_over(4 * n + 1, 2 * k + 1 + (k * k) % (4 * n + 1), wp, co, si);
      z[static_cast<size_t>(k)] = Cpx{radius * co, radius * si};
    }

    const BigFloat step_tol = BigFloat::mul_up(radius.abs(), BigFloat::pow2(-wp + 6, 64));
    for (int iter = 0; iter < 400; ++iter) {
      BigFloat max_step(ComplexApprox::kErrPrec);
      for (long long k = 0; k < n; ++k) {
        Cpx num = horner(coeffs, z[static_cast<size_t>(k)], wp);
        Cpx den = c_make(wp);
        den.re = BigFloat::from_long(1, wp);
        for (long long j = 0; j < n; ++j) {
          if (j == k) continue;
          den = den * (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
        }
        Cpx step = num / den;
        z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - step;
        BigFloat sa = c_abs(step);
        if (max_step < sa) max_step = sa;
      }
      if (max_step < step_tol) break;
    }

    // Newton polish at doubled precision
    long rp = wp * 2;
    std::vector<Cpx> rcoeffs = embed_plain(monic, rp);
    std::vector<Cpx> rdcoeffs = embed_plain(deriv, rp);
    std::vector<Cpx> zr(z.size());
    for (size_t k = 0; k < z.size(); ++k) zr[k] = z[k];
    for (int iter = 0; iter < 12; ++iter) {
      for (auto& zk : zr) {
        Cpx num = horner(rcoeffs, zk, rp);
        Cpx den = horner(rdcoeffs, zk, rp);
        BigFloat da = c_abs(den);
        if (da.is_zero()) continue;
        zk = zk - num / den;
      }
    }

    // certification: a disk of radius n |p(z)| / |p'(z)| around z contains a root
    std::vector<ComplexApprox> ccoeffs, cdcoeffs;
    for (const auto& c : monic.coeffs()) ccoeffs.push_back(embed_cyclotomic(c, rp));
    for (const auto& c : deriv.coeffs()) cdcoeffs.push_back(embed_cyclotomic(c, rp));

    std::vector<ComplexApprox> roots;
    BigFloat worst(ComplexApprox::kErrPrec);
    bool certified = true;
    for (const auto& zk : zr) {
      ComplexApprox zc(zk.re, zk.im, BigFloat(ComplexApprox::kErrPrec));
      ComplexApprox pv = horner_tracked(ccoeffs, zc);
      ComplexApprox dv = horner_tracked(cdcoeffs, zc);
      BigFloat num_up = pv.abs_upper();
      BigFloat den_lo = dv.abs_approx() - dv.error_bound();
      BigFloat bound;
      if (den_lo.sign() <= 0) {
        certified = false;
        bound = BigFloat::from_double(1.0, ComplexApprox::kErrPrec);
      } else {
        bound = BigFloat::div_up(
            BigFloat::mul_up(BigFloat::from_long(static_cast<long>(n), ComplexApprox::kErrPrec),
                             num_up),
            den_lo);
      }
      if (worst < bound) worst = bound;
      roots.emplace_back(zk.re, zk.im, bound);
    }

    std::sort(roots.begin(), roots.end(), [](const ComplexApprox& a, const ComplexApprox& b) {
      int c = a.re().cmp(b.re());
      if (c != 0) return c < 0;
      return a.im().cmp(b.im()) < 0;
    });

    if (worst < best.achieved_bound) {
      best.roots = roots;
      best.achieved_bound = worst;
      best.converged = certified && (worst <= target);
    }
    if (best.converged) break;
  }
  return best;
}

}  // namespace qpr
