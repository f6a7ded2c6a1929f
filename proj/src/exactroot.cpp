#include "qpr/exactroot.hpp"

#include <stdexcept>

namespace qpr {

namespace {

CycNum sqrt_of_odd_prime(long long p) {
  // Gauss sum g = sum_a (a|p) zeta_p^a; g = sqrt(p) for p = 1 mod 4,
  // g = i sqrt(p) for p = 3 mod 4
  CycNum g = CycNum::zero();
  for (long long a = 1; a < p; ++a) {
    CycNum term = CycNum::root_of_unity(p, a);
    if (legendre_symbol(a, p) < 0) term = -term;
    g += term;
  }
  if (p % 4 == 1) return g;
  // sqrt(p) = g / i
  return g * CycNum::root_of_unity(4, -1);
}

}  // namespace

CycNum sqrt_of_positive_integer(long long m) {
  if (m <= 0) throw std::invalid_argument("sqrt_of_positive_integer: need m > 0");
  auto [s, k] = squarefree_decomposition(m);
  CycNum out(k);
  for (auto [p, e] : factorize(s)) {
    (void)e;  // s squarefree
    if (p == 2)
      out *= CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
    else
      out *= sqrt_of_odd_prime(p);
  }
  return out;
}

CycNum sqrt_of_positive_rational(const Rational& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("sqrt_of_positive_rational: need x > 0");
  // sqrt(p/q) = sqrt(p q) / q
  BigInt pq = x.get_num() * x.get_den();
  if (!pq.fits_slong_p())
    throw std::invalid_argument("sqrt_of_positive_rational: operand too large");
  CycNum root = sqrt_of_positive_integer(pq.get_si());
  return root * CycNum(Rational(BigInt(1), x.get_den()));
}

std::optional<CycNum> cyclotomic_kth_root(const CycNum& mu, long long k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_kth_root: k must be >= 1");
  if (mu.is_zero()) return CycNum::zero();
  if (k == 1) return mu;

  long long n = mu.level();

  // split mu = zeta * rho with zeta a root of unity in Q(zeta_n) and rho a
  // positive rational; roots of unity there are exactly +-zeta_n^j
  std::optional<CycNum> unit;
  Rational rho;
  for (int sign = 0; sign < 2 && !unit; ++sign) {
    for (long long j = 0; j < n; ++j) {
      CycNum zeta = CycNum::root_of_unity(n, j);
      if (sign) zeta = -zeta;
      CycNum cand = mu * zeta.inverse();
      if (cand.is_rational() && sgn(cand.rational_value()) > 0) {
        unit = zeta;
        rho = cand.rational_value();
        break;
      }
    }
  }
  if (!unit) return std::nullopt;

  // odd part of the radical must be rational
  long long v = 0, odd = k;
  while (odd % 2 == 0) {
    odd /= 2;
    ++v;
  }
  Rational tau;
  if (!rational_kth_root(rho, odd, tau)) return std::nullopt;
  while (v > 0) {
    Rational rt;
    if (rational_kth_root(tau, 2, rt)) {
      tau = rt;
      --v;
    } else {
      break;
    }
  }
  CycNum real_part;
  if (v == 0)
    real_part = CycNum(tau);
  else if (v == 1)
    real_part = sqrt_of_positive_rational(tau);
  else
    return std::nullopt;  // nested irrational square roots leave cyclotomic fields

  // unit part: zeta = zeta_o^a with gcd(a, o) = 1, so zeta^(1/k) = zeta_(o k)^a
  long long o = unit->order_as_root_of_unity();
  if (o == 0) throw std::logic_error("cyclotomic_kth_root: unit part is not a root of unity");
  long long a = -1;
  for (long long cand = 0; cand < o; ++cand) {
    if (gcd_ll(cand, o) != 1 && o > 1) continue;
    if (CycNum::root_of_unity(o, cand) == *unit) {
      a = cand;
      break;
    }
  }
  if (a < 0) throw std::logic_error("cyclotomic_kth_root: could not express unit as zeta_o^a");
  CycNum unit_root = CycNum::root_of_unity(o * k, a);

  CycNum lambda = unit_root * real_part;
  if (lambda.pow(k) != mu) throw std::logic_error("cyclotomic_kth_root: verification failed");
  return lambda;
}

}  // namespace qpr
