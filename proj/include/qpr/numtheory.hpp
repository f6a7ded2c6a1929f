#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace qpr {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// prime factorization of n >= 1 as (p, multiplicity), ascending
std::vector<std::pair<long long, int>> factorize(long long n);

long long euler_phi(long long n);

std::vector<long long> divisors(long long n);

// squarefree decomposition n = s * k^2 with s squarefree (n >= 1)
std::pair<long long, long long> squarefree_decomposition(long long n);

// Legendre symbol (a | p) for odd prime p
int legendre_symbol(long long a, long long p);

// coefficients of the n-th cyclotomic polynomial, ascending degree;
// cached, integer coefficients
const std::vector<BigInt>& cyclotomic_polynomial(long long n);

// exact k-th root of a nonnegative rational if it exists
bool rational_kth_root(const Rational& x, long long k, Rational& root);

}  // namespace qpr
