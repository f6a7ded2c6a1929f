#include "qpr/numtheory.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qpr {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int m = 0;
      while (n % p == 0) {
        n /= p;
        ++m;
      }
      out.emplace_back(p, m);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long euler_phi(long long n) {
  long long phi = 1;
  for (auto [p, m] : factorize(n)) {
    long long pk = 1;
    for (int i = 1; i < m; ++i) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out{1};
  for (auto [p, m] : factorize(n)) {
    size_t sz = out.size();
    long long pk = 1;
    for (int i = 1; i <= m; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<long long, long long> squarefree_decomposition(long long n) {
  long long s = 1, k = 1;
  for (auto [p, m] : factorize(n)) {
    for (int i = 0; i < m / 2; ++i) k *= p;
    if (m % 2) s *= p;
  }
  return {s, k};
}

int legendre_symbol(long long a, long long p) {
  mpz_class az(static_cast<long>(a)), pz(static_cast<long>(p));
  return mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
}

namespace {

// exact division of integer polynomials, both ascending; divisor monic
std::vector<BigInt> poly_divexact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
  for (long long k = static_cast<long long>(quot.size()) - 1; k >= 0; --k) {
    BigInt c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c != 0) {
      for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long long n) {
  static std::map<long long, std::vector<BigInt>> cache;
  static std::mutex mu;
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // ascending divisor order guarantees every proper divisor is cached first
  for (long long d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<BigInt> num(d + 1, BigInt(0));
    num[0] = -1;
    num[d] = 1;
    for (long long dd : divisors(d)) {
      if (dd == d) continue;
      num = poly_divexact(num, cache.at(dd));
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

bool rational_kth_root(const Rational& x, long long k, Rational& root) {
  if (k < 1) throw std::invalid_argument("rational_kth_root: k must be >= 1");
  if (sgn(x) < 0) return false;
  if (sgn(x) == 0) {
    root = 0;
    return true;
  }
  BigInt num = x.get_num(), den = x.get_den();
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k))) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k))) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace qpr
