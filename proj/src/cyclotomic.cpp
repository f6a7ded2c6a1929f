#include "qpr/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpr {

namespace {

// Per-level data: Phi_N as rational coefficients plus reduction rows for
// powers zeta^k with k >= phi(N).  Rows are extended lazily.
struct LevelCtx {
  long long n = 1;
  long long phi = 1;
  std::vector<Rational> modulus;             // Phi_n, ascending, monic
  std::vector<std::vector<Rational>> pows;   // pows[j] = zeta^(phi+j) on the basis

  const std::vector<Rational>& power_row(long long k) {
    // caller guarantees k >= phi
    long long j = k - phi;
    while (static_cast<long long>(pows.size()) <= j) {
      std::vector<Rational> row(phi, Rational(0));
      if (pows.empty()) {
        // zeta^phi = -(Phi_n - x^phi)
        for (long long i = 0; i < phi; ++i) row[i] = -modulus[i];
      } else {
        // multiply previous row by zeta
        const auto& prev = pows.back();
        Rational top = prev[phi - 1];
        for (long long i = phi - 1; i >= 1; --i) row[i] = prev[i - 1];
        row[0] = 0;
        if (sgn(top) != 0) {
          for (long long i = 0; i < phi; ++i) row[i] -= top * modulus[i];
        }
      }
      pows.push_back(std::move(row));
    }
    return pows[j];
  }
};

LevelCtx& level_ctx(long long n) {
  static std::map<long long, LevelCtx> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    LevelCtx ctx;
    ctx.n = n;
    const auto& phi_int = cyclotomic_polynomial(n);
    ctx.phi = static_cast<long long>(phi_int.size()) - 1;
    ctx.modulus.resize(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) ctx.modulus[i] = Rational(phi_int[i]);
    it = cache.emplace(n, std::move(ctx)).first;
  }
  return it->second;
}

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void CycNum::reduce_tail(std::vector<Rational>& raw) const {
  auto& ctx = level_ctx(level_);
  long long phi = ctx.phi;
  std::vector<Rational> out(phi, Rational(0));
  for (long long k = 0; k < static_cast<long long>(raw.size()); ++k) {
    if (sgn(raw[k]) == 0) continue;
    if (k < phi) {
      out[k] += raw[k];
    } else {
      const auto& row = ctx.power_row(k);
      for (long long i = 0; i < phi; ++i) out[i] += raw[k] * row[i];
    }
  }
  raw = std::move(out);
}

CycNum CycNum::root_of_unity(long long n, long long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: level must be >= 1");
  CycNum x;
  x.level_ = n;
  std::vector<Rational> raw(mod_pos(k, n) + 1, Rational(0));
  raw[mod_pos(k, n)] = 1;
  x.reduce_tail(raw);
  x.c_ = std::move(raw);
  return x;
}

CycNum CycNum::from_coeffs(long long n, std::vector<Rational> coeffs) {
  if (n < 1) throw std::invalid_argument("from_coeffs: level must be >= 1");
  CycNum x;
  x.level_ = n;
  x.reduce_tail(coeffs);
  x.c_ = std::move(coeffs);
  return x;
}

bool CycNum::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (sgn(c_[0] - 1) != 0) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNum::rational_value: not rational");
  return c_[0];
}

CycNum CycNum::lift_to(long long new_level) const {
  if (new_level == level_) return *this;
  if (new_level % level_ != 0)
    throw std::invalid_argument("CycNum::lift_to: old level must divide new level");
  long long step = new_level / level_;
  CycNum out;
  out.level_ = new_level;
  std::vector<Rational> raw;
  raw.resize(static_cast<size_t>((c_.size() - 1) * step + 1), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  out.reduce_tail(raw);
  out.c_ = std::move(raw);
  return out;
}

void align_levels(CycNum& a, CycNum& b) {
  long long l = lcm_ll(a.level(), b.level());
  if (a.level() != l) a = a.lift_to(l);
  if (b.level() != l) b = b.lift_to(l);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  CycNum rhs = o;
  align_levels(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  CycNum rhs = o;
  align_levels(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  CycNum rhs = o;
  align_levels(*this, rhs);
  const auto& a = c_;
  const auto& b = rhs.c_;
  std::vector<Rational> raw(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      raw[i + j] += a[i] * b[j];
    }
  }
  reduce_tail(raw);
  c_ = std::move(raw);
  return *this;
}

namespace {

// dense rational polynomial helpers for the extended Euclid inverse
using RPoly = std::vector<Rational>;

void rp_strip(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  rp_strip(out);
  return out;
}

RPoly rp_sub(RPoly a, const RPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rp_strip(a);
  return a;
}

// division with remainder over Q
void rp_divmod(const RPoly& num, const RPoly& den, RPoly& quot, RPoly& rem) {
  if (den.empty()) throw std::domain_error("rp_divmod: division by zero polynomial");
  rem = num;
  rp_strip(rem);
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  while (rem.size() >= den.size()) {
    size_t shift = rem.size() - den.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
    rp_strip(rem);
    if (rem.empty()) break;
  }
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
  if (is_rational()) {
    CycNum out;
    out.level_ = level_;
    out.c_.assign(c_.size(), Rational(0));
    out.c_[0] = 1 / c_[0];
    return out;
  }
  // extended Euclid: u * this + v * Phi_N = 1  =>  inverse = u mod Phi_N
  auto& ctx = level_ctx(level_);
  RPoly r0 = ctx.modulus;
  RPoly r1(c_.begin(), c_.end());
  rp_strip(r1);
  RPoly s0{}, s1{Rational(1)};  // coefficients of `this` in r0, r1
  while (!r1.empty() && r1.size() > 1) {
    RPoly q, rem;
    rp_divmod(r0, r1, q, rem);
    RPoly s2 = rp_sub(s0, rp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    throw std::logic_error("CycNum::inverse: gcd with Phi_N not constant (zero divisor?)");
  // r1 is a nonzero constant: inverse = s1 / r1
  Rational c = r1[0];
  std::vector<Rational> raw(s1.size(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / c;
  CycNum out;
  out.level_ = level_;
  out.reduce_tail(raw);
  out.c_ = std::move(raw);
  return out;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc = CycNum::one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& o) const {
  CycNum a = *this, b = o;
  align_levels(a, b);
  return a.c_ == b.c_;
}

long long CycNum::order_as_root_of_unity() const {
  if (is_zero()) return 0;
  long long m = lcm_ll(2, level_);
  CycNum p = pow(m);
  if (!p.is_one()) return 0;
  for (long long d : divisors(m)) {
    if (pow(d).is_one()) return d;
  }
  return 0;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational v = c_[k];
    if (first) {
      if (sgn(v) < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
      if (sgn(v) < 0) v = -v;
    }
    os << v.get_str();
    if (k > 0) os << "*z^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

CycNum q_integer(long long a, const CycNum& v) {
  if (a < 0) throw std::invalid_argument("q_integer: a must be >= 0");
  CycNum acc = CycNum::zero();
  CycNum p = CycNum::one();
  for (long long i = 0; i < a; ++i) {
    acc += p;
    p *= v;
  }
  return acc;
}

}  // namespace qpr
