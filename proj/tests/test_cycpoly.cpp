#include <doctest.h>

#include <stdexcept>

#include "qpr/cycpoly.hpp"
#include "qpr/rng.hpp"

using namespace qpr;

namespace {

CycPoly from_rationals(std::vector<long long> coeffs) {
  std::vector<CycNum> c;
  for (long long v : coeffs) c.emplace_back(v);
  return CycPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  CycPoly p = from_rationals({-1, 0, 1});  // c^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(CycNum(3)) == CycNum(8));
  CHECK(p.eval(CycNum(1)).is_zero());
  CycPoly q = from_rationals({1, 1});
  CHECK((p * q).degree() == 3);
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == from_rationals({0, 2}));
}

TEST_CASE("division with remainder") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<CycNum> ac, bc;
    long long da = rng.range(0, 5), db = rng.range(0, 3);
    for (long long i = 0; i <= da; ++i)
      ac.push_back(CycNum::root_of_unity(4, rng.range(0, 3)).pow(rng.range(0, 2)) *
                   CycNum(rng.range(-3, 3)));
    for (long long i = 0; i <= db; ++i) bc.push_back(CycNum(rng.range(-3, 3)));
    CycPoly a(ac), b(bc);
    if (b.is_zero()) continue;
    CycPoly quot, rem;
    CycPoly::divmod(a, b, quot, rem);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("gcd with derivative and squarefree flag") {
  SUBCASE("c^2 - 1 is squarefree") {
    auto info = poly_gcd_squarefree(from_rationals({-1, 0, 1}));
    CHECK(info.gcd_with_derivative.degree() == 0);
    CHECK(info.is_squarefree);
    CHECK(info.squarefree_part.degree() == 2);
  }
  SUBCASE("(c - 1)^2 has gcd c - 1") {
    auto info = poly_gcd_squarefree(from_rationals({1, -2, 1}));
    CHECK(!info.is_squarefree);
    CHECK(info.gcd_with_derivative.degree() == 1);
    // monic gcd is exactly c - 1
    CHECK(info.gcd_with_derivative.coeff(0) == CycNum(-1));
    CHECK(info.gcd_with_derivative.coeff(1) == CycNum(1));
    CHECK(info.squarefree_part.degree() == 1);
  }
  SUBCASE("c^r - 1 is squarefree for all r, including cyclotomic coefficients") {
    for (long long r = 1; r <= 9; ++r) {
      std::vector<CycNum> c(static_cast<size_t>(r) + 1, CycNum::zero());
      c[0] = -CycNum::root_of_unity(8, 3);  // scale by a root of unity
      c[static_cast<size_t>(r)] = CycNum::root_of_unity(8, 3);
      auto info = poly_gcd_squarefree(CycPoly(std::move(c)));
      CHECK(info.is_squarefree);
    }
  }
  SUBCASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(poly_gcd_squarefree(CycPoly()), std::domain_error);
  }
}

TEST_CASE("linear composition") {
  // p(c) = c^2 + 1 composed with c -> 2 + 3c
  CycPoly p = from_rationals({1, 0, 1});
  CycPoly q = p.compose_linear(CycNum(2), CycNum(3));
  CHECK(q == from_rationals({5, 12, 9}));
}
