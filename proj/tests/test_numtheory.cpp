#include <doctest.h>

#include "qpr/numtheory.hpp"

using namespace qpr;

TEST_CASE("factorization and phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>(2, 3));
  CHECK(f[1] == std::pair<long long, int>(3, 2));
  CHECK(f[2] == std::pair<long long, int>(5, 1));
  CHECK(divisors(12) == std::vector<long long>({1, 2, 3, 4, 6, 12}));
}

TEST_CASE("squarefree decomposition") {
  auto [s, k] = squarefree_decomposition(72);  // 72 = 2 * 6^2
  CHECK(s == 2);
  CHECK(k == 6);
  auto [s2, k2] = squarefree_decomposition(1);
  CHECK(s2 == 1);
  CHECK(k2 == 1);
}

TEST_CASE("cyclotomic polynomials") {
  auto check = [](long long n, std::vector<long long> expect) {
    const auto& p = cyclotomic_polynomial(n);
    REQUIRE(p.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(p[i] == BigInt(static_cast<long>(expect[i])));
  };
  check(1, {-1, 1});
  check(2, {1, 1});
  check(3, {1, 1, 1});
  check(4, {1, 0, 1});
  check(5, {1, 1, 1, 1, 1});
  check(6, {1, -1, 1});
  check(8, {1, 0, 0, 0, 1});
  check(12, {1, 0, -1, 0, 1});
}

TEST_CASE("legendre symbol") {
  CHECK(legendre_symbol(1, 5) == 1);
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(4, 5) == 1);
  CHECK(legendre_symbol(3, 7) == -1);
  CHECK(legendre_symbol(2, 7) == 1);
}

TEST_CASE("rational kth roots") {
  Rational root;
  CHECK(rational_kth_root(Rational(8), 3, root));
  CHECK(root == 2);
  CHECK(rational_kth_root(Rational(1, 4), 2, root));
  CHECK(root == Rational(1, 2));
  CHECK(!rational_kth_root(Rational(2), 2, root));
  CHECK(!rational_kth_root(Rational(-4), 2, root));
}
