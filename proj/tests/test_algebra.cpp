#include <doctest.h>

#include "fixtures.hpp"
#include "qpr/algebra.hpp"
#include "qpr/reps.hpp"
#include "qpr/rng.hpp"

using namespace qpr;
using namespace qpr::fixtures;

namespace {

SubgroupChar xi_minus(const ValidatedDatum& v) {
  // the sector with xi(h^4) = -1 on the Z/8 fixtures
  return sector_where(v, v.datum.group.element({4}), 4).xi;
}

}  // namespace

TEST_CASE("sector algebra basics on the Z/8 fixture") {
  auto v = validated(z8(1, 1, 1));
  StructureAlgebra A(v, xi_minus(v));
  CHECK(A.dim() == 64);

  SUBCASE("unit acts as identity") {
    long long e = A.unit_index();
    for (long long u = 0; u < A.dim(); ++u) {
      const auto& left = A.product(e, u);
      REQUIRE(left.size() == 1);
      CHECK(left[0].first == u);
      CHECK(left[0].second.is_one());
      const auto& right = A.product(u, e);
      REQUIRE(right.size() == 1);
      CHECK(right[0].first == u);
      CHECK(right[0].second.is_one());
    }
  }

  SUBCASE("left multiplication matrices reproduce the structure constants") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      long long u = static_cast<long long>(rng.below(64));
      long long w = static_cast<long long>(rng.below(64));
      Mat<CycNum> lu = A.left_mult_matrix(u);
      Mat<CycNum> lw = A.left_mult_matrix(w);
      auto prod = A.product(u, w);
      // L_u L_w = L_{u w} as matrices acting on the regular module
      Mat<CycNum> lhs = lu * lw;
      Mat<CycNum> rhs(A.dim(), A.dim());
      for (const auto& [idx, c] : prod) {
        Mat<CycNum> li = A.left_mult_matrix(idx);
        for (long long i = 0; i < A.dim(); ++i)
          for (long long j = 0; j < A.dim(); ++j) rhs(i, j) += c * li(i, j);
      }
      CHECK(lhs == rhs);
    }
  }

  SUBCASE("sampled associativity") {
    CHECK(check_associativity_sampled(A, 42, 10000));
  }

  SUBCASE("exhaustive associativity at d = 64") {
    CHECK(check_associativity(A, 1));  // dispatches to the exhaustive sweep
  }
}

TEST_CASE("associativity dispatch samples above dimension 80") {
  FinAbGroup G({12});
  LiftingDatum d;
  d.group = G;
  d.theta = 1;
  d.g = {G.element({1})};
  d.chi = {G.character({1})};
  d.alpha = {{CycNum::zero()}};
  auto v = validated(d);
  StructureAlgebra A(v, sectors(v)[0].xi);
  CHECK(A.dim() == 144);
  CHECK(check_associativity(A, 7));
}

TEST_CASE("exhaustive associativity on small sector algebras") {
  // d = 8 with a scalar-degenerate nu term exercises every rewriting rule
  auto v = validated(z4_r2());
  for (const auto& s : sectors(v)) {
    StructureAlgebra A(v, s.xi);
    CHECK(A.dim() == 8);
    CHECK(check_associativity_exhaustive(A));
  }
  // theta = 1 algebra
  auto v1 = validated(z8_theta1(1));
  for (const auto& s : sectors(v1)) {
    StructureAlgebra A(v1, s.xi);
    CHECK(A.dim() == 16);
    CHECK(check_associativity_exhaustive(A));
  }
}

TEST_CASE("nilpotent generators in a Case I sector") {
  auto v = validated(z8(0, 0, 0));
  StructureAlgebra A(v, xi_minus(v));
  // x^3 * x = x^4 rewrites to alpha_11 (g^4 - 1) = 0
  BasisLabel x3{{3, 0}, 0};
  BasisLabel x1{{1, 0}, 0};
  long long u = A.index_of(x3), w = A.index_of(x1);
  CHECK(A.product(u, w).empty());
}

TEST_CASE("trace Gram form is symmetric and matches matrix traces") {
  auto v = validated(z8_theta1(1));
  StructureAlgebra A(v, xi_minus(v));
  Mat<CycNum> gram = A.trace_gram();
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    long long u = static_cast<long long>(rng.below(16));
    long long w = static_cast<long long>(rng.below(16));
    CHECK(gram(u, w) == gram(w, u));
    Mat<CycNum> prod = A.left_mult_matrix(u) * A.left_mult_matrix(w);
    CycNum tr = CycNum::zero();
    for (long long i = 0; i < A.dim(); ++i) tr += prod(i, i);
    CHECK(gram(u, w) == tr);
  }
}

TEST_CASE("radical dimensions") {
  SUBCASE("Case I sector: radical has codimension |F(xi)|") {
    auto v = validated(z8(0, 0, 0));
    StructureAlgebra A(v, xi_minus(v));
    RadicalInfo rad = radical(A);
    CHECK(rad.dim == 60);  // 64 - 4 one-dimensional simples
  }
  SUBCASE("theta = 1 algebra B(xi) is semisimple when the power scalar is nonzero") {
    auto v = validated(z8_theta1(1));
    StructureAlgebra A(v, xi_minus(v));
    CHECK(radical(A).dim == 0);
    // the other sector has x^4 = 0 and is far from semisimple
    auto plus = sector_where(v, v.datum.group.element({4}), 0);
    StructureAlgebra B(v, plus.xi);
    CHECK(radical(B).dim == 12);  // 16 - 4
  }
}

TEST_CASE("radical is an ideal") {
  auto v = validated(z8_theta1(1));
  auto plus = sector_where(v, v.datum.group.element({4}), 0);
  StructureAlgebra A(v, plus.xi);
  RadicalInfo rad = radical(A);
  REQUIRE(rad.dim > 0);

  // rank of the radical basis must not grow when products are appended
  Rng rng(31);
  Mat<CycNum> base(A.dim(), rad.dim);
  for (long long j = 0; j < rad.dim; ++j)
    for (long long i = 0; i < A.dim(); ++i) base(i, j) = rad.basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
  long long base_rank = exact_rank(base);
  CHECK(base_rank == rad.dim);

  for (int trial = 0; trial < 8; ++trial) {
    std::vector<CycNum> a(static_cast<size_t>(A.dim()), CycNum::zero());
    for (int k = 0; k < 3; ++k)
      a[rng.below(static_cast<std::uint64_t>(A.dim()))] = CycNum(rng.range(-3, 3));
    const auto& j = rad.basis[rng.below(static_cast<std::uint64_t>(rad.dim))];
    for (auto prod : {A.mul(a, j), A.mul(j, a)}) {
      Mat<CycNum> aug(A.dim(), rad.dim + 1);
      for (long long col = 0; col < rad.dim; ++col)
        for (long long i = 0; i < A.dim(); ++i) aug(i, col) = base(i, col);
      for (long long i = 0; i < A.dim(); ++i) aug(i, rad.dim) = prod[static_cast<size_t>(i)];
      CHECK(exact_rank(aug) == base_rank);
    }
  }
}

TEST_CASE("completeness accounting") {
  auto cc = completeness_check(64, 44, {1, 1, 3, 3});
  CHECK(cc.pass);
  CHECK(cc.sum_of_squares == 20);
  auto bad = completeness_check(64, 0, {4, 4, 4});
  CHECK(!bad.pass);
}

TEST_CASE("idempotent calculus") {
  SUBCASE("order-2 Lambda in Z/8: e_+- = (1 +- h^4)/2") {
    auto v = validated(z8(1, 1, 0));
    auto res = idempotent_check(v);
    CHECK(res.pass);
    CHECK(res.failures.empty());
  }
  SUBCASE("order-4 Lambda in Z/4 x Z/4") {
    auto v = validated(z4z4());
    CHECK(v.lambda.order() == 4);
    CHECK(idempotent_check(v).pass);
  }
  SUBCASE("trivial Lambda") {
    auto v = validated(z4_case4());
    CHECK(idempotent_check(v).pass);
  }
  SUBCASE("order-8 Lambda") {
    // chi of order 2 on Z/16: Lambda = 2 Z/16, |Lambda| = 8
    FinAbGroup G({16});
    LiftingDatum d;
    d.group = G;
    d.theta = 1;
    d.g = {G.element({1})};
    d.chi = {G.character({8})};
    d.alpha = {{CycNum::zero()}};
    auto v = validated(d);
    CHECK(v.lambda.order() == 8);
    CHECK(idempotent_check(v).pass);
  }
}

TEST_CASE("numeric nullity") {
  const long prec = 128;
  auto c = [&](double x) { return ComplexApprox::from_rational(make_rational((long long)x), prec); };
  Mat<ComplexApprox> m(2, 3);
  m(0, 0) = c(1);
  m(0, 1) = c(2);
  m(0, 2) = c(3);
  m(1, 0) = c(2);
  m(1, 1) = c(4);
  m(1, 2) = c(6);  // rank 1
  BigFloat tol = BigFloat::from_double(1e-25, 64);
  CHECK(numeric_nullity(m, tol) == 2);
}

namespace {

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out;
  out.dim = a.dim + b.dim;
  auto block = [&](const Mat<CycNum>& x, const Mat<CycNum>& y) {
    Mat<CycNum> m(out.dim, out.dim);
    for (long long i = 0; i < x.rows(); ++i)
      for (long long j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (long long i = 0; i < y.rows(); ++i)
      for (long long j = 0; j < y.cols(); ++j) m(a.dim + i, a.dim + j) = y(i, j);
    return m;
  };
  out.x = block(a.x, b.x);
  if (a.has_y()) out.y = block(a.y, b.y);
  for (size_t u = 0; u < a.h.size(); ++u) out.h.push_back(block(a.h[u], b.h[u]));
  return out;
}

}  // namespace

TEST_CASE("hom dimension is additive over direct sums") {
  auto v = validated(z4_case4());
  auto secs = sectors(v);
  const SectorData& s = secs[0];
  std::vector<IrrepDescriptor> all;
  for (const auto& eta : s.fiber) all.push_back(build_case_IV(v, s, eta));

  const MatrixRep& small = *all[0].rep;  // dim 1
  const MatrixRep& big = *all[1].rep;    // dim 3
  MatrixRep sum = direct_sum(small, big);

  CHECK(hom_dim(sum, small) == hom_dim(small, small) + hom_dim(big, small));
  CHECK(hom_dim(sum, big) == hom_dim(small, big) + hom_dim(big, big));
  CHECK(hom_dim(sum, sum) == 2);  // End of a sum of two distinct simples
  MatrixRep twice = direct_sum(big, big);
  CHECK(hom_dim(twice, twice) == 4);
  CHECK(hom_dim(twice, big) == 2);
}

TEST_CASE("theta = 3 sector algebras (oracle-only mode)") {
  FinAbGroup G({4});
  LiftingDatum d;
  d.group = G;
  d.theta = 3;
  d.g = {G.element({1}), G.element({1}), G.element({1})};
  d.chi = {G.character({2}), G.character({2}), G.character({2})};
  // all pairs satisfy chi_i(g_j) chi_j(g_i) = (-1)(-1) = 1; r_i = 2
  CycNum one = CycNum::one();
  d.alpha = {{CycNum::zero(), one, one},
             {one, CycNum::zero(), one},
             {one, one, CycNum::zero()}};  // -chi_i(g_j) = 1, so transpose = itself
  auto v = validated(d);
  CHECK(v.dim_A == 32);
  auto secs = sectors(v);
  REQUIRE(secs.size() == 2);
  long long total = 0;
  for (const auto& s : secs) {
    CHECK(s.tag == CaseTag::OracleOnly);
    total += s.dim;
    StructureAlgebra A(v, s.xi);
    CHECK(A.dim() == 16);
    CHECK(check_associativity_exhaustive(A));
    RadicalInfo rad = radical(A);
    CHECK(rad.dim >= 0);
    CHECK(rad.dim < A.dim());  // the unit is never radical
  }
  CHECK(total == 32);
}

TEST_CASE("hom dimension is invariant under change of basis") {
  // conjugating one side by an invertible matrix leaves every hom dimension
  // unchanged; the conjugated module no longer has diagonal h-matrices, so
  // this also drives the dense intertwiner solver
  auto v = validated(z8(1, 0, 0));
  auto s = sector_where(v, v.datum.group.element({4}), 4);
  IrrepDescriptor d1 = build_case_II(v, s, v.datum.group.character({1}));
  IrrepDescriptor d3 = build_case_II(v, s, v.datum.group.character({3}));

  long long n = d1.rep->dim;
  Mat<CycNum> P = Mat<CycNum>::identity(n, CycNum::one());
  P(0, 1) = CycNum(2);
  P(2, 3) = CycNum::root_of_unity(8, 1);
  Mat<CycNum> Pinv = Mat<CycNum>::identity(n, CycNum::one());
  Pinv(0, 1) = CycNum(-2);
  Pinv(2, 3) = -CycNum::root_of_unity(8, 1);
  REQUIRE(P * Pinv == Mat<CycNum>::identity(n, CycNum::one()));

  MatrixRep conj = *d1.rep;
  conj.x = Pinv * d1.rep->x * P;
  conj.y = Pinv * d1.rep->y * P;
  for (size_t u = 0; u < conj.h.size(); ++u) conj.h[u] = Pinv * d1.rep->h[u] * P;

  CHECK(hom_dim(conj, conj) == 1);
  CHECK(hom_dim(conj, *d1.rep) == 1);
  CHECK(hom_dim(*d1.rep, conj) == 1);
  CHECK(hom_dim(conj, *d3.rep) == 1);   // same orbit, still isomorphic
  CHECK(verify_relations(conj, v, s.xi).pass);  // relations are basis-free
}
