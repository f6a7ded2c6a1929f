#pragma once

#include <optional>

#include "qpr/cyclotomic.hpp"

namespace qpr {

// sqrt(m) for a positive integer m, expressed exactly in a cyclotomic field
// via quadratic Gauss sums (sqrt(2) = zeta_8 + zeta_8^-1, sqrt(p) from the
// sum of Legendre-weighted p-th roots of unity)
CycNum sqrt_of_positive_integer(long long m);

CycNum sqrt_of_positive_rational(const Rational& x);

// Some lambda in a cyclotomic field with lambda^k = mu, when mu factors as
// (root of unity) * (positive rational) and the real radical stays cyclotomic
// (rational k-th root up to one leftover square root).  Returns nullopt when
// the radical genuinely leaves every cyclotomic field (e.g. 2^(1/4)).
std::optional<CycNum> cyclotomic_kth_root(const CycNum& mu, long long k);

}  // namespace qpr
