#pragma once

// lifting data shared across the test suites

#include <stdexcept>

#include "qpr/lifting.hpp"

namespace qpr::fixtures {

// Gamma = Z/8, g_1 = g_2 = h, chi_1 = zeta_8^2, chi_2 = zeta_8^6; r = s = 4,
// Lambda = {0, 4}, two sectors of dimension 64.  The alpha pattern selects the
// case split of the xi(h^4) = -1 sector.
inline LiftingDatum z8(int a11, int a22, int a12) {
  FinAbGroup G({8});
  LiftingDatum d;
  d.group = G;
  d.theta = 2;
  d.g = {G.element({1}), G.element({1})};
  d.chi = {G.character({2}), G.character({6})};
  CycNum nu{static_cast<long long>(a12)};
  CycNum a21 = -(CycNum::root_of_unity(8, 2) * nu);  // -chi_1(g_2) alpha_12
  d.alpha = {{CycNum{static_cast<long long>(a11)}, nu},
             {a21, CycNum{static_cast<long long>(a22)}}};
  return d;
}

// Gamma = Z/4, chi_1 = zeta_4, chi_2 = zeta_4^3, nu = 1: trivial Lambda, one
// sector of dimension 64 in Case IV with simple dimensions {1, 3, 1, 3}
inline LiftingDatum z4_case4() {
  FinAbGroup G({4});
  LiftingDatum d;
  d.group = G;
  d.theta = 2;
  d.g = {G.element({1}), G.element({1})};
  d.chi = {G.character({1}), G.character({3})};
  CycNum one = CycNum::one();
  CycNum a21 = -CycNum::root_of_unity(4, 1);  // -chi_1(g_2)
  d.alpha = {{CycNum::zero(), one}, {a21, CycNum::zero()}};
  return d;
}

// Gamma = Z/4 x Z/4 with order-2 characters: |Lambda| = 4, four sectors
// covering Case I, Case II, the swapped Case II, and Case III
inline LiftingDatum z4z4() {
  FinAbGroup G({4, 4});
  LiftingDatum d;
  d.group = G;
  d.theta = 2;
  d.g = {G.element({1, 0}), G.element({0, 1})};
  d.chi = {G.character({2, 0}), G.character({0, 2})};
  d.alpha = {{CycNum::one(), CycNum::zero()}, {CycNum::zero(), CycNum::one()}};
  return d;
}

// Gamma = Z/4 with chi_1 = chi_2 of order 2: r = 2, so g_1 g_2 lies in Lambda
// and the nu-term degenerates to a scalar
inline LiftingDatum z4_r2(int a12 = 1) {
  FinAbGroup G({4});
  LiftingDatum d;
  d.group = G;
  d.theta = 2;
  d.g = {G.element({1}), G.element({1})};
  d.chi = {G.character({2}), G.character({2})};
  CycNum nu{static_cast<long long>(a12)};
  d.alpha = {{CycNum::zero(), nu}, {nu, CycNum::zero()}};  // -chi_1(g_2) = 1
  return d;
}

// theta = 1 datum on Z/8 (the B(xi) shape)
inline LiftingDatum z8_theta1(int a11) {
  FinAbGroup G({8});
  LiftingDatum d;
  d.group = G;
  d.theta = 1;
  d.g = {G.element({1})};
  d.chi = {G.character({2})};
  d.alpha = {{CycNum{static_cast<long long>(a11)}}};
  return d;
}

inline ValidatedDatum validated(const LiftingDatum& d) {
  auto rep = validate_datum(d);
  if (!rep.ok) {
    std::string msg = "fixture failed validation:";
    for (const auto& issue : rep.issues) msg += " " + issue;
    throw std::logic_error(msg);
  }
  return *rep.validated;
}

// sector whose xi has the given value exponent on the given lambda member
inline SectorData sector_where(const ValidatedDatum& v, const GroupElement& member,
                               long long value_exp) {
  for (const auto& s : sectors(v)) {
    if (subgroup_char_eval(v.lambda, s.xi, member) == value_exp) return s;
  }
  throw std::logic_error("no sector with requested xi value");
}

}  // namespace qpr::fixtures
