#include "qpr/lifting.hpp"

#include <sstream>
#include <stdexcept>

namespace qpr {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
    case CaseTag::V: return "V";
    case CaseTag::VI: return "VI";
    case CaseTag::OracleOnly: return "oracle-only";
  }
  return "?";
}

namespace {

CycNum char_value(const FinAbGroup& G, const Character& chi, const GroupElement& g) {
  return CycNum::root_of_unity(G.exponent(), G.char_eval_exp(chi, g));
}

std::string scalar_str(const CycNum& x) { return x.to_string(); }

}  // namespace

ValidationReport validate_datum(const LiftingDatum& d, const ValidationOptions& opts) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& msg) { rep.issues.push_back(msg); };

  const FinAbGroup& G = d.group;
  int theta = d.theta;
  if (theta < 1) {
    fail("theta must be >= 1");
    return rep;
  }
  if (static_cast<int>(d.g.size()) != theta || static_cast<int>(d.chi.size()) != theta) {
    fail("generator/character lists must have length theta");
    return rep;
  }
  if (static_cast<int>(d.alpha.size()) != theta) {
    fail("lifting matrix must be theta x theta");
    return rep;
  }
  for (const auto& row : d.alpha)
    if (static_cast<int>(row.size()) != theta) {
      fail("lifting matrix must be theta x theta");
      return rep;
    }
  for (int i = 0; i < theta; ++i) {
    if (!G.valid_element(d.g[i])) {
      fail("generator g_" + std::to_string(i + 1) + " is not a valid group element");
      return rep;
    }
    if (!G.valid_character(d.chi[i])) {
      fail("character chi_" + std::to_string(i + 1) + " is not a valid character");
      return rep;
    }
  }

  long long N = G.exponent();

  // r_i > 1
  std::vector<long long> r(theta);
  for (int i = 0; i < theta; ++i) {
    long long k = G.char_eval_exp(d.chi[i], d.g[i]);
    r[i] = N / gcd_ll(N, k);
    if (r[i] <= 1)
      fail("chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) +
           ") has order 1; need order > 1");
  }

  // quantum linear space condition chi_i(g_j) chi_j(g_i) = 1
  for (int i = 0; i < theta; ++i)
    for (int j = i + 1; j < theta; ++j) {
      long long kij = G.char_eval_exp(d.chi[i], d.g[j]);
      long long kji = G.char_eval_exp(d.chi[j], d.g[i]);
      if ((kij + kji) % N != 0) {
        std::ostringstream os;
        os << "quantum linear space condition fails for pair (" << i + 1 << "," << j + 1
           << "): chi_" << i + 1 << "(g_" << j + 1 << ") chi_" << j + 1 << "(g_" << i + 1
           << ") = z^" << (kij + kji) % N << " != 1";
        fail(os.str());
      }
    }

  // diagonal constraints
  for (int i = 0; i < theta; ++i) {
    const CycNum& aii = d.alpha[i][i];
    if (opts.require_unit_diagonal && !aii.is_zero() && !aii.is_one()) {
      fail("alpha_" + std::to_string(i + 1) + std::to_string(i + 1) + " must be 0 or 1, got " +
           scalar_str(aii));
    }
    bool g_power_trivial = G.scale(r[i], d.g[i]) == G.identity();
    bool chi_power_trivial = G.char_pow(d.chi[i], r[i]) == G.trivial_character();
    if (!aii.is_zero() && (g_power_trivial || !chi_power_trivial)) {
      std::ostringstream os;
      os << "alpha_" << i + 1 << i + 1 << " must vanish: ";
      if (g_power_trivial)
        os << "g_" << i + 1 << "^" << r[i] << " = 1";
      else
        os << "chi_" << i + 1 << "^" << r[i] << " != epsilon";
      fail(os.str());
    }
  }

  // off-diagonal constraints and antisymmetry
  for (int i = 0; i < theta; ++i)
    for (int j = 0; j < theta; ++j) {
      if (i == j) continue;
      const CycNum& aij = d.alpha[i][j];
      bool prod_trivial = G.add(d.g[i], d.g[j]) == G.identity();
      bool chi_prod_trivial = G.char_mul(d.chi[i], d.chi[j]) == G.trivial_character();
      if (!aij.is_zero() && (prod_trivial || !chi_prod_trivial)) {
        std::ostringstream os;
        os << "alpha_" << i + 1 << j + 1 << " must vanish: ";
        if (prod_trivial)
          os << "g_" << i + 1 << " g_" << j + 1 << " = 1";
        else
          os << "chi_" << i + 1 << " chi_" << j + 1 << " != epsilon";
        fail(os.str());
      }
      if (i < j) {
        CycNum expected = -(char_value(G, d.chi[i], d.g[j]) * aij);
        if (d.alpha[j][i] != expected) {
          std::ostringstream os;
          os << "antisymmetry fails for pair (" << i + 1 << "," << j + 1 << "): alpha_" << j + 1
             << i + 1 << " = " << scalar_str(d.alpha[j][i]) << ", expected -chi_" << i + 1 << "(g_"
             << j + 1 << ") alpha_" << i + 1 << j + 1 << " = " << scalar_str(expected);
          fail(os.str());
        }
      }
    }

  if (!rep.issues.empty()) return rep;

  ValidatedDatum v;
  v.datum = d;
  v.r = r;
  v.q = char_value(G, d.chi[0], d.g[0]);
  v.w = theta >= 2 ? char_value(G, d.chi[1], d.g[0]) : CycNum::one();
  v.dim_A = G.order();
  for (int i = 0; i < theta; ++i) v.dim_A *= r[i];
  v.lambda = compute_lambda(G, d.chi);
  v.lambda_dual = subgroup_dual(G, v.lambda);

  // nu != 0 forces chi_1 chi_2 = epsilon, hence r = s
  if (theta == 2 && !d.alpha[0][1].is_zero() && r[0] != r[1])
    throw std::logic_error("validate_datum: nu != 0 but r != s (internal inconsistency)");

  // g_j^{r_j} central: must land in Lambda under the stated hypotheses
  for (int j = 0; j < theta; ++j) {
    bool chi_power_trivial = G.char_pow(d.chi[j], r[j]) == G.trivial_character();
    bool all_products_trivial = true;
    for (int i = 0; i < theta; ++i)
      if (i != j && G.char_mul(d.chi[i], d.chi[j]) != G.trivial_character())
        all_products_trivial = false;
    if ((chi_power_trivial || all_products_trivial) &&
        !v.lambda.contains(G.scale(r[j], d.g[j]))) {
      fail("g_" + std::to_string(j + 1) + "^" + std::to_string(r[j]) +
           " should lie in Lambda but does not");
    }
  }
  if (!rep.issues.empty()) return rep;

  rep.ok = true;
  rep.validated = std::move(v);
  return rep;
}

SectorData classify_sector(const ValidatedDatum& v, const SubgroupChar& xi) {
  const FinAbGroup& G = v.datum.group;
  const Subgroup& lam = v.lambda;
  long long N = G.exponent();
  int theta = v.datum.theta;

  SectorData s;
  s.xi = xi;
  s.fiber = fiber(G, lam, xi);
  s.dim = G.order();
  for (long long ri : v.r) s.dim *= ri;
  s.dim /= lam.order();

  auto xi_value = [&](const GroupElement& g) {
    return CycNum::root_of_unity(N, subgroup_char_eval(lam, xi, g));
  };

  if (theta > 2) {
    s.tag = CaseTag::OracleOnly;
    return s;
  }

  auto power_scalar = [&](int i) {
    // alpha_ii (xi(g_i^{r_i}) - 1); zero alpha_ii short-circuits, otherwise
    // membership of g_i^{r_i} in Lambda is guaranteed by validation
    const CycNum& aii = v.datum.alpha[i][i];
    if (aii.is_zero()) return CycNum::zero();
    GroupElement p = G.scale(v.r[i], v.datum.g[i]);
    return aii * (xi_value(p) - CycNum::one());
  };

  if (theta == 1) {
    s.r = v.r[0];
    s.s = 1;
    s.q = v.q;
    s.w = CycNum::one();
    s.alpha = power_scalar(0);
    s.beta = CycNum::zero();
    s.nu = CycNum::zero();
    s.nu_term_vanishes = true;
    s.tag = s.alpha.is_zero() ? CaseTag::I : CaseTag::II;
    return s;
  }

  CycNum a = power_scalar(0);
  CycNum b = power_scalar(1);
  CycNum nu = v.datum.alpha[0][1];

  GroupElement g1g2 = G.add(v.datum.g[0], v.datum.g[1]);
  bool g1g2_central = lam.contains(g1g2);
  std::optional<CycNum> nu_eff;
  if (g1g2_central) nu_eff = nu * (xi_value(g1g2) - CycNum::one());
  bool term_vanishes;
  if (nu.is_zero()) {
    term_vanishes = true;
  } else if (g1g2_central) {
    term_vanishes = nu_eff->is_zero();
  } else {
    term_vanishes = false;
  }

  bool need_swap = a.is_zero() && !b.is_zero();
  if (!need_swap) {
    s.swapped = false;
    s.alpha = a;
    s.beta = b;
    s.nu = nu;
    s.nu_effective = nu_eff;
    s.q = v.q;
    s.w = v.w;
    s.r = v.r[0];
    s.s = v.r[1];
  } else {
    // exchange the generator pairs; the transposed lifting matrix has
    // nu' = alpha_21 = -chi_1(g_2) alpha_12
    s.swapped = true;
    s.alpha = b;
    s.beta = a;
    s.nu = v.datum.alpha[1][0];
    if (nu_eff) s.nu_effective = s.nu * (xi_value(g1g2) - CycNum::one());
    s.q = CycNum::root_of_unity(N, G.char_eval_exp(v.datum.chi[1], v.datum.g[1]));
    s.w = CycNum::root_of_unity(N, G.char_eval_exp(v.datum.chi[0], v.datum.g[1]));
    s.r = v.r[1];
    s.s = v.r[0];
  }
  s.nu_term_vanishes = term_vanishes;

  bool has_a = !s.alpha.is_zero();
  bool has_b = !s.beta.is_zero();
  if (term_vanishes) {
    if (!has_a && !has_b)
      s.tag = CaseTag::I;
    else if (has_a && !has_b)
      s.tag = CaseTag::II;
    else
      s.tag = CaseTag::III;
  } else {
    if (!has_a && !has_b)
      s.tag = CaseTag::IV;
    else if (has_a && !has_b)
      s.tag = CaseTag::V;
    else
      s.tag = CaseTag::VI;
  }
  return s;
}

std::vector<SectorData> sectors(const ValidatedDatum& v) {
  std::vector<SectorData> out;
  long long idx = 0;
  for (const auto& xi : v.lambda_dual) {
    SectorData s = classify_sector(v, xi);
    s.index = idx++;
    out.push_back(std::move(s));
  }
  return out;
}

ValidatedDatum swapped_datum(const ValidatedDatum& v) {
  if (v.datum.theta != 2) throw std::invalid_argument("swapped_datum: theta must be 2");
  LiftingDatum d;
  d.group = v.datum.group;
  d.theta = 2;
  d.g = {v.datum.g[1], v.datum.g[0]};
  d.chi = {v.datum.chi[1], v.datum.chi[0]};
  d.alpha = {{v.datum.alpha[1][1], v.datum.alpha[1][0]},
             {v.datum.alpha[0][1], v.datum.alpha[0][0]}};
  ValidationOptions opts;
  opts.require_unit_diagonal = false;  // diagonal is a permutation of the original
  auto rep = validate_datum(d, opts);
  if (!rep.ok) throw std::logic_error("swapped_datum: swapped datum failed validation");
  return *rep.validated;
}

}  // namespace qpr
