#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpr/cyclotomic.hpp"
#include "qpr/groups.hpp"

namespace qpr {

// Input datum for a lifting of a quantum linear space: the group, the
// generator/character pairs (g_i, chi_i) and the lifting matrix (alpha_ij).
struct LiftingDatum {
  FinAbGroup group;
  int theta = 0;
  std::vector<GroupElement> g;
  std::vector<Character> chi;
  std::vector<std::vector<CycNum>> alpha;  // theta x theta
};

enum class CaseTag { I, II, III, IV, V, VI, OracleOnly };

std::string to_string(CaseTag tag);

struct ValidationOptions {
  // the presentation fixes alpha_ii in {0,1}; the classification machinery
  // itself only cares about vanishing, so rescaling tests may relax this
  bool require_unit_diagonal = true;
};

struct ValidatedDatum {
  LiftingDatum datum;
  std::vector<long long> r;  // r_i = order of chi_i(g_i)
  CycNum q;                  // chi_1(g_1)
  CycNum w;                  // chi_2(g_1) when theta >= 2, else 1
  long long dim_A = 0;       // |Gamma| r_1 ... r_theta
  Subgroup lambda;
  std::vector<SubgroupChar> lambda_dual;
};

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> issues;
  std::optional<ValidatedDatum> validated;
};

ValidationReport validate_datum(const LiftingDatum& d, const ValidationOptions& opts = {});

// Per-sector record.  For theta = 2 the scalar fields are stated in builder
// orientation: if `swapped` is set, the roles of (x, g_1, chi_1, r) and
// (y, g_2, chi_2, s) have been exchanged so that the nonvanishing power
// relation sits on x.
struct SectorData {
  long long index = 0;
  SubgroupChar xi;
  CaseTag tag = CaseTag::OracleOnly;
  bool swapped = false;
  CycNum alpha;  // alpha_11 (xi(g_1^r) - 1)
  CycNum beta;   // alpha_22 (xi(g_2^s) - 1)
  CycNum nu;     // alpha_12
  std::optional<CycNum> nu_effective;  // nu (xi(g_1 g_2) - 1) when g_1 g_2 in Lambda
  bool nu_term_vanishes = true;
  CycNum q, w;
  long long r = 1, s = 1;
  long long dim = 0;  // |Gamma| r s / |Lambda|
  std::vector<Character> fiber;
};

// one SectorData per element of the dual of Lambda (theta <= 2 gets a case
// tag; theta > 2 is tagged OracleOnly)
std::vector<SectorData> sectors(const ValidatedDatum& v);

SectorData classify_sector(const ValidatedDatum& v, const SubgroupChar& xi);

// datum with generator pairs 1 and 2 exchanged and the lifting matrix
// transposed (theta = 2 only); used to feed builders on swapped sectors
ValidatedDatum swapped_datum(const ValidatedDatum& v);

}  // namespace qpr
