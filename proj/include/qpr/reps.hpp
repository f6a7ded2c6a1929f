#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qpr/algebra.hpp"
#include "qpr/cycpoly.hpp"
#include "qpr/embedding.hpp"
#include "qpr/lifting.hpp"
#include "qpr/matrixrep.hpp"
#include "qpr/polymod.hpp"
#include "qpr/roots.hpp"

namespace qpr {

// builder/oracle disagreement; both sides are carried in the message
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// scalars c_0, c_1, ... governing the y-action on string modules
struct CSequence {
  CycNum c0;
  Character eta;
  std::vector<CycNum> values;  // length len + 1
};

// raw recursion c_i = q (c_{i-1} + nu - nu q^{2(i-1)} eta_g1g2)
std::vector<CycNum> c_recursion(const CycNum& c0, const CycNum& q, const CycNum& nu,
                                const CycNum& eta_g1g2, long long len);

// closed form c_i = q^i c0 + q (i)_q nu (1 - q^{i-1} eta_g1g2), i > 0
CycNum c_closed_form(const CycNum& c0, const CycNum& q, const CycNum& nu, const CycNum& eta_g1g2,
                     long long i);

// sequence attached to eta in a sector (requires chi_1 chi_2 = epsilon when
// nu != 0; v must be in builder orientation)
CSequence c_sequence(const CycNum& c0, const Character& eta, const ValidatedDatum& v,
                     const SectorData& s, long long len);

struct IrrepDescriptor {
  CaseTag tag = CaseTag::I;
  Character eta;
  long long dim = 0;
  std::optional<MatrixRep> rep;                          // exact matrices
  std::optional<GenMatrices<ComplexApprox>> rep_numeric;  // Case VI roots / numeric fallback
  std::optional<CycNum> c_exact;
  std::optional<ComplexApprox> c_numeric;
  std::optional<long long> n_cut;      // Case IV module length N
  int extension_index = -1;            // Case III: index of the chosen y^d-extension
};

// the shift module W(eta): x cycles the basis with wrap factor alpha,
// h_u acts by (eta chi_1^i)(h_u); y = 0 unless cvals supplies the string action
MatrixRep shift_module(const ValidatedDatum& v, const SectorData& s, const Character& eta,
                       const std::vector<CycNum>* cvals);

std::vector<IrrepDescriptor> build_case_I(const ValidatedDatum& v, const SectorData& s);
IrrepDescriptor build_case_II(const ValidatedDatum& v, const SectorData& s, const Character& eta);
IrrepDescriptor build_case_IV(const ValidatedDatum& v, const SectorData& s, const Character& eta);
IrrepDescriptor build_case_V(const ValidatedDatum& v, const SectorData& s, const Character& eta);

// P(c) = prod_i c_i(c) - alpha beta, an exact degree-r polynomial in c = c_0;
// its roots are the admissible starting scalars for the y-string on W(eta)
CycPoly case_VI_polynomial(const ValidatedDatum& v, const SectorData& s, const Character& eta);

struct CaseVIOrbitBuild {
  Character eta;  // orbit representative
  CycPoly polynomial;
  bool squarefree = true;
  CycPoly squarefree_part;
  std::shared_ptr<const PolyMod::Ctx> ctx;
  GenMatrices<PolyMod> quotient_rep;  // covers every root of the squarefree part at once
  std::vector<IrrepDescriptor> root_reps;  // numeric matrices, one per distinct root
  bool roots_converged = true;
};

CaseVIOrbitBuild build_case_VI(const ValidatedDatum& v, const SectorData& s, const Character& eta,
                               long precision);

struct CaseIIIBuild {
  std::vector<IrrepDescriptor> reps;
  bool exact = true;  // false when an extension scalar forced the numeric fallback
};

// Clifford procedure: B(xi)-classes, Y-orbits, intertwiner extension of the
// stabilizer action, induction; cross-checked against the oracle when given
CaseIIIBuild build_case_III(const ValidatedDatum& v, const SectorData& s,
                            const StructureAlgebra* oracle, long precision);

struct IsoClassResult {
  std::vector<IrrepDescriptor> classes;
  std::vector<long long> class_of_input;  // input index -> class index
  long long hom_checks = 0;
};

// deduplicate built modules by the shift criteria, each merge/non-merge
// confirmed by an exact intertwiner computation (cases I, II, IV, V)
IsoClassResult iso_classes(const ValidatedDatum& v, const SectorData& s,
                           const std::vector<IrrepDescriptor>& reps);

struct RepOptions {
  long precision = 128;
  const StructureAlgebra* oracle = nullptr;  // enables the Case III cross-check
};

struct SectorIrreps {
  SectorData sector;
  std::vector<IrrepDescriptor> built;    // everything constructed (pre-dedup)
  std::vector<IrrepDescriptor> classes;  // isomorphism class representatives
  std::vector<CaseVIOrbitBuild> vi_orbits;
  bool exceptional = false;  // Case VI polynomial with repeated roots
  bool exact = true;
};

// classify-and-build driver for one sector; handles the x<->y swap so that
// every returned matrix is in the orientation of the original datum
SectorIrreps build_sector_irreps(const ValidatedDatum& v, const SectorData& s,
                                 const RepOptions& opts);

}  // namespace qpr
