#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpr/embedding.hpp"
#include "qpr/lifting.hpp"
#include "qpr/matrixrep.hpp"
#include "qpr/polymod.hpp"

namespace qpr {

// Basis label of the sector algebra A(xi): x_1^{a_1} ... x_theta^{a_theta} gbar,
// 0 <= a_i < r_i, gbar ranging over coset representatives of Gamma/Lambda.
struct BasisLabel {
  std::vector<int> xexp;
  long long coset = 0;
};

// A(xi) presented by basis and structure constants, built from the defining
// relations through a terminating rewriting system (misordered pairs first,
// then power collapses, then group reduction modulo Lambda with a xi-scalar).
class StructureAlgebra {
 public:
  StructureAlgebra(const ValidatedDatum& v, const SubgroupChar& xi);

  long long dim() const { return dim_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  long long unit_index() const { return unit_; }
  const std::vector<GroupElement>& coset_reps() const { return coset_reps_; }

  using SparseVec = std::vector<std::pair<long long, CycNum>>;  // sorted by index

  // structure constants of basis_u * basis_v
  const SparseVec& product(long long u, long long v) const {
    return table_[static_cast<size_t>(u * dim_ + v)];
  }

  std::vector<CycNum> mul(const std::vector<CycNum>& a, const std::vector<CycNum>& b) const;
  Mat<CycNum> left_mult_matrix(long long u) const;
  Mat<CycNum> trace_gram() const;  // G[u][v] = tr(L_u L_v)

  long long index_of(const BasisLabel& label) const;

  // index of the basis element representing grouplike g (xexp = 0), plus the
  // xi-scalar picked up when reducing g to its coset representative
  std::pair<long long, CycNum> reduce_grouplike(const GroupElement& g) const;

 private:
  const FinAbGroup group_;
  ValidatedDatum v_;
  SubgroupChar xi_;
  long long dim_ = 0;
  long long ncosets_ = 0;
  long long unit_ = 0;
  std::vector<BasisLabel> basis_;
  std::vector<GroupElement> coset_reps_;
  std::map<GroupElement, std::pair<long long, GroupElement>> coset_of_;  // g -> (idx, lambda part)
  std::vector<SparseVec> table_;

  SparseVec multiply_labels(const BasisLabel& lu, const BasisLabel& lv) const;
};

struct RadicalInfo {
  long long dim = 0;
  std::vector<std::vector<CycNum>> basis;  // coordinates on the algebra basis
};

// Jacobson radical as the kernel of the trace Gram form (characteristic 0)
RadicalInfo radical(const StructureAlgebra& A);

bool check_associativity_exhaustive(const StructureAlgebra& A);
bool check_associativity_sampled(const StructureAlgebra& A, std::uint64_t seed, int samples);

// exhaustive up to dimension 80, 10^4 seeded triples beyond
bool check_associativity(const StructureAlgebra& A, std::uint64_t seed);

struct RelationCheckResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::string worst_residual;  // numeric mode only
};

// All defining relations of A(xi) as matrix identities, exact scalars
RelationCheckResult verify_relations(const MatrixRep& rep, const ValidatedDatum& v,
                                     const SubgroupChar& xi);
// same over the quotient ring Q(zeta)[c]/(S)
RelationCheckResult verify_relations_polymod(const GenMatrices<PolyMod>& rep,
                                             const ValidatedDatum& v, const SubgroupChar& xi,
                                             const std::shared_ptr<const PolyMod::Ctx>& ctx);
// numeric embedding, residuals below tolerance
RelationCheckResult verify_relations_numeric(const GenMatrices<ComplexApprox>& rep,
                                             const ValidatedDatum& v, const SubgroupChar& xi,
                                             const BigFloat& tolerance);

struct HomInfo {
  long long dim = 0;
  std::vector<Mat<CycNum>> basis;  // intertwiners T with T rho_V = rho_W T
};

HomInfo hom_space(const MatrixRep& V, const MatrixRep& W);
long long hom_dim(const MatrixRep& V, const MatrixRep& W);
bool is_irreducible(const MatrixRep& V);  // End dimension exactly 1

long long hom_dim_numeric(const GenMatrices<ComplexApprox>& V, const GenMatrices<ComplexApprox>& W,
                          const BigFloat& tolerance);

struct CompletenessResult {
  bool pass = false;
  long long sum_of_squares = 0;
  long long semisimple_quotient_dim = 0;  // dim A - dim J
};

// Wedderburn accounting: sum of squared class dimensions against d - dim J
CompletenessResult completeness_check(long long algebra_dim, long long radical_dim,
                                      const std::vector<long long>& class_dims);

struct IdempotentCheckResult {
  bool pass = true;
  std::vector<std::string> failures;
};

// e_xi = |Lambda|^-1 sum xi(g)^-1 g: idempotent, orthogonal, complete, and
// compatible with the hit action e_eta <- xi = e_{xi^-1 eta}
IdempotentCheckResult idempotent_check(const ValidatedDatum& v);

// numeric nullity with a pivot threshold (for Case VI intertwiners)
long long numeric_nullity(Mat<ComplexApprox> m, const BigFloat& tolerance);

}  // namespace qpr
