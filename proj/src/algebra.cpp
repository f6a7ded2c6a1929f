#include "qpr/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpr/rng.hpp"

namespace qpr {

namespace {

CycNum root(long long n, long long k) { return CycNum::root_of_unity(n, k); }

// one rewriting state: coeff * x_{word[0]} ... x_{word[m-1]} * grp
struct RwTerm {
  CycNum coeff;
  std::vector<int> word;
  GroupElement grp;
};

}  // namespace

StructureAlgebra::StructureAlgebra(const ValidatedDatum& v, const SubgroupChar& xi)
    : group_(v.datum.group), v_(v), xi_(xi) {
  const FinAbGroup& G = group_;
  const Subgroup& lam = v_.lambda;

  // coset representatives: walking Gamma in lexicographic order, the first
  // element seen in each coset is its lex-smallest representative
  for (const auto& g : G.all_elements()) {
    if (coset_of_.count(g)) continue;
    long long idx = static_cast<long long>(coset_reps_.size());
    coset_reps_.push_back(g);
    for (const auto& l : lam.members) {
      GroupElement gl = G.add(g, l);
      coset_of_.emplace(gl, std::make_pair(idx, l));
    }
  }
  ncosets_ = static_cast<long long>(coset_reps_.size());

  dim_ = ncosets_;
  for (long long ri : v_.r) dim_ *= ri;

  // basis enumeration nests exponents outermost, cosets innermost, matching
  // index_of
  int theta = v_.datum.theta;
  std::vector<int> exps(theta, 0);
  while (true) {
    for (long long c = 0; c < ncosets_; ++c) basis_.push_back(BasisLabel{exps, c});
    int i = theta;
    bool done = false;
    while (i > 0) {
      --i;
      if (++exps[i] < v_.r[i]) break;
      exps[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  if (static_cast<long long>(basis_.size()) != dim_)
    throw std::logic_error("StructureAlgebra: basis enumeration mismatch");

  unit_ = index_of(BasisLabel{std::vector<int>(theta, 0), coset_of_.at(G.identity()).first});

  table_.resize(static_cast<size_t>(dim_ * dim_));
  for (long long u = 0; u < dim_; ++u)
    for (long long w = 0; w < dim_; ++w)
      table_[static_cast<size_t>(u * dim_ + w)] = multiply_labels(basis_[u], basis_[w]);
}

long long StructureAlgebra::index_of(const BasisLabel& label) const {
  long long idx = 0;
  for (size_t i = 0; i < label.xexp.size(); ++i) idx = idx * v_.r[i] + label.xexp[i];
  return idx * ncosets_ + label.coset;
}

std::pair<long long, CycNum> StructureAlgebra::reduce_grouplike(const GroupElement& g) const {
  auto [coset, lambda_part] = coset_of_.at(g);
  long long val = subgroup_char_eval(v_.lambda, xi_, lambda_part);
  long long idx = index_of(BasisLabel{std::vector<int>(v_.datum.theta, 0), coset});
  return {idx, root(group_.exponent(), val)};
}

StructureAlgebra::SparseVec StructureAlgebra::multiply_labels(const BasisLabel& lu,
                                                              const BasisLabel& lv) const {
  const FinAbGroup& G = group_;
  const long long N = G.exponent();
  const int theta = v_.datum.theta;
  const GroupElement& gu = coset_reps_[lu.coset];
  const GroupElement& gv = coset_reps_[lv.coset];

  // (x^a gu)(x^b gv) = prod_i chi_i(gu)^{b_i} * x^a x^b (gu + gv)
  RwTerm init;
  long long k = 0;
  for (int i = 0; i < theta; ++i)
    k += G.char_eval_exp(v_.datum.chi[i], gu) * lv.xexp[i];
  init.coeff = root(N, k % N);
  for (int i = 0; i < theta; ++i)
    init.word.insert(init.word.end(), static_cast<size_t>(lu.xexp[i]), i);
  for (int i = 0; i < theta; ++i)
    init.word.insert(init.word.end(), static_cast<size_t>(lv.xexp[i]), i);
  init.grp = G.add(gu, gv);

  std::vector<CycNum> dense(static_cast<size_t>(dim_), CycNum::zero());
  std::vector<RwTerm> stack{std::move(init)};
  long long steps = 0;
  const long long step_cap = 2000000;  // termination is guaranteed post-validation

  // pushes a grouplike through the suffix word[from..): picks up the product
  // of chi_l over the letters
  auto push_through = [&](const std::vector<int>& word, size_t from, const GroupElement& g) {
    long long acc = 0;
    for (size_t i = from; i < word.size(); ++i) acc += G.char_eval_exp(v_.datum.chi[word[i]], g);
    return root(N, acc % N);
  };

  while (!stack.empty()) {
    if (++steps > step_cap)
      throw std::runtime_error(
          "StructureAlgebra: rewriting exceeded the iteration cap (datum violates the "
          "presentation)");
    RwTerm t = std::move(stack.back());
    stack.pop_back();
    if (t.coeff.is_zero()) continue;

    // leftmost misordered adjacent pair
    size_t inv = t.word.size();
    for (size_t i = 0; i + 1 < t.word.size(); ++i) {
      if (t.word[i] > t.word[i + 1]) {
        inv = i;
        break;
      }
    }
    if (inv < t.word.size()) {
      int j = t.word[inv], i = t.word[inv + 1];  // j > i
      // x_j x_i = chi_i(g_j) x_i x_j + alpha_ji (g_i g_j - 1)
      RwTerm swapped = t;
      std::swap(swapped.word[inv], swapped.word[inv + 1]);
      swapped.coeff = t.coeff * root(N, G.char_eval_exp(v_.datum.chi[i], v_.datum.g[j]));
      stack.push_back(std::move(swapped));

      const CycNum& aji = v_.datum.alpha[j][i];
      if (!aji.is_zero()) {
        std::vector<int> shorter;
        shorter.reserve(t.word.size() - 2);
        shorter.insert(shorter.end(), t.word.begin(), t.word.begin() + inv);
        shorter.insert(shorter.end(), t.word.begin() + inv + 2, t.word.end());
        GroupElement gg = G.add(v_.datum.g[i], v_.datum.g[j]);

        RwTerm with_group;
        with_group.coeff = t.coeff * aji * push_through(shorter, inv, gg);
        with_group.word = shorter;
        with_group.grp = G.add(t.grp, gg);
        stack.push_back(std::move(with_group));

        RwTerm without;
        without.coeff = -(t.coeff * aji);
        without.word = std::move(shorter);
        without.grp = t.grp;
        stack.push_back(std::move(without));
      }
      continue;
    }

    // word is sorted: collapse the leftmost run reaching r_i
    size_t run_start = t.word.size();
    long long run_r = 0;
    {
      size_t i = 0;
      while (i < t.word.size()) {
        size_t j = i;
        while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
        long long need = v_.r[t.word[i]];
        if (static_cast<long long>(j - i) >= need) {
          run_start = i;
          run_r = need;
          break;
        }
        i = j;
      }
    }
    if (run_start < t.word.size()) {
      int i = t.word[run_start];
      // x_i^{r_i} = alpha_ii (g_i^{r_i} - 1)
      const CycNum& aii = v_.datum.alpha[i][i];
      if (!aii.is_zero()) {
        std::vector<int> shorter;
        shorter.insert(shorter.end(), t.word.begin(), t.word.begin() + run_start);
        shorter.insert(shorter.end(), t.word.begin() + run_start + run_r, t.word.end());
        GroupElement gg = G.scale(run_r, v_.datum.g[i]);

        RwTerm with_group;
        with_group.coeff = t.coeff * aii * push_through(shorter, run_start, gg);
        with_group.word = shorter;
        with_group.grp = G.add(t.grp, gg);
        stack.push_back(std::move(with_group));

        RwTerm without;
        without.coeff = -(t.coeff * aii);
        without.word = std::move(shorter);
        without.grp = t.grp;
        stack.push_back(std::move(without));
      }
      continue;
    }

    // terminal: sorted word with all exponents < r_i; reduce the group part
    BasisLabel label;
    label.xexp.assign(theta, 0);
    for (int letter : t.word) ++label.xexp[letter];
    auto [coset, lambda_part] = coset_of_.at(t.grp);
    label.coset = coset;
    CycNum scalar = root(N, subgroup_char_eval(v_.lambda, xi_, lambda_part));
    dense[static_cast<size_t>(index_of(label))] += t.coeff * scalar;
  }

  SparseVec out;
  for (long long i = 0; i < dim_; ++i)
    if (!dense[static_cast<size_t>(i)].is_zero())
      out.emplace_back(i, dense[static_cast<size_t>(i)]);
  return out;
}

std::vector<CycNum> StructureAlgebra::mul(const std::vector<CycNum>& a,
                                          const std::vector<CycNum>& b) const {
  std::vector<CycNum> out(static_cast<size_t>(dim_), CycNum::zero());
  for (long long u = 0; u < dim_; ++u) {
    if (a[static_cast<size_t>(u)].is_zero()) continue;
    for (long long w = 0; w < dim_; ++w) {
      if (b[static_cast<size_t>(w)].is_zero()) continue;
      CycNum c = a[static_cast<size_t>(u)] * b[static_cast<size_t>(w)];
      for (const auto& [idx, s] : product(u, w)) out[static_cast<size_t>(idx)] += c * s;
    }
  }
  return out;
}

Mat<CycNum> StructureAlgebra::left_mult_matrix(long long u) const {
  Mat<CycNum> m(dim_, dim_);
  for (long long w = 0; w < dim_; ++w)
    for (const auto& [idx, s] : product(u, w)) m(idx, w) = s;
  return m;
}

Mat<CycNum> StructureAlgebra::trace_gram() const {
  Mat<CycNum> gram(dim_, dim_);
  auto lookup = [&](long long u, long long f, long long e) -> const CycNum* {
    const SparseVec& row = product(u, f);
    auto it = std::lower_bound(row.begin(), row.end(), e,
                               [](const auto& p, long long key) { return p.first < key; });
    if (it != row.end() && it->first == e) return &it->second;
    return nullptr;
  };
  for (long long u = 0; u < dim_; ++u) {
    for (long long w = u; w < dim_; ++w) {
      CycNum acc = CycNum::zero();
      // tr(L_u L_w) = sum_e coeff_e(u * (w * e))
      for (long long e = 0; e < dim_; ++e) {
        for (const auto& [f, c] : product(w, e)) {
          if (const CycNum* s = lookup(u, f, e)) acc += c * (*s);
        }
      }
      gram(u, w) = acc;
      gram(w, u) = acc;
    }
  }
  return gram;
}

RadicalInfo radical(const StructureAlgebra& A) {
  Mat<CycNum> gram = A.trace_gram();
  // clear rational denominators rowwise; kernel is unchanged
  for (long long i = 0; i < gram.rows(); ++i) {
    BigInt l(1);
    for (long long j = 0; j < gram.cols(); ++j)
      for (const auto& c : gram(i, j).coeffs())
        l = BigInt(lcm(l, c.get_den()));
    if (l != 1) {
      CycNum f{Rational(l)};
      for (long long j = 0; j < gram.cols(); ++j) gram(i, j) *= f;
    }
  }
  RadicalInfo info;
  info.basis = exact_nullspace(gram, CycNum::one());
  info.dim = static_cast<long long>(info.basis.size());
  return info;
}

namespace {

bool triple_associates(const StructureAlgebra& A, long long u, long long v, long long w) {
  std::vector<CycNum> lhs(static_cast<size_t>(A.dim()), CycNum::zero());
  std::vector<CycNum> rhs(static_cast<size_t>(A.dim()), CycNum::zero());
  for (const auto& [f, c] : A.product(u, v))
    for (const auto& [e, s] : A.product(f, w)) lhs[static_cast<size_t>(e)] += c * s;
  for (const auto& [f, c] : A.product(v, w))
    for (const auto& [e, s] : A.product(u, f)) rhs[static_cast<size_t>(e)] += c * s;
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i]) return false;
  return true;
}

}  // namespace

bool check_associativity_exhaustive(const StructureAlgebra& A) {
  for (long long u = 0; u < A.dim(); ++u)
    for (long long v = 0; v < A.dim(); ++v)
      for (long long w = 0; w < A.dim(); ++w)
        if (!triple_associates(A, u, v, w)) return false;
  return true;
}

bool check_associativity_sampled(const StructureAlgebra& A, std::uint64_t seed, int samples) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    long long u = static_cast<long long>(rng.below(static_cast<std::uint64_t>(A.dim())));
    long long v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(A.dim())));
    long long w = static_cast<long long>(rng.below(static_cast<std::uint64_t>(A.dim())));
    if (!triple_associates(A, u, v, w)) return false;
  }
  return true;
}

bool check_associativity(const StructureAlgebra& A, std::uint64_t seed) {
  if (A.dim() <= 80) return check_associativity_exhaustive(A);
  return check_associativity_sampled(A, seed, 10000);
}

// ---------------------------------------------------------------------------
// relation verification

namespace {

// greedy generating set: members not in the closure of the previous picks
std::vector<GroupElement> subgroup_generators(const FinAbGroup& G, const Subgroup& sub) {
  std::set<GroupElement> closure{G.identity()};
  std::vector<GroupElement> gens;
  for (const auto& m : sub.members) {
    if (closure.count(m)) continue;
    gens.push_back(m);
    std::set<GroupElement> next;
    long long om = G.element_order(m);
    for (const auto& c : closure)
      for (long long k = 0; k < om; ++k) next.insert(G.add(c, G.scale(k, m)));
    closure = std::move(next);
  }
  return gens;
}

struct ExactOps {
  long long level;
  CycNum embed(const CycNum& c) const { return c; }
  CycNum one() const { return CycNum::one(); }
  bool equal(const Mat<CycNum>& a, const Mat<CycNum>& b, std::string*) const { return a == b; }
};

struct PolyModOps {
  std::shared_ptr<const PolyMod::Ctx> ctx;
  PolyMod embed(const CycNum& c) const { return PolyMod::constant(ctx, c); }
  PolyMod one() const { return PolyMod::constant(ctx, CycNum::one()); }
  bool equal(const Mat<PolyMod>& a, const Mat<PolyMod>& b, std::string*) const { return a == b; }
};

struct NumericOps {
  long prec;
  BigFloat tolerance;
  mutable BigFloat worst = BigFloat(ComplexApprox::kErrPrec);
  ComplexApprox embed(const CycNum& c) const { return embed_cyclotomic(c, prec); }
  ComplexApprox one() const { return ComplexApprox::from_rational(Rational(1), prec); }
  bool equal(const Mat<ComplexApprox>& a, const Mat<ComplexApprox>& b, std::string* desc) const {
    BigFloat residual(ComplexApprox::kErrPrec);
    for (long long i = 0; i < a.rows(); ++i)
      for (long long j = 0; j < a.cols(); ++j) {
        BigFloat d = complex_distance(a(i, j), b(i, j));
        if (residual < d) residual = d;
      }
    if (worst < residual) worst = residual;
    if (desc) *desc = residual.to_string(8);
    return residual <= tolerance;
  }
};

template <class S, class Ops>
RelationCheckResult verify_impl(const GenMatrices<S>& rep, const ValidatedDatum& v,
                                const SubgroupChar& xi, const Ops& ops) {
  RelationCheckResult res;
  const FinAbGroup& G = v.datum.group;
  const long long N = G.exponent();
  const long long n = rep.dim;
  const int t = G.rank();
  Mat<S> id = Mat<S>::identity(n, ops.one());

  auto fail = [&res](const std::string& what, const std::string& residual) {
    res.pass = false;
    res.failures.push_back(residual.empty() ? what : what + " (residual " + residual + ")");
  };
  auto expect_equal = [&](const Mat<S>& a, const Mat<S>& b, const std::string& what) {
    std::string residual;
    if (!ops.equal(a, b, &residual)) fail(what, residual);
  };
  auto scalar = [&](const CycNum& c) { return ops.embed(c); };
  auto group_matrix = [&](const GroupElement& g) {
    Mat<S> m = id;
    for (int u = 0; u < t; ++u)
      if (g.e[u] != 0) m = m * rep.h[static_cast<size_t>(u)].pow(g.e[u], ops.one());
    return m;
  };

  // grouplike structure: h_u commute and have the right order
  for (int u = 0; u < t; ++u) {
    for (int l = u + 1; l < t; ++l)
      expect_equal(rep.h[u] * rep.h[l], rep.h[l] * rep.h[u],
                   "h_" + std::to_string(u + 1) + " h_" + std::to_string(l + 1) + " commute");
    expect_equal(rep.h[u].pow(G.invariant_factors()[u], ops.one()), id,
                 "h_" + std::to_string(u + 1) + " has order dividing a_u");
  }

  // central characters: g acts as xi(g) for a generating set of Lambda
  for (const auto& g : subgroup_generators(G, v.lambda)) {
    long long val = subgroup_char_eval(v.lambda, xi, g);
    expect_equal(group_matrix(g), id.scaled(scalar(root(N, val))),
                 "g = xi(g) for lambda generator " + to_string(g));
  }

  // skew commutation
  for (int u = 0; u < t; ++u) {
    GroupElement hu = G.identity();
    hu.e[u] = G.invariant_factors()[u] > 1 ? 1 : 0;
    S c1 = scalar(root(N, G.char_eval_exp(v.datum.chi[0], hu)));
    expect_equal(rep.h[u] * rep.x, (rep.x * rep.h[u]).scaled(c1),
                 "h_" + std::to_string(u + 1) + " x = chi_1(h) x h");
    if (rep.has_y()) {
      S c2 = scalar(root(N, G.char_eval_exp(v.datum.chi[1], hu)));
      expect_equal(rep.h[u] * rep.y, (rep.y * rep.h[u]).scaled(c2),
                   "h_" + std::to_string(u + 1) + " y = chi_2(h) y h");
    }
  }

  // power relations
  {
    Mat<S> xr = rep.x.pow(v.r[0], ops.one());
    Mat<S> target(n, n);
    if (!v.datum.alpha[0][0].is_zero())
      target = (group_matrix(G.scale(v.r[0], v.datum.g[0])) - id)
                   .scaled(scalar(v.datum.alpha[0][0]));
    expect_equal(xr, target, "x^r = alpha_11 (g_1^r - 1)");
  }
  if (rep.has_y()) {
    Mat<S> ys = rep.y.pow(v.r[1], ops.one());
    Mat<S> target(n, n);
    if (!v.datum.alpha[1][1].is_zero())
      target = (group_matrix(G.scale(v.r[1], v.datum.g[1])) - id)
                   .scaled(scalar(v.datum.alpha[1][1]));
    expect_equal(ys, target, "y^s = alpha_22 (g_2^s - 1)");
  }

  // mixed relation x y = chi_2(g_1) y x + nu (g_1 g_2 - 1)
  if (rep.has_y()) {
    S w = scalar(root(N, G.char_eval_exp(v.datum.chi[1], v.datum.g[0])));
    Mat<S> rhs = (rep.y * rep.x).scaled(w);
    if (!v.datum.alpha[0][1].is_zero()) {
      GroupElement g1g2 = G.add(v.datum.g[0], v.datum.g[1]);
      rhs = rhs + (group_matrix(g1g2) - id).scaled(scalar(v.datum.alpha[0][1]));
    }
    expect_equal(rep.x * rep.y, rhs, "x y = chi_2(g_1) y x + nu (g_1 g_2 - 1)");
  }

  return res;
}

}  // namespace

RelationCheckResult verify_relations(const MatrixRep& rep, const ValidatedDatum& v,
                                     const SubgroupChar& xi) {
  ExactOps ops{v.datum.group.exponent()};
  return verify_impl(rep, v, xi, ops);
}

RelationCheckResult verify_relations_polymod(const GenMatrices<PolyMod>& rep,
                                             const ValidatedDatum& v, const SubgroupChar& xi,
                                             const std::shared_ptr<const PolyMod::Ctx>& ctx) {
  PolyModOps ops{ctx};
  return verify_impl(rep, v, xi, ops);
}

RelationCheckResult verify_relations_numeric(const GenMatrices<ComplexApprox>& rep,
                                             const ValidatedDatum& v, const SubgroupChar& xi,
                                             const BigFloat& tolerance) {
  long prec = 0;
  for (const auto& h : rep.h)
    for (long long i = 0; i < h.rows(); ++i)
      for (long long j = 0; j < h.cols(); ++j) prec = std::max(prec, h(i, j).prec());
  if (prec == 0) prec = 128;
  NumericOps ops{prec, tolerance};
  RelationCheckResult res = verify_impl(rep, v, xi, ops);
  res.worst_residual = ops.worst.to_string(8);
  return res;
}

// ---------------------------------------------------------------------------
// hom spaces

namespace {

// rows of the intertwiner system for one generator pair (A_V, A_W):
// T A_V - A_W T = 0, T is nW x nV, unknown index p * nV + q
void append_intertwiner_rows(std::vector<std::vector<CycNum>>& rows, const Mat<CycNum>& av,
                             const Mat<CycNum>& aw) {
  long long nv = av.rows(), nw = aw.rows();
  for (long long i = 0; i < nw; ++i)
    for (long long j = 0; j < nv; ++j) {
      std::vector<CycNum> row(static_cast<size_t>(nw * nv), CycNum::zero());
      for (long long q = 0; q < nv; ++q) row[static_cast<size_t>(i * nv + q)] += av(q, j);
      for (long long p = 0; p < nw; ++p) row[static_cast<size_t>(p * nv + j)] -= aw(i, p);
      rows.push_back(std::move(row));
    }
}

}  // namespace

namespace {

bool all_h_diagonal(const MatrixRep& rep) {
  for (const auto& h : rep.h)
    for (long long i = 0; i < h.rows(); ++i)
      for (long long j = 0; j < h.cols(); ++j)
        if (i != j && !h(i, j).is_zero()) return false;
  return true;
}

}  // namespace

HomInfo hom_space(const MatrixRep& V, const MatrixRep& W) {
  if (V.has_y() != W.has_y()) throw std::invalid_argument("hom_space: generator sets differ");

  // Weight-module fast path: with every h-matrix diagonal, T h_V = h_W T
  // forces T[p][q] = 0 unless the weights at p and q agree, so only the
  // matched positions enter the linear system and the h-equations drop out.
  if (all_h_diagonal(V) && all_h_diagonal(W)) {
    std::vector<std::pair<long long, long long>> support;
    Mat<long long> slot(W.dim, V.dim, -1);
    for (long long p = 0; p < W.dim; ++p)
      for (long long q = 0; q < V.dim; ++q) {
        bool match = true;
        for (size_t u = 0; u < V.h.size(); ++u) {
          if (!(W.h[u](p, p) == V.h[u](q, q))) {
            match = false;
            break;
          }
        }
        if (match) {
          slot(p, q) = static_cast<long long>(support.size());
          support.emplace_back(p, q);
        }
      }

    std::vector<std::vector<CycNum>> rows;
    auto add_gen = [&](const Mat<CycNum>& av, const Mat<CycNum>& aw) {
      for (long long i = 0; i < W.dim; ++i)
        for (long long j = 0; j < V.dim; ++j) {
          std::vector<CycNum> row(support.size(), CycNum::zero());
          bool nonzero = false;
          for (long long q = 0; q < V.dim; ++q) {
            if (slot(i, q) < 0 || av(q, j).is_zero()) continue;
            row[static_cast<size_t>(slot(i, q))] += av(q, j);
            nonzero = true;
          }
          for (long long p = 0; p < W.dim; ++p) {
            if (slot(p, j) < 0 || aw(i, p).is_zero()) continue;
            row[static_cast<size_t>(slot(p, j))] -= aw(i, p);
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    };
    add_gen(V.x, W.x);
    if (V.has_y()) add_gen(V.y, W.y);

    Mat<CycNum> system(static_cast<long long>(rows.size()), static_cast<long long>(support.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < support.size(); ++j)
        system(static_cast<long long>(i), static_cast<long long>(j)) = rows[i][j];

    HomInfo info;
    auto null = support.empty() ? std::vector<std::vector<CycNum>>{}
                                : exact_nullspace(system, CycNum::one());
    info.dim = static_cast<long long>(null.size());
    for (const auto& vec : null) {
      Mat<CycNum> T(W.dim, V.dim);
      for (size_t k = 0; k < support.size(); ++k) T(support[k].first, support[k].second) = vec[k];
      info.basis.push_back(std::move(T));
    }
    return info;
  }

  std::vector<std::vector<CycNum>> rows;
  append_intertwiner_rows(rows, V.x, W.x);
  if (V.has_y()) append_intertwiner_rows(rows, V.y, W.y);
  for (size_t u = 0; u < V.h.size(); ++u) append_intertwiner_rows(rows, V.h[u], W.h[u]);

  Mat<CycNum> system(static_cast<long long>(rows.size()), V.dim * W.dim);
  for (size_t i = 0; i < rows.size(); ++i)
    for (long long j = 0; j < V.dim * W.dim; ++j)
      system(static_cast<long long>(i), j) = rows[i][static_cast<size_t>(j)];

  HomInfo info;
  auto null = exact_nullspace(system, CycNum::one());
  info.dim = static_cast<long long>(null.size());
  for (const auto& vec : null) {
    Mat<CycNum> T(W.dim, V.dim);
    for (long long p = 0; p < W.dim; ++p)
      for (long long q = 0; q < V.dim; ++q) T(p, q) = vec[static_cast<size_t>(p * V.dim + q)];
    info.basis.push_back(std::move(T));
  }
  return info;
}

long long hom_dim(const MatrixRep& V, const MatrixRep& W) { return hom_space(V, W).dim; }

bool is_irreducible(const MatrixRep& V) { return hom_dim(V, V) == 1; }

long long numeric_nullity(Mat<ComplexApprox> m, const BigFloat& tolerance) {
  long long rows = m.rows(), cols = m.cols();
  long long rank = 0, pr = 0;
  for (long long pc = 0; pc < cols && pr < rows; ++pc) {
    long long sel = -1;
    BigFloat best = tolerance;
    for (long long i = pr; i < rows; ++i) {
      BigFloat a = m(i, pc).abs_approx();
      if (best < a) {
        best = a;
        sel = i;
      }
    }
    if (sel < 0) continue;
    if (sel != pr)
      for (long long j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
    // eliminate below using midpoint complex division
    BigFloat pre = m(pr, pc).re(), pim = m(pr, pc).im();
    BigFloat pden = pre * pre + pim * pim;
    for (long long i = pr + 1; i < rows; ++i) {
      BigFloat are = m(i, pc).re(), aim = m(i, pc).im();
      BigFloat fre = (are * pre + aim * pim) / pden;
      BigFloat fim = (aim * pre - are * pim) / pden;
      ComplexApprox factor(fre, fim, BigFloat(ComplexApprox::kErrPrec));
      for (long long j = pc; j < cols; ++j) m(i, j) = m(i, j) - factor * m(pr, j);
    }
    ++rank;
    ++pr;
  }
  return cols - rank;
}

long long hom_dim_numeric(const GenMatrices<ComplexApprox>& V, const GenMatrices<ComplexApprox>& W,
                          const BigFloat& tolerance) {
  std::vector<Mat<ComplexApprox>> gens_v{V.x}, gens_w{W.x};
  if (V.has_y()) {
    gens_v.push_back(V.y);
    gens_w.push_back(W.y);
  }
  for (size_t u = 0; u < V.h.size(); ++u) {
    gens_v.push_back(V.h[u]);
    gens_w.push_back(W.h[u]);
  }
  long long nv = V.dim, nw = W.dim;
  Mat<ComplexApprox> system(static_cast<long long>(gens_v.size()) * nv * nw, nv * nw);
  long long row = 0;
  for (size_t g = 0; g < gens_v.size(); ++g) {
    const auto& av = gens_v[g];
    const auto& aw = gens_w[g];
    for (long long i = 0; i < nw; ++i)
      for (long long j = 0; j < nv; ++j) {
        for (long long q = 0; q < nv; ++q)
          system(row, i * nv + q) = system(row, i * nv + q) + av(q, j);
        for (long long p = 0; p < nw; ++p)
          system(row, p * nv + j) = system(row, p * nv + j) - aw(i, p);
        ++row;
      }
  }
  return numeric_nullity(std::move(system), tolerance);
}

CompletenessResult completeness_check(long long algebra_dim, long long radical_dim,
                                      const std::vector<long long>& class_dims) {
  CompletenessResult res;
  for (long long d : class_dims) res.sum_of_squares += d * d;
  res.semisimple_quotient_dim = algebra_dim - radical_dim;
  res.pass = res.sum_of_squares == res.semisimple_quotient_dim;
  return res;
}

// ---------------------------------------------------------------------------
// idempotent calculus in k[Lambda]

namespace {

using GroupAlgElem = std::vector<CycNum>;  // indexed by Subgroup member order

GroupAlgElem ga_mul(const FinAbGroup& G, const Subgroup& lam, const GroupAlgElem& a,
                    const GroupAlgElem& b) {
  size_t n = lam.members.size();
  GroupAlgElem out(n, CycNum::zero());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      long long k = lam.index_of(G.add(lam.members[i], lam.members[j]));
      out[static_cast<size_t>(k)] += a[i] * b[j];
    }
  }
  return out;
}

GroupAlgElem minimal_idempotent(const FinAbGroup& G, const Subgroup& lam, const SubgroupChar& xi) {
  size_t n = lam.members.size();
  long long N = G.exponent();
  CycNum inv_order{Rational(1, static_cast<long>(n))};
  GroupAlgElem e(n, CycNum::zero());
  for (size_t i = 0; i < n; ++i) e[i] = inv_order * root(N, -xi.values[i]);
  return e;
}

bool ga_equal(const GroupAlgElem& a, const GroupAlgElem& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

IdempotentCheckResult idempotent_check(const ValidatedDatum& v) {
  IdempotentCheckResult res;
  const FinAbGroup& G = v.datum.group;
  const Subgroup& lam = v.lambda;
  const auto& dual = v.lambda_dual;
  size_t n = lam.members.size();

  auto fail = [&res](const std::string& msg) {
    res.pass = false;
    res.failures.push_back(msg);
  };

  std::vector<GroupAlgElem> idem;
  for (const auto& xi : dual) idem.push_back(minimal_idempotent(G, lam, xi));

  // completeness: sum e_xi = 1
  GroupAlgElem total(n, CycNum::zero());
  for (const auto& e : idem)
    for (size_t i = 0; i < n; ++i) total[i] += e[i];
  GroupAlgElem unit(n, CycNum::zero());
  unit[static_cast<size_t>(lam.index_of(G.identity()))] = CycNum::one();
  if (!ga_equal(total, unit)) fail("sum of idempotents is not 1");

  // orthogonality table (exhaustive at desk scale, sampled diagonal beyond)
  bool exhaustive = n <= 12;
  for (size_t i = 0; i < idem.size(); ++i) {
    for (size_t j = 0; j < idem.size(); ++j) {
      if (!exhaustive && i != j) continue;
      GroupAlgElem prod = ga_mul(G, lam, idem[i], idem[j]);
      const GroupAlgElem& expected = (i == j) ? idem[i] : GroupAlgElem(n, CycNum::zero());
      if (!ga_equal(prod, expected))
        fail("e_xi e_zeta != " + std::string(i == j ? "e_xi" : "0") + " at pair (" +
             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  // hit action e_eta <- xi = e_{xi^{-1} eta}
  long long N = G.exponent();
  for (size_t a = 0; a < dual.size(); ++a) {
    for (size_t b = 0; b < dual.size(); ++b) {
      if (!exhaustive && a != b) continue;
      // lhs = |Lambda|^-1 sum eta^-1(g) xi(g) g
      GroupAlgElem lhs(n, CycNum::zero());
      CycNum inv_order{Rational(1, static_cast<long>(n))};
      for (size_t i = 0; i < n; ++i)
        lhs[i] = inv_order * root(N, dual[b].values[i] - dual[a].values[i]);
      SubgroupChar target = subgroup_char_mul(G, subgroup_char_inv(G, dual[b]), dual[a]);
      GroupAlgElem rhs = minimal_idempotent(G, lam, target);
      if (!ga_equal(lhs, rhs))
        fail("hit action e_eta <- xi != e_{xi^-1 eta} at pair (" + std::to_string(a) + "," +
             std::to_string(b) + ")");
    }
  }

  return res;
}

}  // namespace qpr
