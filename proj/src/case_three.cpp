#include <set>
#include <sstream>

#include "qpr/exactroot.hpp"
#include "qpr/reps.hpp"

namespace qpr {

namespace {

CycNum root(long long n, long long k) { return CycNum::root_of_unity(n, k); }

// subgroup of the character group generated by the given characters
std::set<Character> character_span(const FinAbGroup& G, const std::vector<Character>& gens) {
  std::set<Character> span{G.trivial_character()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Character> next = span;
    for (const auto& c : span)
      for (const auto& g : gens) {
        Character p = G.char_mul(c, g);
        if (next.insert(p).second) grew = true;
      }
    span = std::move(next);
  }
  return span;
}

}  // namespace

CaseIIIBuild build_case_III(const ValidatedDatum& v, const SectorData& sec,
                            const StructureAlgebra* oracle, long precision) {
  const FinAbGroup& G = v.datum.group;
  const long long N = G.exponent();
  const long long r = sec.r;
  const long long s = sec.s;
  const int t = G.rank();

  CaseIIIBuild out;

  // Y-orbits of B(xi)-classes = orbits of F(xi) under translation by
  // <chi_1, chi_2>; each class is a chi_1-orbit of size r
  std::set<Character> H = character_span(G, {v.datum.chi[0], v.datum.chi[1]});
  long long orbit_size = static_cast<long long>(H.size());
  if (orbit_size % r != 0)
    throw std::logic_error("build_case_III: <chi1,chi2> orbit size not divisible by r");
  long long d = orbit_size / r;  // Y-orbit length on classes
  if (s % d != 0) throw std::logic_error("build_case_III: orbit length does not divide s");
  long long e = s / d;  // stabilizer order = number of extensions

  std::set<Character> seen;
  std::vector<Character> orbit_reps;
  for (const auto& eta : sec.fiber) {
    if (seen.count(eta)) continue;
    orbit_reps.push_back(eta);  // fiber is sorted, so eta is lex-min in its orbit
    for (const auto& h : H) seen.insert(G.char_mul(eta, h));
  }

  long long chi2_exp_g1 = G.char_eval_exp(v.datum.chi[1], v.datum.g[0]);  // w = zeta^this

  for (const auto& eta : orbit_reps) {
    MatrixRep W = shift_module(v, sec, eta, nullptr);

    // twist by Y^d: Y(h_u) = chi_2(h_u)^-1 h_u, Y(x) = w^-1 x
    MatrixRep Wtw = W;
    Wtw.x = W.x.scaled(root(N, -d * chi2_exp_g1));
    for (int u = 0; u < t; ++u) {
      GroupElement hu = G.identity();
      if (G.invariant_factors()[u] > 1) hu.e[u] = 1;
      long long c2 = G.char_eval_exp(v.datum.chi[1], hu);
      Wtw.h[u] = W.h[u].scaled(root(N, -d * c2));
    }

    // intertwiner T with T rho(b) = rho(Y^d(b)) T; unique up to scalar
    HomInfo hom = hom_space(W, Wtw);
    if (hom.dim != 1) {
      std::ostringstream os;
      os << "build_case_III: intertwiner space for the Y^" << d << "-twist has dimension "
         << hom.dim << " (expected 1) at eta = " << to_string(eta);
      throw InconsistencyError(os.str());
    }
    Mat<CycNum> T = hom.basis[0];

    // T^e is an endomorphism of the irreducible W, hence a scalar gamma
    Mat<CycNum> Te = T.pow(e, CycNum::one());
    CycNum gamma = Te(0, 0);
    if (!(Te == Mat<CycNum>::identity(r, CycNum::one()).scaled(gamma)))
      throw InconsistencyError("build_case_III: T^e is not scalar");
    if (gamma.is_zero()) throw InconsistencyError("build_case_III: singular intertwiner");

    // rescale so that (lambda T)^e = beta = y^s; the e choices differ by
    // e-th roots of unity and give the extensions of the stabilizer action
    CycNum mu = sec.beta / gamma;
    std::optional<CycNum> lambda = cyclotomic_kth_root(mu, e);

    if (lambda) {
      for (long long j = 0; j < e; ++j) {
        CycNum lam_j = *lambda * root(e, j);
        Mat<CycNum> S = T.scaled(lam_j);

        MatrixRep rep;
        rep.dim = d * r;
        rep.x = Mat<CycNum>(d * r, d * r);
        rep.y = Mat<CycNum>(d * r, d * r);
        for (long long b = 0; b < d; ++b) {
          // x on block b: w^b rho(x); h_u on block b: chi_2(h_u)^b rho(h_u)
          CycNum wb = root(N, b * chi2_exp_g1);
          for (long long i = 0; i < r; ++i)
            for (long long k = 0; k < r; ++k) {
              if (!W.x(i, k).is_zero()) rep.x(b * r + i, b * r + k) = wb * W.x(i, k);
            }
          // y: block b -> b+1 identity, wrap d-1 -> 0 via lambda T
          if (b + 1 < d) {
            for (long long i = 0; i < r; ++i) rep.y((b + 1) * r + i, b * r + i) = CycNum::one();
          } else {
            for (long long i = 0; i < r; ++i)
              for (long long k = 0; k < r; ++k)
                if (!S(i, k).is_zero()) rep.y(i, (d - 1) * r + k) = S(i, k);
          }
        }
        for (int u = 0; u < t; ++u) {
          GroupElement hu = G.identity();
          if (G.invariant_factors()[u] > 1) hu.e[u] = 1;
          long long c2 = G.char_eval_exp(v.datum.chi[1], hu);
          Mat<CycNum> m(d * r, d * r);
          for (long long b = 0; b < d; ++b) {
            CycNum f = root(N, b * c2);
            for (long long i = 0; i < r; ++i) m(b * r + i, b * r + i) = f * W.h[u](i, i);
          }
          rep.h.push_back(std::move(m));
        }

        IrrepDescriptor desc;
        desc.tag = CaseTag::III;
        desc.eta = eta;
        desc.dim = d * r;
        desc.extension_index = static_cast<int>(j);
        desc.rep = std::move(rep);
        out.reps.push_back(std::move(desc));
      }
    } else {
      // the rescaling factor leaves every cyclotomic field: numeric mode
      out.exact = false;
      std::vector<CycNum> ext(static_cast<size_t>(e + 1), CycNum::zero());
      ext[0] = -mu;
      ext[static_cast<size_t>(e)] = CycNum::one();
      RootFindResult lam_roots = complex_roots(CycPoly(std::move(ext)), precision);
      long prec = precision;
      auto embed_mat = [&](const Mat<CycNum>& m) {
        Mat<ComplexApprox> em(m.rows(), m.cols());
        for (long long i = 0; i < m.rows(); ++i)
          for (long long k = 0; k < m.cols(); ++k) em(i, k) = embed_cyclotomic(m(i, k), prec);
        return em;
      };
      Mat<ComplexApprox> We = embed_mat(W.x);
      Mat<ComplexApprox> Te2 = embed_mat(T);
      int j = 0;
      for (const auto& lam : lam_roots.roots) {
        GenMatrices<ComplexApprox> rep;
        rep.dim = d * r;
        rep.x = Mat<ComplexApprox>(d * r, d * r);
        rep.y = Mat<ComplexApprox>(d * r, d * r);
        for (long long b = 0; b < d; ++b) {
          ComplexApprox wb = embed_cyclotomic(root(N, b * chi2_exp_g1), prec);
          for (long long i = 0; i < r; ++i)
            for (long long k = 0; k < r; ++k)
              rep.x(b * r + i, b * r + k) = wb * We(i, k);
          if (b + 1 < d) {
            for (long long i = 0; i < r; ++i)
              rep.y((b + 1) * r + i, b * r + i) = ComplexApprox::from_rational(Rational(1), prec);
          } else {
            for (long long i = 0; i < r; ++i)
              for (long long k = 0; k < r; ++k) rep.y(i, (d - 1) * r + k) = lam * Te2(i, k);
          }
        }
        for (int u = 0; u < t; ++u) {
          GroupElement hu = G.identity();
          if (G.invariant_factors()[u] > 1) hu.e[u] = 1;
          long long c2 = G.char_eval_exp(v.datum.chi[1], hu);
          Mat<ComplexApprox> m(d * r, d * r);
          for (long long b = 0; b < d; ++b) {
            ComplexApprox f = embed_cyclotomic(root(N, b * c2), prec);
            for (long long i = 0; i < r; ++i) m(b * r + i, b * r + i) = f * embed_cyclotomic(W.h[u](i, i), prec);
          }
          rep.h.push_back(std::move(m));
        }
        IrrepDescriptor desc;
        desc.tag = CaseTag::III;
        desc.eta = eta;
        desc.dim = d * r;
        desc.extension_index = j++;
        desc.rep_numeric = std::move(rep);
        out.reps.push_back(std::move(desc));
      }
    }
  }

  // cross-check: A(xi) is semisimple in this case, so the class list must
  // account for the whole dimension
  if (oracle) {
    RadicalInfo rad = radical(*oracle);
    long long sum_sq = 0;
    for (const auto& desc : out.reps) sum_sq += desc.dim * desc.dim;
    if (rad.dim != 0 || sum_sq != oracle->dim()) {
      std::ostringstream os;
      os << "build_case_III: oracle cross-check failed: radical dim " << rad.dim
         << ", builder sum of squares " << sum_sq << ", algebra dim " << oracle->dim()
         << "; builder classes:";
      for (const auto& desc : out.reps)
        os << " (eta=" << to_string(desc.eta) << ", dim=" << desc.dim
           << ", ext=" << desc.extension_index << ")";
      throw InconsistencyError(os.str());
    }
  }
  return out;
}

}  // namespace qpr
