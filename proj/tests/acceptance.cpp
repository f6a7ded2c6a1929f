// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "random_datum.hpp"
#include "qpr/algebra.hpp"
#include "qpr/reps.hpp"
#include "qpr/rng.hpp"

using namespace qpr;
using namespace qpr::fixtures;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int failures = 0;

void report(int number, const std::string& what, bool pass, double seconds, double limit) {
  bool ok = pass && seconds < limit;
  if (!ok) ++failures;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what << "  ["
       << seconds << " s, limit " << limit << " s";
  if (!pass) line << ", check failed";
  line << "]";
  std::cout << line.str() << std::endl;
}

void criterion_1() {
  Timer timer;
  bool pass = true;
  Rng rng(20260808);
  int produced = 0;
  while (produced < 20) {
    auto d = try_random_rank2(rng, 64);
    if (!d) continue;
    ++produced;
    auto v = validated(*d);
    long long expect = v.datum.group.order() * v.r[0] * v.r[1];
    long long total = 0;
    for (const auto& s : sectors(v)) total += s.dim;
    if (total != expect || v.dim_A != expect) pass = false;
  }
  report(1, "dimension accounting over 20 random rank-2 data", pass, timer.seconds(), 10.0);
}

void criterion_2() {
  Timer timer;
  bool pass = true;
  Rng rng(424242);
  for (int draw = 0; draw < 1000; ++draw) {
    long long r = rng.range(2, 12);
    CycNum q = CycNum::root_of_unity(r, 1);
    long long level = lcm_ll(r, 4);
    auto rand_cyc = [&]() {
      std::vector<Rational> c(static_cast<size_t>(euler_phi(level)));
      for (auto& x : c) x = make_rational(rng.range(-3, 3), rng.range(1, 2));
      return CycNum::from_coeffs(level, std::move(c));
    };
    CycNum c0 = rand_cyc(), nu = rand_cyc(), eg = rand_cyc();
    long long len = 3 * r;
    auto vals = c_recursion(c0, q, nu, eg, len);

    // closed form with running powers and q-integers (independent route)
    CycNum qi = CycNum::one();       // q^i
    CycNum qint = CycNum::zero();    // (i)_q
    CycNum qim1 = CycNum::one();     // q^{i-1} for i >= 1
    for (long long i = 1; i <= len; ++i) {
      qint += qi;  // (i)_q = (i-1)_q + q^{i-1}
      qi *= q;
      CycNum closed = qi * c0 + q * qint * nu * (CycNum::one() - qim1 * eg);
      qim1 *= q;
      if (!(vals[static_cast<size_t>(i)] == closed)) pass = false;
    }
    for (long long i = 0; i + r <= len; ++i)
      if (!(vals[static_cast<size_t>(i + r)] == vals[static_cast<size_t>(i)])) pass = false;
  }
  report(2, "recursion vs closed form and periodicity, 1000 seeded draws", pass,
         timer.seconds(), 5.0);
}

// ---------------------------------------------------------------------------
// the fixture set shared by criteria 3-7

struct FixtureSector {
  std::string name;
  ValidatedDatum v;
  SectorData s;
  SectorIrreps irreps;
  std::optional<StructureAlgebra> oracle;
  long long radical_dim = -1;
};

std::vector<FixtureSector> g_fixtures;

void build_fixture_set() {
  auto add = [&](const std::string& name, const LiftingDatum& d, long long xi_val_on,
                 std::vector<long long> member) {
    FixtureSector f;
    f.name = name;
    f.v = validated(d);
    f.s = sector_where(f.v, f.v.datum.group.element(member), xi_val_on);
    f.oracle.emplace(f.v, f.s.xi);
    RepOptions opts;
    opts.oracle = &*f.oracle;
    f.irreps = build_sector_irreps(f.v, f.s, opts);
    f.radical_dim = radical(*f.oracle).dim;
    g_fixtures.push_back(std::move(f));
  };

  add("z8 case I", z8(0, 0, 0), 0, {4});
  add("z8 case II", z8(1, 0, 0), 4, {4});
  add("z8 case III", z8(1, 1, 0), 4, {4});
  add("z8 case V", z8(1, 0, 1), 4, {4});
  add("z8 case VI", z8(1, 1, 1), 4, {4});
  add("z4 case IV", z4_case4(), 0, {0});
}

void criterion_3() {
  Timer timer;
  bool pass = true;
  BigFloat tol = BigFloat::from_double(1e-25, 64);
  for (const auto& f : g_fixtures) {
    if (f.irreps.built.empty()) pass = false;  // every fixture sector builds something
    for (const auto& d : f.irreps.built) {
      if (d.rep) {
        if (!verify_relations(*d.rep, f.v, f.s.xi).pass) pass = false;
      }
      if (d.rep_numeric) {
        if (!verify_relations_numeric(*d.rep_numeric, f.v, f.s.xi, tol).pass) pass = false;
      }
    }
    for (const auto& orbit : f.irreps.vi_orbits) {
      if (!verify_relations_polymod(orbit.quotient_rep, f.v, f.s.xi, orbit.ctx).pass)
        pass = false;
      if (!orbit.roots_converged) pass = false;
    }
  }
  report(3, "relation verification across every builder output on the fixture set", pass,
         timer.seconds(), 60.0);
}

void criterion_4() {
  Timer timer;
  bool pass = true;
  BigFloat tol = BigFloat::from_double(1e-25, 64);
  for (const auto& f : g_fixtures) {
    for (const auto& d : f.irreps.built) {
      if (d.rep) {
        if (hom_dim(*d.rep, *d.rep) != 1) pass = false;
      } else if (d.rep_numeric) {
        if (hom_dim_numeric(*d.rep_numeric, *d.rep_numeric, tol) != 1) pass = false;
      }
    }
    // injected fault: one perturbed matrix entry must break the relations
    for (const auto& d : f.irreps.built) {
      if (!d.rep) continue;
      MatrixRep bad = *d.rep;
      if (bad.has_y() && bad.dim > 1)
        bad.y(0, bad.dim - 1) += CycNum::one();
      else
        bad.x(0, 0) += CycNum::one();
      if (verify_relations(bad, f.v, f.s.xi).pass) pass = false;
      break;  // one fault per sector suffices
    }
  }
  report(4, "irreducibility (End = k) and injected-fault detection", pass, timer.seconds(),
         60.0);
}

void criterion_5() {
  Timer timer;
  bool pass = true;
  for (const auto& f : g_fixtures) {
    if (f.s.tag == CaseTag::III && f.radical_dim != 0) pass = false;
    if (f.s.tag == CaseTag::VI) {
      bool squarefree = !f.irreps.exceptional;
      if ((f.radical_dim == 0) != squarefree) pass = false;
    }
  }
  // the theta = 1 algebra B(xi) with nonvanishing power scalar is semisimple
  {
    auto v = validated(z8_theta1(1));
    auto s = sector_where(v, v.datum.group.element({4}), 4);
    StructureAlgebra B(v, s.xi);
    if (radical(B).dim != 0) pass = false;
  }
  report(5, "semisimplicity oracle agreement (case III, B(xi), case VI squarefree)", pass,
         timer.seconds(), 120.0);
}

void criterion_6() {
  Timer timer;
  bool pass = true;
  for (const auto& f : g_fixtures) {
    std::vector<long long> dims;
    for (const auto& c : f.irreps.classes) dims.push_back(c.dim);
    auto cc = completeness_check(f.s.dim, f.radical_dim, dims);

    if (f.name == "z4 case IV") {
      std::vector<long long> sorted = dims;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != std::vector<long long>({1, 1, 3, 3})) pass = false;
      if (cc.sum_of_squares != 20) pass = false;
      if (f.radical_dim != 44) pass = false;
    }
    if (f.name == "z8 case II") {
      if (dims != std::vector<long long>({4})) pass = false;
    }
    if (f.name == "z8 case III") {
      if (dims != std::vector<long long>({4, 4, 4, 4})) pass = false;
      if (cc.sum_of_squares != 64 || f.radical_dim != 0) pass = false;
    }
    if (f.name == "z8 case V") {
      // the intertwiner merges exactly one pair of shift candidates
      if (dims != std::vector<long long>({4, 4, 4})) pass = false;
      if (f.radical_dim != 16) pass = false;
    }
    if (!f.irreps.exceptional && !cc.pass) pass = false;
  }
  report(6, "completeness identities against the oracle's d - dim J", pass, timer.seconds(),
         120.0);
}

void criterion_7() {
  Timer timer;
  bool pass = true;
  BigFloat tol = BigFloat::from_double(1e-20, 64);
  for (const auto& f : g_fixtures) {
    const FinAbGroup& G = f.v.datum.group;
    const Character& chi1 = f.v.datum.chi[0];
    auto in_orbit = [&](const Character& a, const Character& b) {
      long long o = G.character_order(chi1);
      Character cur = b;
      for (long long m = 0; m < o; ++m) {
        if (cur == a) return true;
        cur = G.char_mul(cur, chi1);
      }
      return false;
    };

    if (f.s.tag == CaseTag::II) {
      for (size_t i = 0; i < f.irreps.built.size(); ++i)
        for (size_t j = 0; j < f.irreps.built.size(); ++j) {
          if (i == j) continue;
          long long hd = hom_dim(*f.irreps.built[i].rep, *f.irreps.built[j].rep);
          bool orbit = in_orbit(f.irreps.built[i].eta, f.irreps.built[j].eta);
          if (hd != (orbit ? 1 : 0)) pass = false;
        }
    }
    if (f.s.tag == CaseTag::IV) {
      for (size_t i = 0; i < f.irreps.built.size(); ++i)
        for (size_t j = 0; j < f.irreps.built.size(); ++j) {
          if (i == j) continue;
          if (hom_dim(*f.irreps.built[i].rep, *f.irreps.built[j].rep) != 0) pass = false;
        }
    }
    if (f.s.tag == CaseTag::VI) {
      // exhaustive pairs across two eta-orbit builds: merge iff c = c'_m
      Character eta1 = G.character({1});
      Character eta3 = G.character({3});
      CaseVIOrbitBuild b1 = build_case_VI(f.v, f.s, eta1, 128);
      CaseVIOrbitBuild b3 = build_case_VI(f.v, f.s, eta3, 128);
      long long m = 3;  // eta_1 = eta_3 chi_1^3
      GroupElement g1g2 = G.add(f.v.datum.g[0], f.v.datum.g[1]);
      CycNum eg3 = CycNum::root_of_unity(8, G.char_eval_exp(eta3, g1g2));
      CycNum B = f.s.q.pow(m);
      CycNum A = f.s.q * q_integer(m, f.s.q) * f.s.nu *
                 (CycNum::one() - f.s.q.pow(m - 1) * eg3);
      ComplexApprox eA = embed_cyclotomic(A, 128), eB = embed_cyclotomic(B, 128);
      for (const auto& d1 : b1.root_reps)
        for (const auto& d3 : b3.root_reps) {
          ComplexApprox shifted = eB * (*d3.c_numeric) + eA;
          bool same = complex_distance(*d1.c_numeric, shifted).to_double() < 1e-20;
          long long hd = hom_dim_numeric(*d1.rep_numeric, *d3.rep_numeric, tol);
          if (hd != (same ? 1 : 0)) pass = false;
        }
    }
  }
  report(7, "iso-classification criteria confirmed by intertwiners on exhaustive pairs", pass,
         timer.seconds(), 60.0);
}

void criterion_8() {
  Timer timer;
  bool pass = true;
  // fixture Lambdas of orders 2, 1, 4, 8
  for (const auto& d : {z8(1, 1, 1), z4_case4(), z4z4()}) {
    auto v = validated(d);
    if (!idempotent_check(v).pass) pass = false;
  }
  {
    FinAbGroup G({16});
    LiftingDatum d;
    d.group = G;
    d.theta = 1;
    d.g = {G.element({1})};
    d.chi = {G.character({8})};
    d.alpha = {{CycNum::zero()}};
    auto v = validated(d);
    if (v.lambda.order() != 8) pass = false;
    if (!idempotent_check(v).pass) pass = false;
  }
  report(8, "idempotent calculus exhaustive for all fixture Lambda with |Lambda| <= 8", pass,
         timer.seconds(), 60.0);
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  Timer fixture_timer;
  build_fixture_set();
  std::cout << "(fixture set built in " << fixture_timer.seconds() << " s)" << std::endl;
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << total.seconds() << " s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
