#include "qpr/report.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qpr {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

GenMatrices<ComplexApprox> embed_rep(const MatrixRep& rep, long prec) {
  GenMatrices<ComplexApprox> out;
  out.dim = rep.dim;
  auto embed_mat = [&](const Mat<CycNum>& m) {
    Mat<ComplexApprox> em(m.rows(), m.cols());
    for (long long i = 0; i < m.rows(); ++i)
      for (long long j = 0; j < m.cols(); ++j) em(i, j) = embed_cyclotomic(m(i, j), prec);
    return em;
  };
  out.x = embed_mat(rep.x);
  if (rep.has_y()) out.y = embed_mat(rep.y);
  for (const auto& h : rep.h) out.h.push_back(embed_mat(h));
  return out;
}

IrrepReport describe_irrep(const IrrepDescriptor& d) {
  IrrepReport ir;
  ir.dim = d.dim;
  ir.eta_exponents = d.eta.e;
  if (d.c_exact) ir.c_exact = d.c_exact->to_string();
  if (d.c_numeric) {
    ir.c_re = d.c_numeric->re().to_string();
    ir.c_im = d.c_numeric->im().to_string();
    ir.c_err = d.c_numeric->error_bound().to_string(8);
  }
  ir.n_cut = d.n_cut;
  ir.extension_index = d.extension_index;
  return ir;
}

}  // namespace

PipelineResult run_pipeline(const ValidatedDatum& v, const PipelineOptions& opts) {
  PipelineResult result;
  const FinAbGroup& G = v.datum.group;
  result.dim_A = v.dim_A;
  result.level = G.exponent();
  result.theta = v.datum.theta;
  result.group_order = G.order();
  result.lambda_order = v.lambda.order();

  BigFloat tol = BigFloat::from_double(opts.tolerance, 64);

  bool want_reps = opts.stage != PipelineStage::Classify;
  bool want_verify =
      opts.stage == PipelineStage::Verify || opts.stage == PipelineStage::Report;
  bool want_oracle = opts.stage == PipelineStage::Report;

  if (want_oracle) {
    auto idem = idempotent_check(v);
    result.idempotents = idem.pass ? CheckStatus::Pass : CheckStatus::Fail;
    if (!idem.pass) result.all_pass = false;
  }

  std::vector<SectorData> secs = sectors(v);
  for (const auto& sec : secs) {
    result.sector_dim_sum += sec.dim;
    if (opts.only_sector >= 0 && sec.index != opts.only_sector) continue;

    SectorReport sr;
    sr.index = sec.index;
    sr.xi_values = sec.xi.values;
    sr.case_tag = to_string(sec.tag);
    sr.swapped = sec.swapped;
    sr.dim = sec.dim;
    sr.alpha = sec.alpha.to_string();
    sr.beta = sec.beta.to_string();
    sr.nu = sec.nu.to_string();
    sr.q = sec.q.to_string();
    sr.idempotents = result.idempotents;

    std::optional<StructureAlgebra> oracle;
    std::optional<RadicalInfo> rad;
    if (want_oracle) {
      if (sec.dim <= opts.max_dim) {
        oracle.emplace(v, sec.xi);
        if (!check_associativity_sampled(*oracle, opts.seed, 300)) {
          sr.failures.push_back("sampled associativity check failed on the sector algebra");
          result.all_pass = false;
        }
        rad = radical(*oracle);
        sr.radical_dim = rad->dim;
        sr.semisimple = rad->dim == 0;
      } else {
        sr.unverified = true;
      }
    }

    SectorIrreps irreps;
    if (want_reps && sec.tag != CaseTag::OracleOnly) {
      RepOptions ropts;
      ropts.precision = opts.precision;
      ropts.oracle = oracle ? &*oracle : nullptr;
      try {
        irreps = build_sector_irreps(v, sec, ropts);
      } catch (const InconsistencyError& e) {
        sr.failures.push_back(e.what());
        result.all_pass = false;
        result.sectors.push_back(std::move(sr));
        continue;
      }
      sr.exceptional = irreps.exceptional;
      for (const auto& d : irreps.classes) sr.irreps.push_back(describe_irrep(d));
      for (const auto& orbit : irreps.vi_orbits) {
        if (!orbit.roots_converged) {
          sr.failures.push_back("root refinement for eta = " + to_string(orbit.eta) +
                                " did not reach the requested precision");
          result.all_pass = false;
        }
      }
    }

    if (want_verify && sec.tag != CaseTag::OracleOnly) {
      bool rel_pass = true, irr_pass = true;
      for (const auto& d : irreps.classes) {
        if (d.rep && opts.mode == VerifyMode::Exact) {
          auto rc = verify_relations(*d.rep, v, sec.xi);
          if (!rc.pass) {
            rel_pass = false;
            for (const auto& f : rc.failures)
              sr.failures.push_back("relations(" + to_string(d.eta) + "): " + f);
          }
          if (hom_dim(*d.rep, *d.rep) != 1) {
            irr_pass = false;
            sr.failures.push_back("irreducibility(" + to_string(d.eta) + "): End dim != 1");
          }
        } else {
          GenMatrices<ComplexApprox> num =
              d.rep_numeric ? *d.rep_numeric : embed_rep(*d.rep, opts.precision);
          auto rc = verify_relations_numeric(num, v, sec.xi, tol);
          if (!rc.pass) {
            rel_pass = false;
            for (const auto& f : rc.failures)
              sr.failures.push_back("relations(" + to_string(d.eta) + "): " + f);
          }
          if (hom_dim_numeric(num, num, tol) != 1) {
            irr_pass = false;
            sr.failures.push_back("irreducibility(" + to_string(d.eta) + "): End dim != 1");
          }
        }
      }
      // Case VI: the exact check runs in the quotient ring and covers all
      // roots of one orbit at once
      if (opts.mode == VerifyMode::Exact) {
        for (const auto& orbit : irreps.vi_orbits) {
          auto rc = verify_relations_polymod(orbit.quotient_rep, v, sec.xi, orbit.ctx);
          if (!rc.pass) {
            rel_pass = false;
            for (const auto& f : rc.failures)
              sr.failures.push_back("relations(quotient ring, eta=" + to_string(orbit.eta) +
                                    "): " + f);
          }
        }
      }
      sr.relations = rel_pass ? CheckStatus::Pass : CheckStatus::Fail;
      sr.irreducibility = irr_pass ? CheckStatus::Pass : CheckStatus::Fail;
      if (!rel_pass || !irr_pass) result.all_pass = false;
    }

    if (want_oracle && rad) {
      if (sec.tag == CaseTag::OracleOnly || sr.exceptional) {
        sr.completeness = CheckStatus::Skipped;  // builders make no completeness claim
      } else {
        std::vector<long long> dims;
        for (const auto& d : irreps.classes) dims.push_back(d.dim);
        auto cc = completeness_check(sec.dim, rad->dim, dims);
        sr.completeness = cc.pass ? CheckStatus::Pass : CheckStatus::Fail;
        if (!cc.pass) {
          std::ostringstream os;
          os << "completeness: sum of squares " << cc.sum_of_squares
             << " != " << cc.semisimple_quotient_dim << " = dim - radical";
          sr.failures.push_back(os.str());
          result.all_pass = false;
        }
      }
    }

    result.sectors.push_back(std::move(sr));
  }

  if (result.sector_dim_sum != result.dim_A) {
    result.all_pass = false;
  }
  return result;
}

namespace {
using nlohmann::ordered_json;

ordered_json sector_to_json(const SectorReport& sr) {
  ordered_json js;
  js["index"] = sr.index;
  js["xi_values"] = sr.xi_values;
  js["case_tag"] = sr.case_tag;
  js["swapped"] = sr.swapped;
  js["exceptional"] = sr.exceptional;
  js["unverified"] = sr.unverified;
  js["dim"] = sr.dim;
  js["alpha"] = sr.alpha;
  js["beta"] = sr.beta;
  js["nu"] = sr.nu;
  js["q"] = sr.q;
  js["irreps"] = ordered_json::array();
  for (const auto& ir : sr.irreps) {
    ordered_json ji;
    ji["dim"] = ir.dim;
    ji["eta_exponents"] = ir.eta_exponents;
    if (ir.c_exact) ji["c"] = *ir.c_exact;
    if (ir.c_re) {
      ji["c_numeric"]["re"] = *ir.c_re;
      ji["c_numeric"]["im"] = *ir.c_im;
      ji["c_numeric"]["error_bound"] = *ir.c_err;
    }
    if (ir.n_cut) ji["N"] = *ir.n_cut;
    if (ir.extension_index >= 0) ji["extension"] = ir.extension_index;
    js["irreps"].push_back(ji);
  }
  if (sr.radical_dim) js["radical_dim"] = *sr.radical_dim;
  if (sr.semisimple) js["semisimple"] = *sr.semisimple;
  js["checks"]["relations"] = to_string(sr.relations);
  js["checks"]["irreducibility"] = to_string(sr.irreducibility);
  js["checks"]["completeness"] = to_string(sr.completeness);
  js["checks"]["idempotents"] = to_string(sr.idempotents);
  if (!sr.failures.empty()) js["failures"] = sr.failures;
  return js;
}

}  // namespace

std::string pipeline_to_json(const PipelineResult& r) {
  ordered_json js;
  js["global"]["dim_A"] = r.dim_A;
  js["global"]["sector_dim_sum"] = r.sector_dim_sum;
  js["global"]["cyclotomic_level"] = r.level;
  js["global"]["theta"] = r.theta;
  js["global"]["group_order"] = r.group_order;
  js["global"]["lambda_order"] = r.lambda_order;
  js["global"]["idempotents"] = to_string(r.idempotents);
  js["global"]["all_checks_pass"] = r.all_pass;
  js["sectors"] = ordered_json::array();
  for (const auto& sr : r.sectors) js["sectors"].push_back(sector_to_json(sr));
  return js.dump(2);
}

void pipeline_to_text(const PipelineResult& r, std::ostream& os) {
  os << "dim A = " << r.dim_A << " (sum over sectors: " << r.sector_dim_sum << ")\n";
  os << "sectors: " << r.sectors.size() << ", |Lambda| = " << r.lambda_order
     << ", |Gamma| = " << r.group_order << "\n";
  if (r.idempotents != CheckStatus::Skipped)
    os << "idempotent calculus: " << to_string(r.idempotents) << "\n";
  for (const auto& sr : r.sectors) {
    os << "sector " << sr.index << ": xi = (";
    for (size_t i = 0; i < sr.xi_values.size(); ++i)
      os << (i ? "," : "") << sr.xi_values[i];
    os << "), case " << sr.case_tag << ", dim " << sr.dim;
    if (sr.swapped) os << ", swapped";
    if (sr.exceptional) os << ", exceptional";
    if (sr.unverified) os << ", unverified";
    os << "\n";
    if (!sr.irreps.empty()) {
      os << "  irreducibles (" << sr.irreps.size() << " classes):";
      for (const auto& ir : sr.irreps) os << " dim " << ir.dim;
      os << "\n";
    }
    if (sr.radical_dim)
      os << "  radical dim " << *sr.radical_dim << ", semisimple "
         << (*sr.semisimple ? "yes" : "no") << "\n";
    os << "  checks: relations " << to_string(sr.relations) << ", irreducibility "
       << to_string(sr.irreducibility) << ", completeness " << to_string(sr.completeness)
       << ", idempotents " << to_string(sr.idempotents) << "\n";
    for (const auto& f : sr.failures) os << "  FAIL: " << f << "\n";
  }
  os << (r.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
}

std::vector<std::string> report_flags_from_json(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  std::vector<std::string> flags;
  flags.push_back("idempotents=" + doc["global"]["idempotents"].get<std::string>());
  flags.push_back("all=" + std::string(doc["global"]["all_checks_pass"].get<bool>() ? "1" : "0"));
  for (const auto& s : doc["sectors"]) {
    std::string prefix = "sector" + std::to_string(s["index"].get<long long>());
    for (const char* key : {"relations", "irreducibility", "completeness", "idempotents"})
      flags.push_back(prefix + "." + key + "=" + s["checks"][key].get<std::string>());
  }
  return flags;
}

}  // namespace qpr
