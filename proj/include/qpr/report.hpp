#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpr/reps.hpp"

namespace qpr {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

enum class PipelineStage { Classify, Reps, Verify, Report };

enum class VerifyMode { Exact, Numeric };

struct PipelineOptions {
  PipelineStage stage = PipelineStage::Report;
  VerifyMode mode = VerifyMode::Exact;
  long precision = 128;
  double tolerance = 1e-25;
  std::uint64_t seed = 12345;
  long long max_dim = 4096;
  long long only_sector = -1;  // -1: all sectors
};

struct IrrepReport {
  long long dim = 0;
  std::vector<long long> eta_exponents;
  std::optional<std::string> c_exact;
  std::optional<std::string> c_re, c_im, c_err;  // numeric root
  std::optional<long long> n_cut;
  int extension_index = -1;
};

struct SectorReport {
  long long index = 0;
  std::vector<long long> xi_values;
  std::string case_tag;
  bool swapped = false;
  bool exceptional = false;
  bool unverified = false;  // oracle skipped (dimension cap)
  long long dim = 0;
  std::string alpha, beta, nu, q;
  std::vector<IrrepReport> irreps;  // class representatives
  std::optional<long long> radical_dim;
  std::optional<bool> semisimple;
  CheckStatus relations = CheckStatus::Skipped;
  CheckStatus irreducibility = CheckStatus::Skipped;
  CheckStatus completeness = CheckStatus::Skipped;
  CheckStatus idempotents = CheckStatus::Skipped;
  std::vector<std::string> failures;
};

struct PipelineResult {
  long long dim_A = 0;
  long long sector_dim_sum = 0;
  long long level = 1;
  int theta = 0;
  long long group_order = 0;
  long long lambda_order = 0;
  CheckStatus idempotents = CheckStatus::Skipped;
  std::vector<SectorReport> sectors;
  bool all_pass = true;  // every executed check passed
};

PipelineResult run_pipeline(const ValidatedDatum& v, const PipelineOptions& opts);

std::string pipeline_to_json(const PipelineResult& r);
void pipeline_to_text(const PipelineResult& r, std::ostream& os);

// flags relevant for the round-trip invariant: parses a report JSON and
// extracts (per sector) the pass/fail strings in a stable order
std::vector<std::string> report_flags_from_json(const std::string& json_text);

}  // namespace qpr
