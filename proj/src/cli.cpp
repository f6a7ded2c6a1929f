#include "qpr/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "qpr/io.hpp"
#include "qpr/report.hpp"

namespace qpr {

namespace {

struct CliSettings {
  std::string input;
  bool json = false;
  long long sector = -1;
  std::string mode = "exact";
  double tolerance = 1e-25;
  long precision = 128;
  std::uint64_t seed = 12345;
  long long max_dim = 4096;
};

void add_common(CLI::App* cmd, CliSettings& s) {
  cmd->add_option("--input", s.input, "path to the input document")->required();
  cmd->add_flag("--json", s.json, "machine-readable output");
  cmd->add_option("--sector", s.sector, "restrict to one sector index");
  cmd->add_option("--mode", s.mode, "verification mode: exact or numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  cmd->add_option("--tolerance", s.tolerance, "numeric verification tolerance");
  cmd->add_option("--precision", s.precision, "numeric precision in bits");
  cmd->add_option("--seed", s.seed, "seed for randomized checks");
  cmd->add_option("--max-dim", s.max_dim, "largest sector dimension the oracle will build");
}

int run_stage(const CliSettings& s, PipelineStage stage, std::ostream& out, std::ostream& err) {
  LiftingDatum datum;
  try {
    datum = load_input_file(s.input);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto rep = validate_datum(datum);
  if (!rep.ok) {
    if (s.json) {
      out << "{\n  \"valid\": false,\n  \"issues\": [\n";
      for (size_t i = 0; i < rep.issues.size(); ++i)
        out << "    \"" << rep.issues[i] << (i + 1 < rep.issues.size() ? "\",\n" : "\"\n");
      out << "  ]\n}\n";
    } else {
      err << "invalid datum:\n";
      for (const auto& issue : rep.issues) err << "  - " << issue << "\n";
    }
    return 2;
  }

  PipelineOptions opts;
  opts.stage = stage;
  opts.mode = s.mode == "numeric" ? VerifyMode::Numeric : VerifyMode::Exact;
  opts.precision = s.precision;
  opts.tolerance = s.tolerance;
  opts.seed = s.seed;
  opts.max_dim = s.max_dim;
  opts.only_sector = s.sector;

  PipelineResult result = run_pipeline(*rep.validated, opts);
  if (s.json)
    out << pipeline_to_json(result) << "\n";
  else
    pipeline_to_text(result, out);
  return result.all_pass ? 0 : 1;
}

int run_validate(const CliSettings& s, std::ostream& out, std::ostream& err) {
  LiftingDatum datum;
  try {
    datum = load_input_file(s.input);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto rep = validate_datum(datum);
  if (!rep.ok) {
    if (s.json) {
      out << "{ \"valid\": false }\n";
    }
    err << "invalid datum:\n";
    for (const auto& issue : rep.issues) err << "  - " << issue << "\n";
    return 2;
  }
  const auto& v = *rep.validated;
  if (s.json) {
    out << "{ \"valid\": true, \"dim_A\": " << v.dim_A << ", \"lambda_order\": "
        << v.lambda.order() << ", \"sectors\": " << v.lambda_dual.size() << " }\n";
  } else {
    out << "valid datum: theta = " << v.datum.theta << ", |Gamma| = " << v.datum.group.order()
        << ", dim A = " << v.dim_A << ", |Lambda| = " << v.lambda.order() << ", "
        << v.lambda_dual.size() << " sectors\n";
    out << "orders r_i:";
    for (long long ri : v.r) out << " " << ri;
    out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"irreducible representations of liftings of quantum planes"};
  app.require_subcommand(1);

  CliSettings s;
  CLI::App* validate = app.add_subcommand("validate", "check a lifting datum");
  CLI::App* sector_cmd = app.add_subcommand("sectors", "list the sector decomposition");
  CLI::App* classify = app.add_subcommand("classify", "classify each sector into cases I..VI");
  CLI::App* reps = app.add_subcommand("reps", "construct the irreducible representations");
  CLI::App* verify = app.add_subcommand("verify", "build and verify relations/irreducibility");
  CLI::App* report = app.add_subcommand("report", "full pipeline including the algebra oracle");
  for (CLI::App* cmd : {validate, sector_cmd, classify, reps, verify, report}) add_common(cmd, s);

  std::vector<const char*> argv;
  argv.push_back("qpr");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(s, out, err);
    if (sector_cmd->parsed() || classify->parsed())
      return run_stage(s, PipelineStage::Classify, out, err);
    if (reps->parsed()) return run_stage(s, PipelineStage::Reps, out, err);
    if (verify->parsed()) return run_stage(s, PipelineStage::Verify, out, err);
    return run_stage(s, PipelineStage::Report, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qpr
