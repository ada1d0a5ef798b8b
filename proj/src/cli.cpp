#include "anglegauge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "anglegauge/eps.hpp"
#include "anglegauge/verify.hpp"

namespace anglegauge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json eps_report_json(const EpsReport& r) {
  ordered_json j;
  j["c"] = r.c;
  j["op_norm"] = r.op_norm;
  j["min_mod"] = r.min_mod;
  j["eps_hat"] = r.eps_hat;
  j["degenerate"] = r.degenerate;
  if (r.empirical_sup) j["empirical_sup"] = *r.empirical_sup;
  if (r.samples) j["samples"] = *r.samples;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

ordered_json check_json(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  j["c"] = c.c;
  j["status"] = status_name(c.status);
  j["passed"] = c.passed();
  j["measured"] = c.measured;
  j["threshold"] = c.threshold;
  j["detail"] = c.detail;
  return j;
}

void emit(const ordered_json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

int run_analyze(const CliConfig& cfg, const Matrix& m, std::ostream& out) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["matrix_digest"] = matrix_digest(m);
  doc["command"] = "analyze";
  doc["reports"] = ordered_json::array();
  for (double cv : cfg.c_values) {
    const AngleConstant c(cv);
    EpsReport r = eps_hat(m, c);
    if (cfg.samples > 0 && !r.degenerate) {
      r.empirical_sup = eps_hat_empirical(m, c, cfg.samples, cfg.seed, false);
      r.samples = cfg.samples;
      r.seed = cfg.seed;
    }
    doc["reports"].push_back(eps_report_json(r));
  }
  if (cfg.output == CliConfig::Output::text) {
    for (const auto& r : doc["reports"])
      out << "c=" << r["c"].dump() << "  eps_hat=" << r["eps_hat"].dump()
          << "  op_norm=" << r["op_norm"].dump()
          << "  min_mod=" << r["min_mod"].dump()
          << (r["degenerate"].get<bool>() ? "  (degenerate)" : "") << "\n";
  } else {
    emit(doc, out);
  }
  return 0;
}

int run_witness(const CliConfig& cfg, const Matrix& m, std::ostream& out) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["matrix_digest"] = matrix_digest(m);
  doc["command"] = "witness";
  doc["witnesses"] = ordered_json::array();
  for (double cv : cfg.c_values) {
    const AngleConstant c(cv);
    const Witness w = extremal_witness(m, c);
    ordered_json j;
    j["c"] = cv;
    j["u"] = w.u;
    j["v"] = w.v;
    j["image_cosine"] = cosine(m.apply(w.u), m.apply(w.v));
    j["value"] = w.value;
    doc["witnesses"].push_back(std::move(j));
  }
  if (cfg.output == CliConfig::Output::text) {
    for (const auto& w : doc["witnesses"])
      out << "c=" << w["c"].dump() << "  value=" << w["value"].dump()
          << "  u=" << w["u"].dump() << "  v=" << w["v"].dump() << "\n";
  } else {
    emit(doc, out);
  }
  return 0;
}

int run_verify(const CliConfig& cfg, const Matrix& m, std::ostream& out) {
  const VerificationReport rep =
      full_report(m, cfg.c_values, cfg.seed, cfg.samples);
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["matrix_digest"] = rep.matrix_digest;
  doc["command"] = "verify";
  doc["c_values"] = rep.c_values;
  doc["seed"] = rep.seed;
  doc["samples"] = rep.samples;
  doc["reports"] = ordered_json::array();
  for (const auto& r : rep.eps_reports) doc["reports"].push_back(eps_report_json(r));
  doc["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) doc["checks"].push_back(check_json(c));
  doc["all_passed"] = rep.all_passed();
  if (cfg.output == CliConfig::Output::text) {
    for (const auto& c : rep.checks)
      out << status_name(c.status) << "  " << c.name << " (c=" << c.c
          << ")  measured=" << c.measured << " threshold=" << c.threshold
          << "\n";
    out << (rep.all_passed() ? "ALL PASSED" : "FAILURES PRESENT") << "\n";
  } else {
    emit(doc, out);
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.c_values.empty()) throw DomainError("at least one --c value is required");
    for (double cv : cfg.c_values) AngleConstant validate(cv);
    const Matrix m = parse_matrix(cfg.matrix_path, cfg.format);
    switch (cfg.command) {
      case CliConfig::Command::analyze: return run_analyze(cfg, m, out);
      case CliConfig::Command::witness: return run_witness(cfg, m, out);
      case CliConfig::Command::verify: return run_verify(cfg, m, out);
    }
    return 2;
  } catch (const Error& e) {
    if (cfg.output == CliConfig::Output::json) {
      ordered_json doc;
      doc["error"]["type"] = e.kind();
      doc["error"]["message"] = e.what();
      emit(doc, out);
    }
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"angle preservation analysis of real linear maps", "angle-gauge"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format;
  std::string output = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--matrix", cfg.matrix_path, "matrix file path")->required();
    sub->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--c", cfg.c_values, "angle cosine in (-1,1); repeatable");
    sub->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  add_common(app.add_subcommand("analyze", "closed-form and empirical eps_hat"));
  add_common(app.add_subcommand("witness", "extremal witness pair"));
  add_common(app.add_subcommand("verify", "full property verification report"));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (app.got_subcommand("analyze")) cfg.command = CliConfig::Command::analyze;
  if (app.got_subcommand("witness")) cfg.command = CliConfig::Command::witness;
  if (app.got_subcommand("verify")) cfg.command = CliConfig::Command::verify;
  if (format == "csv") cfg.format = MatrixFormat::csv;
  if (format == "json") cfg.format = MatrixFormat::json;
  cfg.output = output == "text" ? CliConfig::Output::text : CliConfig::Output::json;

  return run(cfg, out, err);
}

}  // namespace anglegauge
