// hwp: solve, verify, survey and oracle commands.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hwp/certificate_io.hpp"
#include "hwp/composer.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

namespace {

using namespace hwp;

// Exit codes are part of the interface; see README.
enum Exit {
  kSolved = 0,
  kFault = 1,
  kImpossible = 2,
  kOpen = 3,
  kOutOfScope = 4,
  kParse = 5,
  kRefused = 6,
};

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Solvable: return kSolved;
    case VerdictKind::ProvenImpossible: return kImpossible;
    case VerdictKind::OpenException: return kOpen;
    case VerdictKind::OutOfPaperScope: return kOutOfScope;
  }
  return kFault;
}

Family family_of(const std::string& tag) {
  auto f = parse_family(tag);
  if (!f) throw CLI::ValidationError("--family", "expected k2cm or cm2m, got " + tag);
  return *f;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct SolveArgs {
  std::string family = "k2cm";
  int v = 0, m = 0, r = -1, s = -1;
  std::string output;
  bool show_plan = false;
};

int run_solve(const SolveArgs& a) {
  ParamRequest q;
  q.family = family_of(a.family);
  q.v = a.v;
  q.m = a.m;
  if (a.r < 0 && a.s < 0) throw CLI::ValidationError("solve", "give --r or --s");
  q.r = a.r >= 0 ? a.r : a.v - 1 - a.s;
  q.s = a.s >= 0 ? a.s : a.v - 1 - a.r;
  const FeasibilityVerdict v = feasibility(q);
  std::cerr << fmt::format("{}: {} ({})\n", to_string(q), to_string(v.kind), v.detail);
  if (v.kind != VerdictKind::Solvable) return exit_for(v.kind);
  if (a.show_plan) std::cerr << describe(plan(q));
  const Certificate c = solve(q);
  // Self-check on the document that is actually written.
  const std::string doc = serialize(c);
  const Certificate back = deserialize(doc);
  const VerificationReport report = check_certificate(back);
  if (!report.accepted()) {
    std::cerr << "self-check failed\n" << describe(report);
    return kFault;
  }
  write_output(a.output, doc);
  return kSolved;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_verify(const std::string& path, const std::string& format) {
  Certificate c;
  try {
    c = deserialize(read_file(path));
  } catch (const ParseError& e) {
    if (format == "json")
      std::cout << nlohmann::json{{"accepted", false}, {"parse_error", {{"location", e.location()}, {"message", e.what()}}}}.dump(2)
                << "\n";
    else
      std::cout << "parse error at " << e.what() << "\n";
    return kParse;
  }
  const VerificationReport report = check_certificate(c);
  if (format == "json") {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : report.failures) {
      nlohmann::json arcs = nlohmann::json::array();
      for (const Arc& a : f.arcs) arcs.push_back({a.tail, a.head});
      failures.push_back({{"factor", f.factor_index}, {"violation", f.violation}, {"arcs", arcs},
                          {"vertices", f.vertices}});
    }
    std::cout << nlohmann::json{{"accepted", report.accepted()}, {"failures", failures}}.dump(2) << "\n";
  } else if (report.accepted()) {
    std::cout << fmt::format("accepted: {} factors on {} vertices\n", c.factors.size(), c.host.order());
  } else {
    std::cout << "rejected\n" << describe(report);
  }
  return report.accepted() ? 0 : 1;
}

int run_survey(const std::string& family, int m, int v_max, const std::string& format, int threads) {
  const auto rows = survey(family_of(family), m, v_max, threads);
  bool ok = true;
  if (format == "csv") std::cout << "v,r,s,verdict,solved,verified,millis\n";
  else std::cout << fmt::format("{:>4} {:>4} {:>4}  {:<12} {:<6} {:<8} {:>9}  {}\n", "v", "r", "s", "verdict", "solved",
                                "verified", "millis", "detail");
  for (const SurveyRow& r : rows) {
    if (r.verdict.kind == VerdictKind::Solvable && !r.verified) ok = false;
    if (format == "csv")
      std::cout << fmt::format("{},{},{},{},{},{},{:.3f}\n", r.v, r.r, r.s, to_string(r.verdict.kind), r.solved,
                               r.verified, r.millis);
    else
      std::cout << fmt::format("{:>4} {:>4} {:>4}  {:<12} {:<6} {:<8} {:>9.3f}  {}\n", r.v, r.r, r.s,
                               to_string(r.verdict.kind), r.solved ? "yes" : "-", r.verified ? "yes" : "-", r.millis,
                               r.error.empty() ? r.verdict.detail : r.error);
  }
  return ok ? 0 : kFault;
}

int run_oracle(int v, const std::string& spec_text, const std::string& mode_text, bool force) {
  auto spec = parse_kind_spec(spec_text);
  if (!spec) throw CLI::ValidationError("--spec", "malformed kind spec \"" + spec_text + "\"");
  const OracleMode mode = mode_text == "count" ? OracleMode::Count : mode_text == "all" ? OracleMode::All
                                                                                      : OracleMode::First;
  OracleResult res;
  try {
    res = exhaustive_factorize(complete_symmetric(v), *spec, mode, {}, force);
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  }
  const bool inconclusive = res.status == OracleStatus::BudgetExceeded;
  const bool found = res.status == OracleStatus::Found || (!inconclusive && res.unordered_count > 0);
  std::cout << fmt::format("{} K{}* {}", inconclusive ? "Inconclusive" : found ? "Found" : "Exhausted", v,
                           format_kind_spec(*spec));
  if (mode != OracleMode::First) std::cout << fmt::format(" unordered={} ordered={}", res.unordered_count, res.ordered_count);
  std::cout << fmt::format(" nodes={}\n", res.nodes);
  if (inconclusive) return kOpen;
  return found ? 0 : kImpossible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed Hamilton-Waterloo factorizations of K_v*"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Construct and verify a factorization of K_v*");
  solve_cmd->add_option("--family", sa.family, "k2cm or cm2m")->required();
  solve_cmd->add_option("--v", sa.v, "order of K_v*")->required();
  solve_cmd->add_option("--m", sa.m, "cycle length m")->required();
  solve_cmd->add_option("--r", sa.r, "number of first-kind factors");
  solve_cmd->add_option("--s", sa.s, "number of second-kind factors");
  solve_cmd->add_option("--output,-o", sa.output, "certificate path (default stdout)");
  solve_cmd->add_flag("--plan", sa.show_plan, "print the composition plan to stderr");

  std::string verify_path, verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate document");
  verify_cmd->add_option("path", verify_path, "certificate JSON")->required();
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  std::string survey_family = "k2cm", survey_format = "table";
  int survey_m = 0, survey_vmax = 0, survey_threads = 0;
  auto* survey_cmd = app.add_subcommand("survey", "Verdicts and solve outcomes for all v <= v-max");
  survey_cmd->add_option("--family", survey_family)->required();
  survey_cmd->add_option("--m", survey_m)->required();
  survey_cmd->add_option("--v-max", survey_vmax)->required();
  survey_cmd->add_option("--format", survey_format)->check(CLI::IsMember({"table", "csv"}));
  survey_cmd->add_option("--threads", survey_threads, "0 = hardware concurrency");

  int oracle_v = 0;
  std::string oracle_spec, oracle_mode = "first";
  bool oracle_force = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive factorization search on K_v*");
  oracle_cmd->add_option("--v", oracle_v)->required();
  oracle_cmd->add_option("--spec", oracle_spec, "e.g. k2x2+c4x1")->required();
  oracle_cmd->add_option("--mode", oracle_mode)->check(CLI::IsMember({"first", "count", "all"}));
  oracle_cmd->add_flag("--force", oracle_force, "lift the K_7* size ceiling");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve_cmd) return run_solve(sa);
    if (*verify_cmd) return run_verify(verify_path, verify_format);
    if (*survey_cmd) return run_survey(survey_family, survey_m, survey_vmax, survey_format, survey_threads);
    if (*oracle_cmd) return run_oracle(oracle_v, oracle_spec, oracle_mode, oracle_force);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ComposerFault& e) {
    std::cerr << "internal fault: " << e.what() << "\n" << e.state() << "\n";
    return kFault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFault;
  }
  return kFault;
}
