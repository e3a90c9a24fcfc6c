#include "cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fairdiv/additive_alg.h"
#include "fairdiv/completion.h"
#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/instance_json.h"
#include "fairdiv/oracle.h"
#include "fairdiv/subadditive_alg.h"
#include "fairdiv/verify.h"
#include "sweep.h"

namespace fairdiv::cli {
namespace {

using nlohmann::json;

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInstanceError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInstanceError("'" + path + "': " + e.what());
  }
}

void WriteText(const std::string& text, const std::string& path,
               std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw PreconditionError("cannot write '" + path + "'");
  file << text;
}

json Reports(const std::vector<GuaranteeReport>& reports) {
  json out = json::array();
  for (const GuaranteeReport& r : reports) out.push_back(ReportToJson(r));
  return out;
}

bool AllPass(const std::vector<GuaranteeReport>& reports) {
  for (const GuaranteeReport& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

struct GenArgs {
  std::string family;
  std::string alpha = "1/2";
  std::string eps = "1/100";
  int n = 2;
  int m = 4;
  long long big_n = 16;
  int max_value = 10;
  int clauses = 3;
  int cap = 15;
  unsigned long long seed = 0;
  std::string out;
};

int CmdGen(const GenArgs& a, std::ostream& out) {
  const json spec = {{"family", a.family}, {"alpha", a.alpha},
                     {"eps", a.eps},       {"n", a.n},
                     {"m", a.m},           {"N", a.big_n},
                     {"max_value", a.max_value}, {"clauses", a.clauses},
                     {"cap", a.cap},       {"seed", a.seed}};
  const Instance instance = Generate(GeneratorSpecFromJson(spec));
  WriteText(InstanceToJson(instance).dump(2) + "\n", a.out, out);
  return kExitOk;
}

json ClassJson(const ClassReport& report) {
  json j;
  j["ok"] = report.ok();
  if (!report.ok()) {
    j["agent"] = report.agent;
    j["s"] = report.s.Items();
    j["t"] = report.t.Items();
    j["message"] = report.message;
  }
  return j;
}

int CmdCheckInstance(const std::string& path, std::ostream& out) {
  const Instance instance = LoadInstanceFile(path);
  json classes;
  for (ValuationClass c : {ValuationClass::kAdditive,
                           ValuationClass::kSubadditive,
                           ValuationClass::kMonotone}) {
    classes[std::string(ClassName(c))] = ClassJson(CheckClass(instance, c));
  }
  const json j = {{"n", instance.n()},
                  {"m", instance.m()},
                  {"declared_class",
                   std::string(ClassName(instance.declared_class()))},
                  {"classes", classes}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int CmdMnw(const std::string& path, bool plain, std::ostream& out) {
  const Instance instance = LoadInstanceFile(path);
  const MnwResult r = ExactMnw(
      instance, plain ? SearchMode::kPlain : SearchMode::kBranchAndBound);
  out << MnwResultToJson(r).dump(2) << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string path;
  std::string alg = "additive";
  std::string alpha;
  bool complete = false;
  bool trace = false;
  bool verify_all = false;
};

int CmdSolve(const SolveArgs& a, std::ostream& out) {
  const Instance instance = LoadInstanceFile(a.path);
  const Ratio alpha = Ratio::Parse(a.alpha);
  const Ratio beta = Ratio(1) / (alpha + Ratio(1));
  json j = {{"algorithm", a.alg},
            {"alpha", alpha.ToString()},
            {"complete_requested", a.complete}};
  std::vector<GuaranteeReport> reports;
  if (a.alg == "additive") {
    if (a.complete) {
      PipelineResult r = PipelineAdditive(
          instance, alpha, {.mms_family = a.verify_all});
      if (a.trace) {
        j["trace"] = AdditiveTraceToJson(
            Algorithm1(instance, r.mnw.allocation, alpha).state);
      }
      j["mnw"] = MnwResultToJson(r.mnw);
      j["partial"] = AllocationToJson(r.partial);
      j["allocation"] = AllocationToJson(r.allocation);
      j["skipped"] = r.skipped;
      reports = std::move(r.reports);
    } else {
      const MnwResult mnw = ExactMnw(instance);
      Algorithm1Result r = Algorithm1(instance, mnw.allocation, alpha);
      if (a.trace) j["trace"] = AdditiveTraceToJson(r.state);
      j["mnw"] = MnwResultToJson(mnw);
      j["allocation"] = AllocationToJson(r.allocation);
      reports = {IsAlphaEfx(instance, r.allocation, alpha),
                 IsEf1(instance, r.allocation),
                 IsBetaMnw(instance, r.allocation, beta, mnw.product)};
    }
  } else if (a.alg == "subadditive") {
    if (a.complete) {
      PipelineResult r = PipelineSubadditive(instance, alpha);
      if (a.trace) {
        j["trace"] = SubTraceToJson(
            Algorithm2(instance, r.mnw.allocation, alpha).state);
      }
      j["mnw"] = MnwResultToJson(r.mnw);
      j["partial"] = AllocationToJson(r.partial);
      j["allocation"] = AllocationToJson(r.allocation);
      reports = std::move(r.reports);
    } else {
      const MnwResult mnw = ExactMnw(instance);
      Algorithm2Result r = Algorithm2(instance, mnw.allocation, alpha);
      if (a.trace) j["trace"] = SubTraceToJson(r.state);
      j["mnw"] = MnwResultToJson(mnw);
      j["allocation"] = AllocationToJson(r.allocation);
      reports = {IsAlphaEfx(instance, r.allocation, alpha),
                 IsBetaMnw(instance, r.allocation, beta, mnw.product)};
    }
  } else if (a.alg == "additive-restart") {
    if (a.complete) {
      throw PreconditionError("--complete is not available for "
                              "additive-restart");
    }
    const MnwResult mnw = ExactMnw(instance);
    Algorithm7Result r = Algorithm7(instance, mnw.allocation, alpha, Ratio(1));
    if (a.trace) {
      json products = json::array();
      for (const Ratio& p : r.products) products.push_back(RatioToJson(p));
      j["trace"] = {{"iterations", r.iterations}, {"products", products}};
    }
    j["mnw"] = MnwResultToJson(mnw);
    j["allocation"] = AllocationToJson(r.allocation);
    reports = {IsAlphaEfx(instance, r.allocation, alpha),
               IsBetaMnw(instance, r.allocation, beta, mnw.product)};
  } else {
    throw PreconditionError("unknown --alg '" + a.alg + "'");
  }
  int code = kExitOk;
  if (a.verify_all) {
    j["reports"] = Reports(reports);
    j["all_pass"] = AllPass(reports);
    if (!AllPass(reports)) code = kExitViolation;
  }
  out << j.dump(2) << "\n";
  return code;
}

struct VerifyArgs {
  std::string instance_path;
  std::string allocation_path;
  std::string efx;
  bool ef1 = false;
  std::string mnw;
  std::string separation;
  std::string mms;
  std::string pmms;
  std::string gmms;
};

int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  const Instance instance = LoadInstanceFile(a.instance_path);
  Allocation x =
      AllocationFromJson(ReadJsonFile(a.allocation_path), instance.m());
  RequireCompatible(instance, x);
  std::vector<GuaranteeReport> reports;
  if (!a.efx.empty()) {
    reports.push_back(IsAlphaEfx(instance, x, Ratio::Parse(a.efx)));
  }
  if (a.ef1) reports.push_back(IsEf1(instance, x));
  if (!a.mnw.empty()) {
    const MnwResult opt = ExactMnw(instance);
    reports.push_back(IsBetaMnw(instance, x, Ratio::Parse(a.mnw), opt.product));
  }
  if (!a.separation.empty()) {
    reports.push_back(
        IsGammaSeparated(instance, x, Ratio::Parse(a.separation)));
  }
  if (!a.mms.empty()) {
    reports.push_back(IsAlphaMms(instance, x, Ratio::Parse(a.mms)));
  }
  if (!a.pmms.empty()) {
    reports.push_back(IsAlphaPmms(instance, x, Ratio::Parse(a.pmms)));
  }
  if (!a.gmms.empty()) {
    reports.push_back(IsAlphaGmms(instance, x, Ratio::Parse(a.gmms)));
  }
  if (reports.empty()) {
    throw PreconditionError("no property requested; see verify --help");
  }
  const json j = {{"reports", Reports(reports)},
                  {"all_pass", AllPass(reports)}};
  out << j.dump(2) << "\n";
  return AllPass(reports) ? kExitOk : kExitCheckFailed;
}

int CmdSweep(const std::string& path, bool timing, const std::string& out_path,
             std::ostream& out) {
  const std::vector<SweepRow> rows = RunSweep(ReadJsonFile(path), timing);
  std::string text = SweepCsvHeader();
  for (const SweepRow& row : rows) text += SweepCsvLine(row);
  WriteText(text, out_path, out);
  return kExitOk;
}

struct CertifyArgs {
  std::string family = "theorem4";
  std::string alpha = "1/2";
  std::string eps = "1/100";
  int n = 2;
  long long big_n = 16;
};

int CmdCertify(const CertifyArgs& a, std::ostream& out) {
  ImpossibilityCertificate cert = [&] {
    if (a.family == "theorem4") {
      return CertifyTheorem4(Ratio::Parse(a.alpha), Ratio::Parse(a.eps), a.n);
    }
    if (a.family == "theorem5") return CertifyTheorem5(a.big_n);
    throw PreconditionError("unknown family '" + a.family +
                            "', expected theorem4 or theorem5");
  }();
  out << CertificateToJson(cert).dump(2) << "\n";
  return cert.matches_closed_form ? kExitOk : kExitViolation;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fair division of indivisible goods: EFX and Nash welfare"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family,
                      "example1, theorem4, theorem5, random_additive, xos, "
                      "budget_additive")
      ->required();
  gen_cmd->add_option("--alpha", gen.alpha, "theorem4 alpha (p/q)");
  gen_cmd->add_option("--eps", gen.eps, "theorem4 epsilon (p/q)");
  gen_cmd->add_option("--n", gen.n, "Agents");
  gen_cmd->add_option("--m", gen.m, "Items");
  gen_cmd->add_option("--N", gen.big_n, "theorem5 parameter (perfect square)");
  gen_cmd->add_option("--max-value", gen.max_value, "Largest random value");
  gen_cmd->add_option("--clauses", gen.clauses, "XOS clauses");
  gen_cmd->add_option("--cap", gen.cap, "Budget-additive cap");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  std::string check_path;
  CLI::App* check_cmd = app.add_subcommand(
      "check-instance", "Validate an instance and test each valuation class");
  check_cmd->add_option("instance", check_path, "Instance JSON")->required();

  std::string mnw_path;
  bool mnw_plain = false;
  CLI::App* mnw_cmd =
      app.add_subcommand("mnw", "Exact maximum Nash welfare allocation");
  mnw_cmd->add_option("instance", mnw_path, "Instance JSON")->required();
  mnw_cmd->add_flag("--plain", mnw_plain, "Disable branch and bound");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run an algorithm");
  solve_cmd->add_option("instance", solve.path, "Instance JSON")->required();
  solve_cmd->add_option("--alg", solve.alg, "additive, subadditive or "
                                            "additive-restart");
  solve_cmd->add_option("--alpha", solve.alpha, "alpha as p/q")->required();
  solve_cmd->add_flag("--complete", solve.complete,
                      "Complete the allocation");
  solve_cmd->add_flag("--trace", solve.trace, "Emit the iteration trace");
  solve_cmd->add_flag("--verify-all", solve.verify_all,
                      "Attach every applicable guarantee report");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check an allocation against properties");
  verify_cmd->add_option("instance", verify.instance_path, "Instance JSON")
      ->required();
  verify_cmd->add_option("allocation", verify.allocation_path,
                         "Allocation JSON {\"bundles\": [[...], ...]}")
      ->required();
  verify_cmd->add_option("--efx", verify.efx, "alpha-EFX with this alpha");
  verify_cmd->add_flag("--ef1", verify.ef1, "EF1");
  verify_cmd->add_option("--mnw", verify.mnw,
                         "beta-MNW against the exact optimum");
  verify_cmd->add_option("--separation", verify.separation,
                         "gamma-separation against unallocated items");
  verify_cmd->add_option("--mms", verify.mms, "alpha-MMS");
  verify_cmd->add_option("--pmms", verify.pmms, "alpha-PMMS");
  verify_cmd->add_option("--gmms", verify.gmms, "alpha-GMMS");

  std::string sweep_path;
  std::string sweep_out;
  bool no_timing = false;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Batch alpha-versus-beta sweep as CSV");
  sweep_cmd->add_option("spec", sweep_path, "Sweep spec JSON")->required();
  sweep_cmd->add_flag("--no-timing", no_timing,
                      "Write NA in time_ms for byte-stable output");
  sweep_cmd->add_option("--out", sweep_out, "Output file (default stdout)");

  CertifyArgs certify;
  CLI::App* certify_cmd = app.add_subcommand(
      "certify-impossibility",
      "Brute-force the EFX versus Nash welfare gap on a hard family");
  certify_cmd->add_option("--family", certify.family, "theorem4 or theorem5");
  certify_cmd->add_option("--alpha", certify.alpha, "theorem4 alpha (p/q)");
  certify_cmd->add_option("--eps", certify.eps, "theorem4 epsilon (p/q)");
  certify_cmd->add_option("--n", certify.n, "theorem4 agents");
  certify_cmd->add_option("--N", certify.big_n, "theorem5 parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*check_cmd) return CmdCheckInstance(check_path, out);
    if (*mnw_cmd) return CmdMnw(mnw_path, mnw_plain, out);
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*sweep_cmd) return CmdSweep(sweep_path, !no_timing, sweep_out, out);
    if (*certify_cmd) return CmdCertify(certify, out);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const MalformedInstanceError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace fairdiv::cli
