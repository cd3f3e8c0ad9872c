// Command-line front end: generate fixtures, validate inputs, run identity
// suites and re-verify reported witnesses.
//
// Exit codes: 0 all requested suites passed; 1..63 number of failed
// suites; 64 usage error; 65 input data error; 70 internal error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moufang/moufang.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

int cmd_gen(const std::string& name, std::uint64_t seed,
            const std::string& out) {
  moufang::InputValue v = moufang::generate_fixture(name, seed);
  moufang::write_file(out, moufang::serialize_input(v));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  moufang::LoadedInput input = moufang::load_input(path);
  std::cout << "file:   " << path << "\n";
  std::cout << "kind:   " << input.kind() << "\n";
  std::cout << "digest: " << moufang::sha256_hex(input.bytes) << "\n";
  if (const auto* b = input.binary()) {
    std::cout << "dim:    " << b->dim << "\n";
    if (b->unit_index)
      std::cout << "unit:   e" << *b->unit_index << "\n";
    else
      std::cout << "unit:   none found\n";
  } else if (const auto* g = input.anticomm()) {
    std::cout << "dim:    " << g->dim << "\n";
  } else if (const auto* p = input.pair()) {
    std::cout << "dim:    " << p->gamma.dim << "\n";
    std::cout << "rep:    " << p->rep_dim << "\n";
    std::cout << "faithful: " << (p->faithful ? "yes" : "no") << "\n";
    for (const auto& f : p->flags)
      std::cout << "flag:   " << f << "\n";
  }
  std::cout << "valid\n";
  return 0;
}

int cmd_check(const std::string& path, const std::vector<std::string>& names,
              std::uint64_t seed, std::uint64_t cap, const std::string& format,
              const std::string& out) {
  moufang::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.cap = cap;
  if (format == "text")
    cfg.format = moufang::SuiteConfig::Format::text;
  else if (format == "machine")
    cfg.format = moufang::SuiteConfig::Format::machine;
  else
    throw moufang::UsageError("unknown format \"" + format +
                              "\" (expected text or machine)");
  for (const auto& n : names) {
    auto s = moufang::parse_suite(n);
    if (!s)
      throw moufang::UsageError("unknown suite \"" + n + "\"");
    cfg.suites.push_back(*s);
  }

  moufang::LoadedInput input = moufang::load_input(path);
  moufang::RunReport report = moufang::run_suites(input, cfg);
  std::string rendered = cfg.format == moufang::SuiteConfig::Format::machine
                             ? moufang::render_machine(report)
                             : moufang::render_text(report);
  if (out.empty())
    std::cout << rendered;
  else
    moufang::write_file(out, rendered);
  return static_cast<int>(report.failed_suites);
}

int cmd_verify_witness(const std::string& report_path, std::uint64_t index) {
  std::string bytes = moufang::read_file(report_path);
  moufang::ReportWitness w = moufang::find_witness(bytes, index);

  moufang::LoadedInput input = moufang::load_input(w.input_path);
  std::string digest = moufang::sha256_hex(input.bytes);
  if (digest != w.input_digest) {
    std::cerr << "input file " << w.input_path
              << " no longer matches the report digest\n";
    return kExitData;
  }

  auto [lhs, rhs] = moufang::recompute_witness(input, w.identity, w.tuple);
  bool same = lhs == w.lhs && rhs == w.rhs;
  std::cout << "witness " << index << " [" << w.identity << "] of suite "
            << w.suite << ", tuple (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i)
    std::cout << (i ? ", " : "") << w.tuple[i];
  std::cout << ")\n";
  std::cout << (same ? "reproduced: recomputed values match the report"
                     : "MISMATCH: recomputed values differ from the report")
            << "\n";
  return same ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for Moufang-Mal'tsev operator identities"};
  app.set_version_flag("--version", std::string(moufang::kToolName) + " " +
                                        moufang::kVersion);
  app.require_subcommand(1);

  std::string gen_name, gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a named algebra fixture");
  gen->add_option("name", gen_name, "One of: quaternions, octonions, "
                                    "split-octonions, sedenions, lie-cross, "
                                    "random-anticomm")
      ->required();
  gen->add_option("--seed", gen_seed, "Seed for random-anticomm");
  gen->add_option("--out", gen_out, "Output file")->required();

  std::string validate_path;
  auto* validate =
      app.add_subcommand("validate", "Parse and shape-check an input file");
  validate->add_option("file", validate_path)->required();

  std::string check_path, check_format = "text", check_out;
  std::vector<std::string> check_suites;
  std::uint64_t check_seed = 0, check_cap = 10000;
  auto* check = app.add_subcommand("check", "Run identity suites");
  check->add_option("file", check_path)->required();
  check->add_option("--suite", check_suites, "Comma-separated suite names")
      ->required()
      ->delimiter(',');
  check->add_option("--seed", check_seed, "Sampling seed");
  check->add_option("--cap", check_cap, "Sampling cap for quadruple checks")
      ->check(CLI::PositiveNumber);
  check->add_option("--format", check_format, "text | machine");
  check->add_option("--out", check_out, "Write the report to a file");

  std::string vw_report;
  std::uint64_t vw_index = 0;
  auto* vw = app.add_subcommand("verify-witness",
                                "Recompute one witness from a machine report");
  vw->add_option("report", vw_report)->required();
  vw->add_option("--index", vw_index, "Global witness index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_name, gen_seed, gen_out);
    if (validate->parsed())
      return cmd_validate(validate_path);
    if (check->parsed())
      return cmd_check(check_path, check_suites, check_seed, check_cap,
                       check_format, check_out);
    if (vw->parsed())
      return cmd_verify_witness(vw_report, vw_index);
    return kExitUsage;
  } catch (const moufang::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const moufang::ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitData;
  } catch (const moufang::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
