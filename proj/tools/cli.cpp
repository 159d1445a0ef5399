#include "cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "etnc/error.hpp"
#include "etnc/pipeline.hpp"

#ifndef ETNC_DEFAULT_DATASET_DIR
#define ETNC_DEFAULT_DATASET_DIR "datasets"
#endif

namespace etnc::cli {

namespace {

int exit_code(const std::string& verdict) {
  if (verdict == "pass") return kExitPass;
  if (verdict == "fail") return kExitFail;
  return kExitInconclusive;
}

struct CommonFlags {
  std::string dataset;
  std::string format = "text";
  std::string route;
  std::string den_bound;
  unsigned n_override = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--dataset", f.dataset, "dataset file")->required();
  cmd->add_option("--format", f.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--den-bound", f.den_bound, "denominator bound for recognition");
  cmd->add_option("--route", f.route, "direct, qhat or gz")->check(CLI::IsMember({"direct", "qhat", "gz"}));
  cmd->add_option("--n-override", f.n_override, "check the congruences modulo p^n")->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "write the report here instead of standard output");
}

VerifyOptions options_from(const CommonFlags& f) {
  VerifyOptions o;
  if (!f.route.empty()) o.route = parse_route(f.route);
  if (!f.den_bound.empty()) {
    Integer b;
    if (b.set_str(f.den_bound, 10) != 0 || b <= 0) fail(Errc::invalid_input, "--den-bound must be a positive integer");
    o.den_bound = b;
  }
  if (f.n_override) o.n_override = f.n_override;
  return o;
}

void write(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(Errc::invalid_input, "cannot write " + path);
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit congruence and BSD checks for elliptic curves over dihedral extensions", "etnc"};
  app.require_subcommand(1);
  CommonFlags verify_flags, bsd_flags;
  auto* verify_cmd = app.add_subcommand("verify", "check condition (i) and the congruences");
  add_common(verify_cmd, verify_flags);
  auto* bsd_cmd = app.add_subcommand("bsd-squares", "Sha predictions and the mod-squares congruence");
  add_common(bsd_cmd, bsd_flags);
  std::string dataset_dir = ETNC_DEFAULT_DATASET_DIR;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in invariant checks");
  selftest_cmd->add_option("--dataset-dir", dataset_dir, "directory holding the bundled datasets");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "etnc: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (selftest_cmd->parsed()) return run_selftest(dataset_dir, out) == 0 ? kExitPass : kExitFail;
    const bool is_verify = verify_cmd->parsed();
    const CommonFlags& f = is_verify ? verify_flags : bsd_flags;
    Dataset d = load_dataset(f.dataset);
    VerifyOptions o = options_from(f);
    VerificationReport r = is_verify ? verify(d, o) : verify_bsd_squares(d, o);
    write(emit_report(r, parse_report_format(f.format)), f.out, out);
    return exit_code(r.verdict);
  } catch (const Error& e) {
    err << "etnc: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace etnc::cli
