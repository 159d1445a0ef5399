#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "etnc/dataset.hpp"
#include "etnc/error.hpp"
#include "etnc/pipeline.hpp"
#include "etnc/report.hpp"

using namespace etnc;

namespace {

std::string dataset_path(const std::string& name) { return std::string(ETNC_TEST_DATASET_DIR) + "/" + name + ".json"; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "etnc");
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("text report for 37a1") {
  Run r = run({"verify", "--dataset", dataset_path("37a1")});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("  S(1) = -16184/577, v_7 = 1  [computed]") != std::string::npos);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--dataset", dataset_path("21a1")}).code == cli::kExitPass);
  CHECK(run({"bsd-squares", "--dataset", dataset_path("21a1")}).code == cli::kExitPass);
  Run missing = run({"verify", "--dataset", "/nonexistent.json"});
  CHECK(missing.code == cli::kExitError);
  CHECK(missing.err.find("data-error") != std::string::npos);
  CHECK(run({"verify", "--dataset", dataset_path("37a1"), "--route", "bogus"}).code == cli::kExitError);
  CHECK(run({"verify", "--dataset", dataset_path("37a1"), "--route", "gz"}).code != cli::kExitPass);
}

TEST_CASE("verdict follows the data") {
  Dataset d = load_dataset(dataset_path("37a1"));
  d.analytic.characters[epsilon_character()].qhat = DecimalInput{"5.0000000000000", "1e-12"};
  CHECK(verify(d).verdict == "fail");
  Dataset noisy = load_dataset(dataset_path("37a1"));
  noisy.analytic.characters[epsilon_character()].qhat = DecimalInput{"4.0000000000000", "0.4"};
  CHECK(verify(noisy).verdict == "inconclusive");
  Dataset orders = load_dataset(dataset_path("37a1"));
  orders.analytic.characters[epsilon_character()].order = 1;
  CHECK(verify(orders).verdict == "inconclusive");
}

TEST_CASE("structured report round trip") {
  for (const char* name : {"37a1", "21a1"}) {
    Dataset d = load_dataset(dataset_path(name));
    for (const auto& rep : {verify(d), verify_bsd_squares(d)}) {
      std::string s = emit_report(rep, ReportFormat::structured);
      VerificationReport back = parse_structured_report(s);
      CHECK(back == rep);
      CHECK(emit_report(back, ReportFormat::structured) == s);
    }
  }
  CHECK_THROWS_AS(parse_structured_report("{\"verdict\": 3}"), Error);
}

TEST_CASE("output is deterministic") {
  for (const char* fmt : {"text", "structured"}) {
    Run a = run({"verify", "--dataset", dataset_path("21a1"), "--format", fmt});
    Run b = run({"verify", "--dataset", dataset_path("21a1"), "--format", fmt});
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("selftest") {
  std::ostringstream out;
  CHECK(cli::run_selftest(ETNC_TEST_DATASET_DIR, out) == 0);
}
