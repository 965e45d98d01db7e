#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbit/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code = orbit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORBIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST(CliClassifyIterates, ContractionConvergesToTheFixedPoint) {
  auto r = run_cli({"classify-iterates", data("contraction.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["command"], "classify-iterates");
  EXPECT_EQ(d["scalar_mode"], "exact");
  EXPECT_EQ(d["verdict"]["kind"], "ConvergesToConstant");
  EXPECT_EQ(d["verdict"]["limit"], json::parse(R"([["2"]])"));
  EXPECT_EQ(d["verdict"]["blocks"][0]["case"], "Case 4: |lambda|<1");
  EXPECT_TRUE(d["closed_form_check"]["agrees"].get<bool>());
  EXPECT_FALSE(d["oracle"]["trend"]["diverges"].get<bool>());
}

TEST(CliClassifyIterates, ReadsTheSpecFromStdin) {
  const std::string text = slurp(data("rotation.json"));
  auto dash = run_cli({"classify-iterates", "-"}, text);
  auto omitted = run_cli({"classify-iterates"}, text);
  auto file = run_cli({"classify-iterates", data("rotation.json")});
  ASSERT_EQ(dash.code, 0) << dash.err;
  EXPECT_EQ(dash.out, file.out);
  EXPECT_EQ(omitted.out, file.out);
  auto d = file.doc();
  EXPECT_EQ(d["verdict"]["kind"], "BoundedAwayFromZero");
  EXPECT_TRUE(d["verdict"]["linear"].get<bool>());
}

TEST(CliClassifyIterates, MixedSystemIsBounded) {
  auto r = run_cli({"classify-iterates", data("mixed.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["verdict"]["kind"], "Bounded");
  EXPECT_EQ(d["verdict"]["blocks"].size(), 3u);
  EXPECT_EQ(d["expansion"].size(), 3u);
  EXPECT_EQ(d["oracle"]["horizon"], 200);
}

TEST(CliClassifyIterates, FloatModeSkipsTheExactCheck) {
  auto r = run_cli({"classify-iterates", data("float.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["scalar_mode"], "float");
  EXPECT_FALSE(d.contains("closed_form_check"));
  EXPECT_EQ(d["verdict"]["kind"], "Bounded");
}

TEST(CliClassifyIterates, TailIsReportedAndAppended) {
  auto r = run_cli({"classify-iterates", data("tail_diagonal.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["verdict"]["kind"], "BoundedAwayFromZero");
  EXPECT_EQ(d["tail"]["kind"], "diagonal");
  EXPECT_EQ(d["tail"]["truncation"], 32);
  EXPECT_EQ(d["verdict"]["blocks"].back()["case"], "tail: property (P) contraction");

  auto shift = run_cli({"classify-iterates", data("tail_shift.json")});
  ASSERT_EQ(shift.code, 0) << shift.err;
  EXPECT_EQ(shift.doc()["verdict"]["kind"], "ConvergesToConstant");
  EXPECT_EQ(shift.doc()["tail"]["N"], 3);
}

TEST(CliClassifyAverages, Verdicts) {
  auto mixed = run_cli({"classify-averages", data("mixed.json")});
  ASSERT_EQ(mixed.code, 0) << mixed.err;
  EXPECT_EQ(mixed.doc()["verdict"]["kind"], "ConvergesToConstant");
  EXPECT_TRUE(mixed.doc()["closed_form_check"]["agrees"].get<bool>());

  auto rotation = run_cli({"classify-averages", data("rotation.json")});
  EXPECT_EQ(rotation.doc()["verdict"]["kind"], "ConvergesToZero");

  auto chain = run_cli({"classify-averages", data("unit_chain.json")});
  EXPECT_EQ(chain.doc()["verdict"]["kind"], "ConvergesToConstant");
  EXPECT_EQ(chain.doc()["verdict"]["blocks"][0]["case"], "Case 3: lambda=1");

  auto tail = run_cli({"classify-averages", data("tail_diagonal.json")});
  ASSERT_EQ(tail.code, 0) << tail.err;
  EXPECT_EQ(tail.doc()["verdict"]["kind"], "ConvergesToZero");
}

TEST(CliClosedForm, EvaluatesAndChecksAgainstIteration) {
  auto r = run_cli({"closed-form", data("mixed.json"), "--k", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["k"], 10);
  EXPECT_EQ(d["value"][0], json::parse(R"(["1", "-1"])"));
  EXPECT_EQ(d["value"][2], json::parse(R"(["3", "0"])"));
  EXPECT_TRUE(d["oracle_check"]["agrees"].get<bool>());

  auto late = run_cli({"closed-form", data("contraction.json"), "--k", "6000"});
  ASSERT_EQ(late.code, 0) << late.err;
  EXPECT_TRUE(late.doc()["oracle_check"].is_string());
}

TEST(CliClosedForm, RejectsIndicesBelowTheThreshold) {
  auto r = run_cli({"closed-form", data("mixed.json"), "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("error: k: "), std::string::npos) << r.err;
}

TEST(CliFixedPoint, SolvesAndChecks) {
  auto r = run_cli({"fixed-point", data("mixed.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["fixed_point"][0], json::parse(R"(["1", "-1"])"));
  EXPECT_EQ(d["fixed_point"][1], json::parse(R"([["1/2", "1/2"]])"));
  EXPECT_TRUE(d["check"]["holds"].get<bool>());
}

TEST(CliFixedPoint, UnitEigenvalueWithDriftHasNone) {
  auto r = run_cli({"fixed-point", data("no_fixed_point.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: c: "), std::string::npos) << r.err;
}

TEST(CliOracle, ExactAndFloat) {
  auto exact = run_cli({"oracle", data("mixed.json"), "--max-k", "40"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  auto d = exact.doc();
  EXPECT_TRUE(d["agrees"].get<bool>());
  EXPECT_EQ(d["tolerance"], "0 (exact)");
  EXPECT_EQ(d["iterates"]["mismatches"], 0);

  auto fl = run_cli({"oracle", data("float.json"), "--max-k", "300", "--tol", "1e-8"});
  ASSERT_EQ(fl.code, 0) << fl.err;
  EXPECT_TRUE(fl.doc()["agrees"].get<bool>());
  EXPECT_LT(fl.doc()["iterates"]["max_error"].get<double>(), 1e-8);

  auto tail = run_cli({"oracle", data("tail_shift.json"), "--max-k", "50"});
  ASSERT_EQ(tail.code, 0) << tail.err;
  EXPECT_TRUE(tail.doc().contains("property_p"));
}

TEST(CliVerifyIdentities, SmallGridPasses) {
  auto r = run_cli({"verify-identities", "--max-k", "14", "--max-j", "5", "--trials", "3", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_TRUE(d["all_pass"].get<bool>());
  EXPECT_EQ(d["seed"], 9);
  ASSERT_EQ(d["table"].size(), 10u);
  for (const auto& row : d["table"]) {
    EXPECT_GT(row["cases"].get<long>(), 0) << row["identity"];
    EXPECT_EQ(row["failures"], 0) << row["identity"];
  }
}

TEST(CliGallery, Examples) {
  auto one = run_cli({"gallery", "example1"});
  ASSERT_EQ(one.code, 0) << one.err;
  auto d1 = one.doc();
  const std::vector<long> listed{2, 4, 8, 12, 18, 24, 32, 40};
  auto unit = d1["unit_norm_indices"].get<std::vector<long>>();
  for (long k : listed) EXPECT_NE(std::find(unit.begin(), unit.end(), k), unit.end()) << k;
  EXPECT_EQ(d1["tends_to_zero"][0]["norm"], "1/2");
  EXPECT_EQ(d1["tends_to_infinity"][0]["norm"], "2");

  auto two = run_cli({"gallery", "example2"});
  ASSERT_EQ(two.code, 0) << two.err;
  EXPECT_TRUE(two.doc()["check"]["holds"].get<bool>());
  EXPECT_EQ(two.doc()["verdict"]["kind"], "Bounded");

  auto three = run_cli({"gallery", "example3"});
  ASSERT_EQ(three.code, 0) << three.err;
  EXPECT_TRUE(three.doc()["check"]["holds"].get<bool>());
  EXPECT_EQ(three.doc()["verdict"]["kind"], "Bounded");
  EXPECT_NEAR(three.doc()["max_average_norm"]["norm"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(CliErrors, SpecErrorsNameTheField) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"bad_unknown_field.json", "error: colour: unknown field"},
      {"bad_float_in_exact.json", "error: blocks[0].lambda: "},
      {"bad_segment_length.json", "error: x[0]: "},
      {"bad_tail_weights.json", "error: tail.weights: "},
      {"bad_malformed.json", "error: malformed JSON"},
  };
  for (const auto& [file, prefix] : cases) {
    for (const char* command : {"classify-iterates", "classify-averages", "fixed-point"}) {
      auto r = run_cli({command, data(file)});
      EXPECT_EQ(r.code, 1) << file;
      EXPECT_EQ(r.out, "") << file;
      EXPECT_EQ(r.err.rfind(prefix, 0), 0u) << file << ": " << r.err;
    }
  }
  auto missing = run_cli({"classify-iterates", data("no_such_file.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("error: spec: cannot read", 0), 0u) << missing.err;
}

TEST(CliErrors, InlineSpecErrors) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {R"({})", "error: blocks: missing"},
      {R"({"blocks": [{"size": 1}]})", "error: blocks[0].lambda: missing"},
      {R"({"blocks": [{"lambda": "1/0", "size": 1}]})", "error: blocks[0].lambda: "},
      {R"({"blocks": [{"lambda": "2", "size": 0}]})", "error: blocks[0].size: "},
      {R"({"scalar_mode": "fuzzy", "blocks": []})", "error: scalar_mode: "},
      {R"({"blocks": [], "tail": {"r": "1"}})", "error: tail.r: "},
      {R"({"blocks": [], "tail": {"kind": "spiral"}})", "error: tail.kind: "},
      {R"({"blocks": [], "tail": {"truncation": 2, "x": ["1", "2", "3"]}})", "error: tail.x: "},
  };
  for (const auto& [text, prefix] : cases) {
    auto r = run_cli({"classify-iterates", "-"}, text);
    EXPECT_EQ(r.code, 1) << text;
    EXPECT_EQ(r.err.rfind(prefix, 0), 0u) << text << " -> " << r.err;
  }
}

TEST(CliErrors, CommandLineErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"oracle", data("mixed.json")}).code, 1);
  EXPECT_EQ(run_cli({"oracle", data("mixed.json"), "--max-k", "0"}).code, 1);
  EXPECT_EQ(run_cli({"closed-form", data("mixed.json")}).code, 1);
  EXPECT_EQ(run_cli({"gallery", "example4"}).code, 1);
  EXPECT_EQ(run_cli({"verify-identities", "--max-k", "1"}).code, 1);
  auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("classify-iterates"), std::string::npos);
}

TEST(CliOutput, DeterministicAndFlagsBehave) {
  const std::vector<std::vector<std::string>> commands{
      {"classify-iterates", data("mixed.json")},
      {"classify-averages", data("tail_shift.json")},
      {"closed-form", data("mixed.json"), "--k", "25"},
      {"oracle", data("float.json"), "--max-k", "100"},
      {"verify-identities", "--max-k", "12", "--max-j", "4", "--trials", "2"},
      {"gallery", "example1"},
  };
  for (const auto& args : commands) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    ASSERT_EQ(first.code, 0) << args[0] << ": " << first.err;
    EXPECT_EQ(first.out, second.out) << args[0];
  }

  auto plain = run_cli({"classify-iterates", data("contraction.json")});
  auto verbose = run_cli({"classify-iterates", data("contraction.json"), "-v"});
  EXPECT_EQ(plain.out, verbose.out);
  EXPECT_EQ(plain.err, "");
  EXPECT_NE(verbose.err.find("verdict: ConvergesToConstant"), std::string::npos) << verbose.err;

  auto timed = run_cli({"--timing", "gallery", "example2"});
  EXPECT_TRUE(timed.doc().contains("timing_ms"));
  EXPECT_FALSE(run_cli({"gallery", "example2"}).doc().contains("timing_ms"));
}
