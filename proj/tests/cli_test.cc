#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.h"
#include "json.hpp"

namespace {

const std::filesystem::path kData = HYPERIGN_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hyperign::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const char* name) { return (kData / "models" / name).string(); }

TEST(Cli, EvalWorkedModels) {
  auto r = run({"eval", model("william3_hiw.json"), "w", "~Iw p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"eval", model("william3_hiw.json"), "w", "Iw (p & (q | ~q))"});
  EXPECT_EQ(r.out, "true\n");
  r = run({"eval", model("william3_hdi.json"), "w", "Id p", "--system", "hdi"});
  EXPECT_EQ(r.out, "true\n");
  r = run({"eval", model("william3_hdi.json"), "w", "Id (p & (q | ~q))", "--system", "hdi"});
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, EvalTraceAndErrors) {
  auto r = run({"eval", model("william3_hiw.json"), "w", "~Iw p", "--trace"});
  EXPECT_NE(r.out.find("true   ~Iw p"), std::string::npos) << r.out;
  EXPECT_EQ(run({"eval", model("william3_hiw.json"), "nowhere", "p"}).code, 2);
  EXPECT_EQ(run({"eval", "/nonexistent.json", "w", "p"}).code, 2);
  EXPECT_EQ(run({"eval", model("william3_hiw.json"), "w", "Iu p"}).code, 2);
  EXPECT_EQ(run({"eval", model("william3_hiw.json"), "w", "p", "--system", "zz"}).code, 2);
}

TEST(Cli, Valid) {
  auto r = run({"valid", "Iw p <-> Iw ~p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 17), "VALID_UP_TO_BOUND");
  EXPECT_EQ(run({"valid", "p -> p", "--system", "iw", "--max-worlds", "2"}).code, 0);
  EXPECT_EQ(run({"valid", "~Id (p | ~p)", "--system", "di"}).code, 1);
  EXPECT_EQ(run({"valid", "~Id (p | ~p)", "--system", "di", "--expect", "countermodel"}).code, 0);
  EXPECT_EQ(run({"valid", "p", "--max-worlds", "0"}).code, 2);
}

TEST(Cli, ValidWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "hyperign_cli_report.json";
  const auto r = run({"valid", "~Id (p | ~p)", "--system", "di", "--threads", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 1);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("verdict"), "COUNTERMODEL");
  EXPECT_EQ(j.at("world"), "w1");
  EXPECT_EQ(j.at("model").at("worlds"), nlohmann::json::array({"w1"}));
  std::filesystem::remove(path);
}

TEST(Cli, Parse) {
  const auto r = run({"parse", "Iw p&q -> ~r", "--system", "hiw"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "((Iw p & q) -> ~r)\nvars: p q r\n");
  EXPECT_EQ(run({"parse", "(p &"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, Prove) {
  auto r = run({"prove", (kData / "proofs" / "gen_a6_iw_k2.json").string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out, "OK 14 lines (HIW)\n");
  // Same script read as an HIU proof fails at its first HIW axiom.
  r = run({"prove", (kData / "proofs" / "gen_a6_iw_k2.json").string(), "--system", "hiu"});
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(run({"prove", "/nonexistent.json"}).code, 2);
}

TEST(Cli, Fuzz) {
  const auto r = run({"fuzz", "--system", "iw", "--trials", "200", "--mutants"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("mutants: 8/8 killed"), std::string::npos) << r.out;
}

TEST(Cli, Repro) {
  auto r = run({"repro", "--trials", "300", "--threads", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("rows pass"), std::string::npos);
  r = run({"repro", "--trials", "300", "--mutate", "disbelief-self"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  r = run({"repro", "--trials", "300", "--mutate", "box-successors"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"repro", "--mutate", "nonsense"}).code, 2);
}

}  // namespace
