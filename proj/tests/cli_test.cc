#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "compnum/formats.hpp"
#include "compnum/realizer.hpp"

namespace compnum {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "compnum_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void put(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

TEST(CliBoundTest, GeneralPrintsTable) {
  const Invocation r = run({"bound", "--method", "general", "Cl"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "general = 2 (raw 2)\nm\tterm\targmin\n1\t2\t{0}\n2\t2\t{0,1}\n3\t2\t{0,1,2}\n4\t1\t{0,1,2,3}\n");
}

TEST(CliBoundTest, OpsutAndSingleTerm) {
  EXPECT_EQ(run({"bound", "--method", "opsut-e", "Cl"}).out, "opsut-e = 2 (raw 2)\n");
  EXPECT_EQ(run({"bound", "--method", "opsut-v", "Cl"}).out, "opsut-v = 2 (raw 2)\n");
  EXPECT_EQ(run({"bound", "--method", "general", "--m", "1", "Cl"}).out, "term(m=1) = 2  argmin {0}\n");
}

TEST(CliBoundTest, JsonCarriesRawAndClamped) {
  const Invocation k5 = run({"bound", "--json", "--method", "opsut-e", "D~{"});  // K_5
  ASSERT_EQ(k5.code, 0);
  EXPECT_NE(k5.out.find("\"opsut_e_raw\":-2,\"opsut_e\":0"), std::string::npos) << k5.out;
  const Invocation c4 = run({"bound", "--json", "Cl"});
  EXPECT_NE(c4.out.find("\"general_raw\":2,\"general\":2"), std::string::npos);
}

TEST(CliBoundTest, StdinAndErrors) {
  EXPECT_EQ(run({"bound", "--method", "opsut-e", "--stdin"}, "\nCl\n").out, "opsut-e = 2 (raw 2)\n");
  EXPECT_EQ(run({"bound", "--method", "opsut-e", "--m", "1", "Cl"}).code, 2);
  EXPECT_EQ(run({"bound", "--method", "nope", "Cl"}).code, 2);
  EXPECT_EQ(run({"bound", "--stdin", "Cl"}).code, 2);
  EXPECT_EQ(run({"bound"}).code, 2);
  EXPECT_EQ(run({"bound", "--m", "5", "Cl"}).code, 2);
  EXPECT_EQ(run({"bound", "C~~"}).code, 1);
  EXPECT_EQ(run({"bound", "?"}).code, 1);
}

TEST(CliExactTest, Examples) {
  EXPECT_EQ(run({"exact", "Cl"}).out, "k = 2\n");
  EXPECT_EQ(run({"exact", "@"}).out, "k = 0\n");
  EXPECT_EQ(run({"exact", "--start-k", "0", "Cl"}).out, "k = 2\n");
  EXPECT_EQ(run({"exact", "--start-k", "-1", "Cl"}).code, 2);
}

TEST(CliExactTest, WitnessFilesVerify) {
  const auto arcs = scratch("k3.d");
  const auto dot = scratch("k3.dot");
  const Invocation r = run({"exact", "--witness", arcs.string(), "--dot", dot.string(), "Bw"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k = 1\n");
  EXPECT_TRUE(verify_realization(parse_graph6("Bw"), 1, parse_arc_list(slurp(arcs))));
  EXPECT_NE(slurp(dot).find("\"z1\" [shape=box]"), std::string::npos);
  EXPECT_EQ(run({"verify", "Bw", arcs.string()}).code, 0);
  EXPECT_EQ(run({"verify", "Cl", arcs.string()}).code, 1);
}

// FhCKG is C_7.
TEST(CliExactTest, BudgetExhaustionExitsThree) {
  const Invocation c7 = run({"exact", "--budget", "3", "--start-k", "0", "FhCKG"});
  ASSERT_EQ(c7.code, 3) << c7.err;
  EXPECT_EQ(c7.out.rfind("k in [", 0), 0u);
  EXPECT_NE(c7.err.find("budget"), std::string::npos);

  ::setenv("COMPNUM_BUDGET_NODES", "3", 1);
  EXPECT_EQ(run({"exact", "--start-k", "0", "FhCKG"}).code, 3);
  ::setenv("COMPNUM_BUDGET_NODES", "junk", 1);
  EXPECT_EQ(run({"exact", "FhCKG"}).code, 2);
  ::unsetenv("COMPNUM_BUDGET_NODES");
  EXPECT_EQ(run({"exact", "FhCKG"}).out, "k = 2\n");
}

TEST(CliCompetitionTest, Examples) {
  const auto f = scratch("two_prey.d");
  put(f, "digraph 3\n0 2\n1 2\n");
  EXPECT_EQ(run({"competition", f.string()}).out, "B_\n");
  EXPECT_EQ(run({"competition", "-"}, "digraph 4\n").out, "C?\n");
  EXPECT_EQ(run({"competition", "-"}, "digraph 3\n0 1\n1 2\n2 0\n").out, "B?\n");
  EXPECT_EQ(run({"competition", "-"}, "digraph 3\n0 0\n").code, 1);
  EXPECT_EQ(run({"competition", scratch("missing.d").string()}).code, 1);
}

TEST(CliGenTest, Examples) {
  EXPECT_EQ(run({"gen", "--family", "cycle", "--params", "4"}).out, "Cl\n");
  EXPECT_EQ(run({"gen", "--family", "complete", "--params", "3"}).out, "Bw\n");
  const Invocation a = run({"gen", "--family", "random", "--params", "5,0.5", "--seed", "7", "--count", "2"});
  const Invocation b = run({"gen", "--family", "random", "--params", "5,0.5", "--seed", "7", "--count", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(lines_of(a.out).size(), 2u);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"gen", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "random", "--params", "5,0.5"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "cycle", "--params", "x"}).code, 2);
}

TEST(CliSurveyTest, AllLabeledFourWithExact) {
  const auto out = scratch("four.csv");
  ASSERT_EQ(run({"survey", "--all-labeled", "4", "--with-exact", "-o", out.string()}).code, 0);
  const auto rows = lines_of(slurp(out));
  ASSERT_EQ(rows.size(), 65u);
  EXPECT_EQ(rows[0], "graph6,n,edges,theta_e,opsut_e,opsut_v,general,k_exact,millis");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::stringstream s(rows[i]);
    for (std::string c; std::getline(s, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 9u);
    const int general = std::stoi(cells[6]);
    const int k = std::stoi(cells[7]);
    EXPECT_LE(general, k) << rows[i];
    EXPECT_GE(general, std::stoi(cells[4]));
    EXPECT_GE(general, std::stoi(cells[5]));
  }
}

TEST(CliSurveyTest, InputFileAndErrorRows) {
  const auto in = scratch("mixed.g6");
  put(in, "Cl\nC~~\n\n");
  const Invocation r = run({"survey", "--input", in.string()});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines_of(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1], "Cl,4,4,4,2,2,2,,0");
  EXPECT_EQ(rows[2].rfind("C~~,,,,,,,error: ", 0), 0u) << rows[2];
  EXPECT_NE(r.err.find("1 of 2"), std::string::npos);

  const auto empty = scratch("empty.g6");
  put(empty, "");
  EXPECT_EQ(run({"survey", "--input", empty.string()}).out,
            "graph6,n,edges,theta_e,opsut_e,opsut_v,general,k_exact,millis\n");
}

TEST(CliSurveyTest, JsonlMirrorsCsv) {
  const auto jsonl = scratch("rows.jsonl");
  ASSERT_EQ(run({"survey", "--all-labeled", "3", "-o", jsonl.string()}).code, 0);
  const auto rows = lines_of(slurp(jsonl));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].rfind("{\"graph6\":\"B?\",\"n\":3", 0), 0u) << rows[0];
}

TEST(CliSurveyTest, OutputIndependentOfJobs) {
  const Invocation one = run({"survey", "--all-labeled", "5", "--with-exact"});
  const Invocation four = run({"survey", "--all-labeled", "5", "--with-exact", "--jobs", "4"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(lines_of(one.out).size(), 1025u);
}

TEST(CliSurveyTest, UsageErrors) {
  EXPECT_EQ(run({"survey"}).code, 2);
  EXPECT_EQ(run({"survey", "--all-labeled", "3", "--input", "x"}).code, 2);
  EXPECT_EQ(run({"survey", "--all-labeled", "7"}).code, 2);
  EXPECT_EQ(run({"survey", "--all-labeled", "3", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"survey", "--input", scratch("nothing.g6").string()}).code, 1);
}

TEST(CliTest, TopLevel) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).out, "compnum 0.1.0\n");
}

}  // namespace
}  // namespace compnum
