#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "dpcolor/report.hpp"
#include "fixtures.hpp"

namespace dpcolor {
namespace {

using nlohmann::json;

struct Outcome {
  int exit_code = -1;
  std::string out;
  std::string err;
  json report;
};

std::string graph_path(const std::string& name) { return std::string(DPCOLOR_DATA_DIR) + "/graphs/" + name + ".json"; }

Outcome run_cli(const std::string& args) {
  static int counter = 0;
  const std::string err_file = ::testing::TempDir() + "cli_err_" + std::to_string(counter++) + ".txt";
  const std::string cmd = std::string(DPCOLOR_CLI) + " " + args + " 2>" + err_file;
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream es(err_file);
  std::stringstream ss;
  ss << es.rdbuf();
  o.err = ss.str();
  if (!o.out.empty()) o.report = json::parse(o.out, nullptr, false);
  return o;
}

void expect_error(const Outcome& o, const std::string& code) {
  EXPECT_EQ(o.exit_code, 2);
  ASSERT_TRUE(o.report.is_object()) << o.out;
  EXPECT_EQ(o.report.at("schema"), report::kSchema);
  EXPECT_EQ(o.report.at("error").at("code"), code);
  EXPECT_FALSE(o.report.at("error").at("message").get<std::string>().empty());
}

TEST(Cli, StructureOfChordlessC7) {
  const Outcome o = run_cli("structure " + graph_path("c7"));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& r = o.report.at("result");
  EXPECT_EQ(r.at("hypotheses").at("no_4_5_6_cycles_dtri_ge_2").at("summary"), "satisfied (vacuously, no triangles)");
  EXPECT_TRUE(r.at("triangle_distance").is_null());
  EXPECT_EQ(r.at("cycle_counts").at("7"), 1);
  EXPECT_EQ(r.at("c0").at("chordless"), true);
  EXPECT_TRUE(r.at("separating_7_to_10").empty());
}

TEST(Cli, StructureOfBowtie) {
  const Outcome o = run_cli("structure " + graph_path("bowtie"));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& r = o.report.at("result");
  EXPECT_EQ(r.at("triangle_distance"), 0);
  EXPECT_FALSE(r.at("hypotheses").at("no_4_5_cycles_dtri_ge_3").at("satisfied").get<bool>());
  EXPECT_FALSE(r.at("hypotheses").at("no_4_5_6_cycles_dtri_ge_2").at("satisfied").get<bool>());
  EXPECT_TRUE(r.at("c0").is_null());
}

TEST(Cli, StructureClassifiesBadNineCycle) {
  const Outcome o = run_cli("structure " + graph_path("bad9"));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& c0 = o.report.at("result").at("c0");
  EXPECT_EQ(c0.at("classification"), "C0 is a bad 9-cycle");
  EXPECT_FALSE(c0.at("admissible_3_6_7_8_good9").get<bool>());
  EXPECT_TRUE(c0.at("admissible_7_to_10").get<bool>());
}

TEST(Cli, StructureListsSeparatingCycles) {
  const Outcome o = run_cli("structure " + graph_path("friendly_path"));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& r = o.report.at("result");
  // the triangle 10,11,13 bounds a face, so no separating 3-cycle exists
  for (const auto& c : r.at("separating_3_6_7_8_good9")) EXPECT_NE(c.size(), 3u);
  EXPECT_EQ(r.at("hypotheses").at("no_4_5_6_cycles_dtri_ge_2").at("satisfied"), true);
}

TEST(Cli, CertifyC4WithTwoColorsFails) {
  const std::string out = ::testing::TempDir() + "c4_report.json";
  const Outcome o = run_cli("certify " + graph_path("c4") + " --k 2 --out " + out);
  EXPECT_EQ(o.exit_code, 1);
  std::ifstream is(out);
  const json rep = json::parse(is);
  EXPECT_EQ(rep.at("verdict"), "counterexample");
  const json cex = rep.at("result").at("counterexample");

  // the counterexample is a matching file that solve reports as UNSAT
  const std::string mpath = ::testing::TempDir() + "c4_cex.json";
  std::ofstream(mpath) << cex.dump();
  const Outcome s = run_cli("solve " + graph_path("c4") + " " + mpath);
  EXPECT_EQ(s.exit_code, 1);
  EXPECT_EQ(s.report.at("result").at("status"), "unsat");
}

TEST(Cli, CertifyC5WithThreeColors) {
  const Outcome o = run_cli("certify " + graph_path("c5") + " --k 3");
  EXPECT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(o.report.at("result").at("examined"), 7776);
}

TEST(Cli, SolveFindsWitness) {
  const std::string mpath = ::testing::TempDir() + "c4_straight.json";
  std::ofstream(mpath) << R"({"lists": {"0": [1,2], "1": [1,2], "2": [1,2], "3": [1,2]}})";
  const Outcome o = run_cli("solve " + graph_path("c4") + " " + mpath);
  EXPECT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(o.report.at("result").at("witness").size(), 4u);
}

TEST(Cli, ExtendPendantInterior) {
  const Outcome o = run_cli("extend " + graph_path("c7_pendant_interior") + " --k 3 --sample 300");
  EXPECT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(o.report.at("verdict"), "all_extend");

  const std::string mpath = ::testing::TempDir() + "pendant_lists.json";
  const PlaneGraph g = testing::c7_pendant_interior();
  const ListAssignment l = ListAssignment::uniform(g.graph().vertices(), 3);
  std::ofstream(mpath) << io::matching_to_json(l, from_lists(l, g.graph())).dump();
  const Outcome all = run_cli("extend " + graph_path("c7_pendant_interior") + " --matching " + mpath);
  EXPECT_EQ(all.exit_code, 0) << all.err;
  // proper 3-colorings of C7: 2^7 - 2
  EXPECT_EQ(all.report.at("result").at("precolorings"), 126);
}

TEST(Cli, ReduceConfiguration) {
  const Outcome o = run_cli("reduce lemma-3.3a-case2 --k 3");
  ASSERT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(o.report.at("result").at("summary"), "ordering valid; oracle: reducible; greedy/oracle agree");
}

TEST(Cli, ReduceReplaysIdentification) {
  const Outcome o = run_cli("reduce lemma-2.5 --sample 20");
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& r = o.report.at("result");
  EXPECT_EQ(r.at("residual_min").at("y'"), 3);
  EXPECT_EQ(r.at("residual_min").at("x'"), 3);
  EXPECT_EQ(r.at("assignments"), 21);
}

TEST(Cli, ReduceUnknownName) { expect_error(run_cli("reduce nosuch"), "unknown_name"); }

TEST(Cli, DischargeC9) {
  const Outcome o = run_cli("discharge " + graph_path("c9") + " --rules section-2");
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const json& r = o.report.at("result");
  EXPECT_EQ(r.at("total2"), 0);
  EXPECT_TRUE(r.at("conserved").get<bool>());
  EXPECT_EQ(r.at("audit").at("mu_star2"), 0);
  long long sum = 0;
  for (const auto& t : r.at("transfers")) sum += t.at("amount2").get<long long>();
  EXPECT_GT(sum, 0);
}

TEST(Cli, DischargeStrictRefusesK4) {
  const Outcome o = run_cli("discharge " + graph_path("k4") + " --rules section-2 --strict");
  expect_error(o, "hypothesis_violated");
  EXPECT_NE(o.report.at("error").at("message").get<std::string>().find("intersecting triangles"), std::string::npos);
}

TEST(Cli, DischargeReportsViolations) {
  const Outcome o = run_cli("discharge " + graph_path("octahedron") + " --rules section-2");
  EXPECT_EQ(o.exit_code, 1);
  EXPECT_EQ(o.report.at("result").at("nonnegativity").at("negative").size(), 3u);
}

TEST(Cli, TraceMatchesTransferLog) {
  // vertices 12, 14, 15 end negative, so the run reports violations
  const Outcome o = run_cli("discharge " + graph_path("friendly_path") + " --rules section-3 --trace");
  ASSERT_EQ(o.exit_code, 1);
  std::istringstream lines(o.err);
  std::string line;
  std::size_t i = 0;
  const json& log = o.report.at("result").at("transfers");
  while (std::getline(lines, line)) {
    ASSERT_LT(i, log.size());
    EXPECT_EQ(json::parse(line), log.at(i)) << i;
    ++i;
  }
  EXPECT_EQ(i, log.size());
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::string& args : {"certify " + graph_path("c5") + " --sample 200 --seed 9",
                                 "discharge " + graph_path("flower") + " --rules section-2",
                                 "structure " + graph_path("bad9"), std::string("reduce lemma-3.3c --sample 10")}) {
    const Outcome a = run_cli(args);
    const Outcome b = run_cli(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, InputDigestIsFnv1a) {
  const Outcome o = run_cli("structure " + graph_path("k4"));
  std::ifstream is(graph_path("k4"), std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  EXPECT_EQ(o.report.at("inputs").at(0).at("fnv1a64"), report::fnv1a64(ss.str()));
  EXPECT_EQ(report::fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(report::fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Cli, ErrorsAreStructured) {
  expect_error(run_cli("certify /no/such/file.json"), "invalid_argument");
  expect_error(run_cli("discharge " + graph_path("c9") + " --rules section-4"), "invalid_argument");
  expect_error(run_cli("extend " + graph_path("bowtie")), "not_outer_face");
  const std::string bad = ::testing::TempDir() + "broken.json";
  std::ofstream(bad) << "{\"vertices\": [0, 1,\n ]";
  const Outcome p = run_cli("structure " + bad);
  expect_error(p, "parse_error");
  EXPECT_NE(p.report.at("error").at("message").get<std::string>().find("broken.json:2:"), std::string::npos);
  const Outcome u = run_cli("certify");
  EXPECT_EQ(u.exit_code, 2);
  EXPECT_EQ(u.report.at("error").at("code"), "usage");
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(Cli, SampleGraphsMatchFixtures) {
  EXPECT_EQ(io::load_graph(graph_path("bad9")).graph().edges(), testing::bad_nine_cycle().graph().edges());
  EXPECT_EQ(io::load_graph(graph_path("theorem_spokes")).outer(), testing::theorem_instance_spokes().outer());
}

}  // namespace
}  // namespace dpcolor
