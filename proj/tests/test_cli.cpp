#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace dpz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const Json& j) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << j.dump();
  return path;
}

}  // namespace

TEST(Cli, RootsAndOrder) {
  EXPECT_EQ(run({"roots", "8"}).out, "240\n");
  EXPECT_EQ(run({"order", "6"}).out, "51840\n");
  EXPECT_EQ(run({"order", "3"}).out, "12\n");
  auto j = Json::parse(run({"--format", "json", "roots", "7"}).out);
  EXPECT_EQ(j["roots"], 126);
  auto listed = Json::parse(run({"roots", "3", "--list", "--format", "json"}).out);
  EXPECT_EQ(listed["roots"].size(), 8u);
}

TEST(Cli, ClassifyRows) {
  auto r = run({"--format", "json", "classify", "5"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  std::vector<std::string> irreducible;
  for (const auto& row : j["rows"]) {
    auto result = result_from_json(row["verdict"]);
    Isometry g = make_isometry(del_pezzo(5), matrix_from_json(row["representative"]));
    EXPECT_TRUE(verify_certificate(g, result));
    if (result.verdict == Verdict::Irreducible) irreducible.push_back(row["realized_by"]);
  }
  EXPECT_EQ(irreducible, std::vector<std::string>{"DeJonquieres(3)"});

  auto text = run({"classify", "7"}).out;
  EXPECT_NE(text.find("DeJonquieres(4)"), std::string::npos);
  EXPECT_NE(text.find("Geiser"), std::string::npos);
  auto csv = run({"classify", "4", "--format", "csv"}).out;
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,carter,t,c,r,verdict,realized_by,certificate");
}

TEST(Cli, ClassifyIsDeterministic) {
  EXPECT_EQ(run({"--format", "json", "classify", "6"}).out, run({"--format", "json", "classify", "6"}).out);
}

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(run({"classify", "9"}).code, 2);
  EXPECT_EQ(run({"classify", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "order", "3"}).code, 2);
  EXPECT_EQ(run({"order", "3"}, "ten").code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"model", "--name", "cremona"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"classify", "roots", "order", "model", "check", "decompose", "defect"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  EXPECT_NE(r.out.find("DPZ_HEIGHT_BOUND"), std::string::npos);
}

TEST(Cli, ModelThenCheck) {
  auto m = run({"model", "--name", "geiser", "--format", "json"});
  ASSERT_EQ(m.code, 0);
  Json model = Json::parse(m.out);
  EXPECT_EQ(model["basis"], "HE");
  std::string path = write_temp("geiser.json", model);
  auto c = run({"check", path, "--format", "json"});
  EXPECT_EQ(c.code, 0);
  auto result = result_from_json(Json::parse(c.out));
  EXPECT_EQ(result.verdict, Verdict::Irreducible);
  EXPECT_TRUE(verify_certificate(geiser().involution, result));
}

TEST(Cli, CheckRejectsNonIsometry) {
  std::string path = write_temp("bad.json", Json{{"basis", "HE"}, {"matrix", {{1, 1}, {0, 1}}}});
  auto r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  std::string wrong_basis = write_temp("basis.json", Json{{"basis", "xy"}, {"matrix", {{1, 0}, {0, 1}}}});
  EXPECT_EQ(run({"check", wrong_basis}).code, 2);
}

TEST(Cli, CheckQuadricBasis) {
  Json j{{"basis", "quadric"}, {"matrix", {{0, 1}, {1, 0}}}};
  auto r = run({"check", write_temp("swap.json", j)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: Irreducible"), std::string::npos);
}

TEST(Cli, DecomposeIdentity) {
  Json j{{"basis", "HE"}, {"matrix", to_json(IntMatrix::identity(3))}};
  auto r = run({"decompose", write_temp("id.json", j), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  Json tree = Json::parse(r.out);
  int splits = 0;
  const Json* node = &tree;
  while ((*node)["node"] == "split") {
    ++splits;
    node = &(*node)["child"];
  }
  EXPECT_EQ(splits, 2);
  EXPECT_EQ((*node)["type"], "Rank1");
}

TEST(Cli, Defect) {
  EXPECT_EQ(run({"defect", "--name", "bertini", "--twist"}).out, "-9\n");
  EXPECT_EQ(run({"defect", "--name", "geiser", "--twist"}).out, "-8\n");
  EXPECT_EQ(run({"defect", "--name", "dejonquieres", "--n", "5", "--twist"}).out, "-4\n");
  EXPECT_EQ(run({"defect", "--name", "dejonquieres", "--n", "7", "--twist"}).out, "-6\n");
  Json id{{"basis", "HE"}, {"matrix", to_json(IntMatrix::identity(4))}};
  EXPECT_EQ(run({"defect", write_temp("id3.json", id)}).out, "-2\n");
  EXPECT_EQ(run({"defect"}).code, 2);
}

TEST(Cli, HeightBoundFromEnvironment) {
  Json j = matrix_file(testing_support::reflections(3, {"E1 - E2"}), BasisKind::HE);
  std::string path = write_temp("r.json", j);
  auto a = Json::parse(run({"check", path, "--format", "json"}, "4").out);
  EXPECT_EQ(a["height_bound"], 4);
  auto b = Json::parse(run({"check", path, "--format", "json", "--height-bound", "7"}, "4").out);
  EXPECT_EQ(b["height_bound"], 7);
}
