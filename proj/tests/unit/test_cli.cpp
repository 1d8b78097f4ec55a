#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/group_file.hpp"
#include "commprob/constructors.hpp"

using namespace commprob;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "commprob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(COMMPROB_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::vector<nlohmann::ordered_json> lines(const std::string& out) {
  std::vector<nlohmann::ordered_json> v;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) v.push_back(nlohmann::ordered_json::parse(line));
  return v;
}

}  // namespace

TEST(Cli, AnalyzeByName) {
  auto r = run({"analyze", "--name", "A4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = lines(r.out).at(0);
  EXPECT_EQ(j["d"], "1/3");
  EXPECT_EQ(j["order"], 12);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "order", "k", "d", "acs", "parity", "center_order",
                                            "derived_order", "derived_index", "abelian", "nilpotent",
                                            "supersolvable", "solvable", "stem", "isoclinic_to_A4",
                                            "quotient_by_center_isoclinic_to_A4", "isoclinic_to_C5C5C3",
                                            "verdicts"}));
}

TEST(Cli, AnalyzeLargest) {
  auto r = run({"analyze", "--name", "(C5xC5):C15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).at(0)["d"], "23/375");
}

TEST(Cli, AnalyzeFile) {
  auto path = write_temp("a4.grp", "4\n1 2 0 3\n1 0 3 2\n");
  auto r = run({"analyze", path, "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("d 1/3"), std::string::npos);
}

TEST(Cli, AnalyzeBadFileExitsTwo) {
  auto path = write_temp("bad.grp", "3\n1 1 0\n");
  auto r = run({"analyze", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"analyze", "--name", "Nope"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--all", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "nope", "--all"}).code, 2);
  EXPECT_EQ(run({"analyze", "--name", "S4", "--max-order", "10"}).code, 2);
}

TEST(Cli, VerifyClassSizeWithKlein) {
  auto r = run({"verify", "--theorem", "class-size", "--s", "4", "--name", "A4", "--normal", "klein"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto out = lines(r.out);
  auto v = out.at(0)["verdicts"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["status"], "holds");
  EXPECT_EQ(v[0]["witness_class_size"], 3);
}

TEST(Cli, VerifyOddOnA4) {
  auto r = run({"verify", "--theorem", "odd", "--name", "A4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto v = lines(r.out).at(0)["verdicts"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["detail"], "not applicable: even order");
}

TEST(Cli, VerifyExplicitNormalWithoutComplementExitsTwo) {
  auto r = run({"verify", "--theorem", "class-size", "--name", "Q8", "--normal", "center"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"verify", "--name", "S3", "--normal", "klein"}).code, 2);
  EXPECT_EQ(run({"verify", "--name", "S3", "--normal", "17"}).code, 2);
}

TEST(Cli, VerifyAllSucceedsAndIsDeterministic) {
  auto a = run({"verify", "--all", "--format", "json"});
  auto b = run({"verify", "--all", "--format", "json", "--jobs", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto out = lines(a.out);
  EXPECT_EQ(out.size(), catalog().size() + 1);
  EXPECT_EQ(out.back()["summary"]["failures"], 0);
}

TEST(Cli, Isoclinic) {
  auto yes = run({"isoclinic", "--name", "C2xA4", "--name2", "A4", "--witness"});
  ASSERT_EQ(yes.code, 0);
  auto j = lines(yes.out).at(0);
  EXPECT_EQ(j["isoclinic"], true);
  EXPECT_EQ(j["witness"]["verified"], true);
  auto no = run({"isoclinic", "--name", "A4", "--name2", "S3"});
  EXPECT_EQ(lines(no.out).at(0)["isoclinic"], false);
  auto same = run({"isoclinic", "--name", "D8", "--name2", "D8"});
  EXPECT_EQ(lines(same.out).at(0)["isoclinic"], true);
  EXPECT_EQ(run({"isoclinic", "--name", "A4"}).code, 2);
}

TEST(Cli, CatalogList) {
  auto r = run({"catalog", "list"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), catalog().size());
  EXPECT_EQ(j[0]["key"], catalog()[0].key);
}

TEST(Cli, ConstructSemidirect) {
  // An order-3 automorphism of C2xC2 in canonical element indices.
  auto n = named("C2xC2");
  auto aut = automorphism_group(n);
  Index a = 0;
  while (element_order(aut, a) != 3) ++a;
  auto action = write_temp("action.txt", cli::format_group_file(n.order(), {aut.element(a)}));
  auto r = run({"construct", "semidirect", "--n", "C2xC2", "--h", "C3", "--action", action});
  ASSERT_EQ(r.code, 0) << r.err;
  auto f = cli::parse_group_file(r.out);
  EXPECT_EQ(generate_group(f.degree, f.generators).order(), 12u);

  auto product = write_temp("product.grp", r.out);
  auto rep = run({"analyze", product});
  EXPECT_EQ(lines(rep.out).at(0)["isoclinic_to_A4"], true);

  auto bad = write_temp("bad_action.txt", "4\n0 1 2 3\n0 1 2 3\n");
  EXPECT_EQ(run({"construct", "semidirect", "--n", "C2xC2", "--h", "C3", "--action", bad}).code, 2);
  auto wrong = write_temp("wrong_action.txt", cli::format_group_file(n.order(), {aut.element(a)}));
  EXPECT_EQ(run({"construct", "semidirect", "--n", "C2xC2", "--h", "C2", "--action", wrong}).code, 2);
}
