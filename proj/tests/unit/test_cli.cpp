#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmacc/cli.hpp"

namespace cmacc {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cmacc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(CliTest, ConstructZ81) {
  const Result r = run({"construct", "--L", "3", "--m", "3,1,1", "-o", path("e4.pack")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f = (3,9,27)"), std::string::npos);
  EXPECT_NE(r.out.find("g = (1,0,0)"), std::string::npos);
  EXPECT_NE(r.out.find("v_min = 81"), std::string::npos);
  EXPECT_NE(r.out.find("(3,81,8,3) CMA-NHSDP\n"), std::string::npos);
  const std::string file = read_file(path("e4.pack"));
  EXPECT_EQ(file.substr(0, file.find('\n')), "v=81 L=3");
  EXPECT_EQ(std::count(file.begin(), file.end(), '\n'), 4);
}

TEST_F(CliTest, ConstructZ27Banner) {
  EXPECT_NE(run({"construct", "--L", "3", "--m", "3,1"}).out.find("(3,27,4,3) CMA-NHSDP"), std::string::npos);
}

TEST_F(CliTest, ConstructRejectsBadModulusAndParameters) {
  const Result even = run({"construct", "--L", "3", "--m", "3,1", "--v", "26"});
  EXPECT_EQ(even.code, 2);
  EXPECT_NE(even.err.find("even"), std::string::npos);
  const Result below = run({"construct", "--L", "3", "--m", "3,1", "--v", "25"});
  EXPECT_EQ(below.code, 2);
  EXPECT_NE(below.err.find("v_min"), std::string::npos);
  EXPECT_EQ(run({"construct", "--L", "2", "--m", "3,1"}).code, 2);
  EXPECT_EQ(run({"construct", "--L", "3", "--m", "3,0"}).code, 2);
}

TEST_F(CliTest, ConstructOffResidueClassReportsFailure) {
  // v = v_min + 2 is not congruent to v_min mod 2L; the complement breaks.
  const Result r = run({"construct", "--L", "3", "--m", "3,1", "--v", "29"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("run-partition"), std::string::npos);
}

TEST_F(CliTest, VerifyExamples) {
  write("e2.pack", "v=5 L=1\n1 4\n2 3\n");
  EXPECT_EQ(run({"verify", path("e2.pack"), "--as", "nhsdp"}).code, 0);
  write("e3.pack", "v=27 L=3\n11 20 7 16\n12 21 6 15\n13 22 5 14\n");
  const Result ok = run({"verify", path("e3.pack"), "--as", "cma", "--L", "3"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("[26..1]"), std::string::npos);
  write("bad.pack", "v=27 L=3\n11 19 7 16\n12 21 6 15\n13 22 5 14\n");
  const Result bad = run({"verify", path("bad.pack"), "--as", "cma", "--L", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("witness="), std::string::npos);
}

TEST_F(CliTest, VerifyMalformedAndMissingFiles) {
  write("junk.pack", "hello\n");
  EXPECT_EQ(run({"verify", path("junk.pack")}).code, 2);
  EXPECT_EQ(run({"verify", path("absent.pack")}).code, 2);
  EXPECT_EQ(run({"verify", path("junk.pack"), "--as", "other"}).code, 2);
}

TEST_F(CliTest, BuildPdaAndSimulate) {
  ASSERT_EQ(run({"construct", "--L", "3", "--m", "3,1", "-o", path("e3.pack")}).code, 0);
  const Result built = run({"build-pda", path("e3.pack"), "-o", path("e3.pda")});
  EXPECT_EQ(built.code, 0);
  EXPECT_EQ(built.out, "(27,27,15,81) L-continuous (L=3)\n");
  const Result sim = run({"simulate", path("e3.pda"), "--L", "3", "--N", "27", "--demands", "distinct", "--seed", "7",
                          "--file-size", "2700", "--transcript", path("tx.txt")});
  EXPECT_EQ(sim.code, 0);
  EXPECT_EQ(sim.out, "decode: 27/27 OK, S_d=81, R=3\n");
  const std::string tx = read_file(path("tx.txt"));
  EXPECT_EQ(std::count(tx.begin(), tx.end(), '\n'), 82);
}

TEST_F(CliTest, SimulateDemandSpecs) {
  ASSERT_EQ(run({"construct", "--L", "1", "--m", "1", "-o", path("s.pack")}).code, 0);
  ASSERT_EQ(run({"build-pda", path("s.pack"), "-o", path("s.pda")}).code, 0);
  EXPECT_EQ(run({"simulate", path("s.pda"), "--L", "1", "--N", "2", "--demands", "explicit:1,2,2"}).code, 0);
  EXPECT_EQ(run({"simulate", path("s.pda"), "--L", "1", "--N", "2", "--demands", "explicit:1,2"}).code, 2);
  EXPECT_EQ(run({"simulate", path("s.pda"), "--L", "1", "--N", "2", "--demands", "distinct"}).code, 2);
  EXPECT_EQ(run({"simulate", path("s.pda"), "--L", "1", "--N", "2", "--demands", "zipf"}).code, 2);
  const Result u = run({"simulate", path("s.pda"), "--L", "1", "--N", "3", "--demands", "uniform", "--trials", "5"});
  EXPECT_EQ(u.code, 0);
  EXPECT_EQ(u.out.substr(0, 18), "decode: 15/15 OK, ");
}

TEST_F(CliTest, SimulateFromLibraryDirectory) {
  ASSERT_EQ(run({"construct", "--L", "1", "--m", "1", "-o", path("s.pack")}).code, 0);
  ASSERT_EQ(run({"build-pda", path("s.pack"), "-o", path("s.pda")}).code, 0);
  fs::create_directories(dir_ / "lib");
  for (int i = 0; i < 5; ++i) std::ofstream(dir_ / "lib" / ("f" + std::to_string(i))) << std::string(17 + i, 'a' + i);
  const Result r = run({"simulate", path("s.pda"), "--L", "1", "--library-dir", path("lib")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 16), "decode: 3/3 OK, ");
}

TEST_F(CliTest, BuildPdaRejectsInvalidPacking) {
  write("bad.pack", "v=7 L=1\n1 3\n2 6\n");
  EXPECT_EQ(run({"build-pda", path("bad.pack")}).code, 1);
}

TEST_F(CliTest, Optimize) {
  const Result r = run({"optimize", "--v", "81", "--L", "3", "--n-max", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("best m=(3,1,1), f=3; closed-form q=3 matches\n"), std::string::npos);
  const Result csv = run({"optimize", "--v", "27", "--L", "3", "--n-max", "2", "--csv", path("c.csv")});
  EXPECT_EQ(csv.code, 0);
  const std::string table = read_file(path("c.csv"));
  EXPECT_EQ(table.substr(0, table.find('\n')), "n,m,phi,v_min,objective,K,F,Z,S,M_over_N,R");
  EXPECT_EQ(run({"optimize", "--v", "3", "--L", "3", "--n-max", "1"}).code, 2);
  EXPECT_EQ(run({"optimize", "--v", "81", "--L", "4", "--n-max", "1"}).code, 2);
}

TEST_F(CliTest, CompareFormats) {
  const Result csv = run({"compare", "--K", "27", "--L", "3", "--format", "csv", "--t", "5"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "scheme,K,L,t,M_over_N,F,R,applicable,note");
  EXPECT_NE(csv.out.find("CW,27,3,5,5/27,167076,2,true,"), std::string::npos);
  EXPECT_NE(csv.out.find("WCWL,27,3,5,5/27,108,3,true,otherwise"), std::string::npos);
  EXPECT_NE(csv.out.find("ours,27,3,,5/27,27,3,true,"), std::string::npos);
  const Result json = run({"compare", "--K", "27", "--L", "3", "--format", "json", "-o", path("c.json")});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(read_file(path("c.json")).front(), '[');
  EXPECT_EQ(run({"compare", "--K", "3", "--L", "5"}).code, 2);
}

TEST_F(CliTest, OutputsAreDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"compare", "--K", "84", "--L", "3", "--format", "csv"},
      {"optimize", "--v", "135", "--L", "3", "--n-max", "2", "--csv", "-"},
      {"construct", "--L", "5", "--m", "2,3"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
  ASSERT_EQ(run({"construct", "--L", "3", "--m", "3,1", "-o", path("a.pack")}).code, 0);
  ASSERT_EQ(run({"build-pda", path("a.pack"), "-o", path("a.pda")}).code, 0);
  const std::vector<std::string> sim = {"simulate", path("a.pda"), "--L", "3", "--N", "5", "--demands", "uniform",
                                        "--seed", "3", "--trials", "4"};
  ASSERT_EQ(run({sim[0], sim[1], sim[2], sim[3], sim[4], sim[5], sim[6], sim[7], sim[8], sim[9], sim[10], sim[11],
                 "--transcript", path("t1")})
                .code,
            0);
  ASSERT_EQ(run({sim[0], sim[1], sim[2], sim[3], sim[4], sim[5], sim[6], sim[7], sim[8], sim[9], sim[10], sim[11],
                 "--transcript", path("t2")})
                .code,
            0);
  EXPECT_EQ(read_file(path("t1")), read_file(path("t2")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--L", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--L", "x", "--m", "1"}).code, 2);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
}

}  // namespace
}  // namespace cmacc
