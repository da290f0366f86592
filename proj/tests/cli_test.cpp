#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace qcodes::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qcodes_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string build_example() {
    const std::string file = path("c.json");
    EXPECT_EQ(run_cli({"build", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--out", file}).code, 0);
    return file;
  }

  std::filesystem::path dir_;
};

TEST(CliPrime, Examples) {
  CliRun r = run_cli({"prime", "--p", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "pi = 2+1w  (norm 7)\n");
  EXPECT_EQ(run_cli({"prime", "--p", "13"}).out, "pi = 1+2w  (norm 13)\n");
  r = run_cli({"prime", "--p", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "no H(K1) representation for 5\n");
  EXPECT_EQ(run_cli({"prime", "--p", "8"}).code, 1);
}

TEST(CliTable, MatchesFixture) {
  const CliRun r = run_cli({"table", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--limit", "24"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read(std::filesystem::path(QCODES_FIXTURE_DIR) / "table1.tsv"));
}

TEST(CliTable, Rows) {
  const CliRun r = run_cli({"table", "--pi", "2+1w", "--alpha", "1-1w", "--limit", "14"});
  EXPECT_NE(r.out.find("0\t1\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n10\t-3\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n13\t0+2w\n"), std::string::npos);
}

TEST(CliTable, SearchedRootAndErrors) {
  const CliRun r = run_cli({"table", "--p", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n1\t3\n"), std::string::npos);  // least primitive root mod 49
  EXPECT_NE(r.out.find("\n41\t"), std::string::npos);
  EXPECT_EQ(run_cli({"table", "--pi", "2,1", "--alpha", "7"}).code, 1);
  EXPECT_EQ(run_cli({"table", "--pi", "2,1", "--alpha", "1,-1w", "--p", "7"}).code, 1);
}

TEST_F(CliFiles, BuildWritesCodeFile) {
  const std::string file = build_example();
  EXPECT_EQ(read(file),
            "{\"family\":\"prime_square\",\"pi\":[2,1],\"power\":2,\"modulus\":[1,4],"
            "\"ring_norm\":49,\"length\":21,\"quotient_sign\":1,\"root\":[1,-1]}\n");
  const std::string crt = path("d.json");
  ASSERT_EQ(run_cli({"build-crt", "--pi1", "2,1", "--pi2", "1,2", "--target", "2", "--out", crt}).code, 0);
  EXPECT_NE(read(crt).find("\"length\":12"), std::string::npos);
  const CliRun bad = run_cli({"build", "--pi", "0,1", "--power", "2", "--out", path("e.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("PartsNotCoprime"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(path("e.json")));
}

TEST_F(CliFiles, EncodeCorruptDecode) {
  const std::string file = build_example();
  const CliRun enc = run_cli({"encode", "--code", file, "--message", "1"});
  ASSERT_EQ(enc.code, 0) << enc.err;
  EXPECT_EQ(enc.out, "-1+1w,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n");
  const std::string word = first_line(enc.out);

  const CliRun clean = run_cli({"decode", "--code", file, "--word", word});
  EXPECT_EQ(clean.code, 0);
  EXPECT_EQ(first_line(clean.out), "clean");

  const CliRun cor = run_cli({"corrupt", "--code", file, "--word", word, "--pos", "5", "--sign", "+1"});
  ASSERT_EQ(cor.code, 0) << cor.err;
  const CliRun dec = run_cli({"decode", "--code", file, "--word", first_line(cor.out)});
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.out, "corrected: yes  error: +1 @ 5\nword: " + word + "\n");

  for (const char* method : {"dlog", "reference"}) {
    EXPECT_EQ(run_cli({"decode", "--code", file, "--word", first_line(cor.out), "--method", method}).out,
              dec.out);
  }

  const CliRun neg = run_cli({"corrupt", "--code", file, "--word", word, "--pos", "3", "--sign", "-1"});
  EXPECT_EQ(first_line(run_cli({"decode", "--code", file, "--word", first_line(neg.out)}).out),
            "corrected: yes  error: -1 @ 3");
}

TEST_F(CliFiles, RandomCorruptionIsSeeded) {
  const std::string file = build_example();
  const CliRun a = run_cli({"corrupt", "--code", file, "--word", "0", "--seed", "9"});
  const CliRun b = run_cli({"corrupt", "--code", file, "--word", "0", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  EXPECT_EQ(run_cli({"decode", "--code", file, "--word", first_line(a.out)}).code, 0);
}

TEST_F(CliFiles, UncorrectableExitsTwo) {
  const std::string file = build_example();
  const CliRun r = run_cli({"decode", "--code", file, "--word", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(first_line(r.out), "uncorrectable  syndrome: -5+1w");
}

TEST_F(CliFiles, ParseErrorsExitOne) {
  const std::string file = build_example();
  EXPECT_EQ(run_cli({"decode", "--code", file, "--word", "1,x"}).code, 1);
  EXPECT_EQ(run_cli({"encode", "--code", file, "--message", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"}).code, 1);
  EXPECT_EQ(run_cli({"encode", "--code", path("missing.json"), "--message", "1"}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliFiles, VerifyTrialsAndDeterminism) {
  const std::string file = build_example();
  const CliRun a = run_cli({"verify", "--code", file, "--trials", "10", "--seed", "7"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("decode round-trip: 473/473"), std::string::npos) << a.out;
  const CliRun b = run_cli({"verify", "--code", file, "--trials", "10", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliFiles, VerifyDefaultRun) {
  const CliRun r = run_cli({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("decode round-trip: 8643/8643"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verification: PASS"), std::string::npos);
}

TEST_F(CliFiles, VerifyCrtCode) {
  const std::string crt = path("d.json");
  ASSERT_EQ(run_cli({"build-crt", "--pi1", "2,1", "--pi2", "1,2", "--target", "2", "--out", crt}).code, 0);
  const CliRun r = run_cli({"verify", "--code", crt, "--trials", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(CliFiles, TamperedCodeFailsVerification) {
  const std::string file = path("t.json");
  std::ofstream(file) << "{\"family\":\"prime_square\",\"pi\":[2,1],\"power\":2,\"modulus\":[1,4],"
                         "\"ring_norm\":49,\"length\":21,\"quotient_sign\":1,\"root\":[2,0]}\n";
  const CliRun r = run_cli({"verify", "--code", file});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("verification: FAIL"), std::string::npos);
  EXPECT_EQ(run_cli({"encode", "--code", file, "--message", "1"}).code, 1);
}

}  // namespace
}  // namespace qcodes::cli
