// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/cli.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace seqtok::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = fs::path(SEQTOK_TEST_DATA) / "golden";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("seqtok_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    fs::copy_file(kGolden / "sample.txt", dir_ / "sample.txt");
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GoldenTokensAndStats) {
  for (const char* strategy : {"anchored", "direct"}) {
    const auto r = invoke({path("sample.txt"), "-c", (kGolden / "config.xml").string(),
                           "--stats-format", "json", "-o", path("out.tok"), "--strategy",
                           strategy});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(slurp(dir_ / "out.tok"), slurp(kGolden / "expected.tok")) << strategy;
    EXPECT_EQ(r.out, slurp(kGolden / "expected_stats.json")) << strategy;
    EXPECT_EQ(r.err, "");
  }
}

TEST_F(CliTest, GoldenFilteredText) {
  const auto r = invoke({path("sample.txt"), "--mode", "remove", "--ip", "--emit-text",
                         "--no-stats", "-o", path("out.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir_ / "out.txt"), slurp(kGolden / "expected_filtered.txt"));
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, StreamedMatchesInMemory) {
  const std::string base = path("sample.txt");
  const auto a = invoke({base, "--tag", "-o", path("a.tok"), "--stats-format", "json"});
  const auto b = invoke({base, "--tag", "-o", path("b.tok"), "--stats-format", "json",
                         "--max-in-memory", "16"});
  ASSERT_EQ(a.code, kExitOk);
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_EQ(slurp(dir_ / "a.tok"), slurp(dir_ / "b.tok"));
  EXPECT_EQ(a.out, b.out);

  const auto c = invoke({base, "--mode", "remove", "--emit-text", "-o", path("c.txt")});
  const auto d = invoke({base, "--mode", "remove", "--emit-text", "-o", path("d.txt"),
                         "--max-in-memory", "16"});
  ASSERT_EQ(c.code, kExitOk);
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_EQ(slurp(dir_ / "c.txt"), slurp(dir_ / "d.txt"));
}

TEST_F(CliTest, DefaultOutputNameAndTextStats) {
  const auto r = invoke({path("sample.txt")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "sample.txt.tok"));
  EXPECT_EQ(r.out.rfind("total_tokens", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("top_terms\n"), std::string::npos);
}

TEST_F(CliTest, FlagsOverrideConfig) {
  // Config removes IPs; --mode preserve brings them back.
  const auto r = invoke({path("sample.txt"), "-c", (kGolden / "config.xml").string(),
                         "--mode", "preserve", "--no-stats", "-o", path("o.tok")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(slurp(dir_ / "o.tok").find("<IP> 192.168.0.1\n"), std::string::npos);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, KindFlagsSelectExplicitly) {
  const auto r = invoke({path("sample.txt"), "--date", "--no-stats", "-o", path("o.tok")});
  ASSERT_EQ(r.code, kExitOk);
  const auto tokens = slurp(dir_ / "o.tok");
  EXPECT_NE(tokens.find("16/07/1982\n"), std::string::npos);
  EXPECT_EQ(tokens.find("qalhajja@kfu.edu.sa"), std::string::npos);
  EXPECT_NE(tokens.find("qalhajja\n"), std::string::npos);
}

TEST_F(CliTest, SeveralInputsWriteIntoDirectory) {
  write(dir_ / "two.txt", "x 1.2.3.4\n");
  const auto r = invoke({path("sample.txt"), path("two.txt"), "-o", path("outdir")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir_ / "outdir" / "two.txt.tok"), "x\n1.2.3.4\n");
  EXPECT_TRUE(fs::exists(dir_ / "outdir" / "sample.txt.tok"));
  EXPECT_NE(r.out.find("== " + path("two.txt") + " =="), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), "--mode", "shred"}).code, kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), "--stats", "--no-stats"}).code, kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), "--emit-text", "--mode", "preserve"}).code, kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), "--strategy", "fast"}).code, kExitUsage);
  write(dir_ / "file", "");
  EXPECT_EQ(invoke({path("sample.txt"), path("sample.txt"), "-o", path("file")}).code,
            kExitUsage);
  EXPECT_EQ(invoke({path("sample.txt"), path("sample.txt")}).code, kExitUsage);
}

TEST_F(CliTest, MissingInputIsFailureButOthersProcessed) {
  const auto r = invoke({path("missing.txt"), path("sample.txt"), "-o", path("outdir")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("missing.txt"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "outdir" / "sample.txt.tok"));
}

TEST_F(CliTest, BadConfigIsFailure) {
  write(dir_ / "bad.xml",
        "<tokenizer-config>\n<sequences>\n<sequence type=\"phone\"/>\n</sequences>\n"
        "</tokenizer-config>\n");
  const auto r = invoke({path("sample.txt"), "-c", path("bad.xml")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("unknown sequence type 'phone'"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir_ / "sample.txt.tok"));
}

TEST_F(CliTest, UnwritableOutputIsFailure) {
  const auto r = invoke({path("sample.txt"), "-o", path("no/such/dir/out.tok")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("cannot write"), std::string::npos);
}

TEST_F(CliTest, BinaryExitCodes) {
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const std::string bin = SEQTOK_BINARY;
  EXPECT_EQ(status(bin + " " + path("sample.txt")), 0);
  EXPECT_EQ(status(bin + " " + path("nothing.txt")), 1);
  EXPECT_EQ(status(bin), 2);
  EXPECT_EQ(status(bin + " --help"), 0);
}

}  // namespace
}  // namespace seqtok::cli
