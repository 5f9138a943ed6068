#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = dupdist::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Distance) {
  EXPECT_EQ(run({"distance", "1001011"}).out, "f=3 root=101\n");
  EXPECT_EQ(run({"distance", "10"}).out, "f=0 root=10\n");
  EXPECT_EQ(run({"distance", "0110", "--beta", "0.5"}).out, "f_beta=1\n");
  EXPECT_EQ(run({"distance", "0000100110101111"}).out, "f=7 root=01\n");
}

TEST(Cli, ExitCodes) {
  const auto bad = run({"distance", "0120"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run({"distance"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"distance", std::string(30, '0')}).code, 3);
  EXPECT_EQ(run({"table", "--max-n", "40"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Table) {
  const auto r = run({"table", "--max-n", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,f\n1,0\n2,1\n3,2\n4,2\n5,3\n6,4\n7,4\n8,5\n9,6\n10,6\n11,7\n12,7\n");
  const auto all = run({"table", "--max-n", "4", "--sigma", "all"});
  EXPECT_EQ(all.out,
            "n,f0,f1,f01,f10,f010,f101,f\n"
            "1,0,0,,,,,0\n"
            "2,1,1,0,0,,,1\n"
            "3,2,2,1,1,0,0,2\n"
            "4,2,2,2,2,1,1,2\n");
  const auto zero = run({"table", "--max-n", "9", "--sigma", "0"});
  EXPECT_EQ(zero.out, "n,f\n1,0\n2,1\n3,2\n4,2\n5,3\n6,3\n7,3\n8,3\n9,4\n");
}

TEST(Cli, TableWithWarmCacheIsIdentical) {
  const auto path = (std::filesystem::temp_directory_path() / "dupdist_cli_cache.bin").string();
  std::filesystem::remove(path);
  const auto cold = run({"table", "--max-n", "14", "--cache", path});
  const auto warm = run({"table", "--max-n", "14", "--cache", path});
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST(Cli, BigMemoryWarning) {
  // cap check happens before any work, the warning does not
  EXPECT_EQ(run({"fnm", "--max-n", "33"}).code, 3);
}

TEST(Cli, Fnm) {
  const auto r = run({"fnm", "--max-n", "8"});
  EXPECT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,m,f,ratio");
  int rows = 0;
  bool saw = false;
  while (std::getline(is, line)) {
    ++rows;
    saw |= line == "8,7,1,1";
  }
  EXPECT_EQ(rows, 15);
  EXPECT_TRUE(saw);
  EXPECT_NE(r.err.find("min ratio"), std::string::npos);
}

TEST(Cli, Generate) {
  EXPECT_EQ(run({"generate", "--kind", "debruijn", "--order", "3"}).out, "00010111\n");
  EXPECT_EQ(run({"generate", "--kind", "thue-morse", "--order", "3"}).out, "01101001\n");
  EXPECT_EQ(run({"generate", "--kind", "fibonacci", "--order", "4"}).out, "01001010\n");
  EXPECT_EQ(run({"generate", "--kind", "d0l", "--order", "3", "--rules", "0,01,10"}).out,
            "01101001\n");
  EXPECT_EQ(run({"generate", "--kind", "d0l", "--order", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--kind", "nope", "--order", "3"}).code, 2);
}

TEST(Cli, ScheduleVerifyPipeline) {
  for (const char* kind : {"fibonacci", "thue-morse"}) {
    const auto s = run({"schedule", "--kind", kind, "--order", "6"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(run({"verify"}, s.out).code, 0);
    const auto lifted = run({"schedule", "--kind", kind, "--order", "6", "--lift"});
    EXPECT_EQ(run({"verify"}, lifted.out).code, 0);
  }
}

TEST(Cli, VerifyRejectsTampering) {
  const std::string good =
      R"({"original":"0110","beta":0.0,"steps":[{"i":2,"h":1,"keep":"first"}],"final":"010"})";
  EXPECT_EQ(run({"verify"}, good).code, 0);
  const std::string tampered =
      R"({"original":"0110","beta":0.0,"steps":[{"i":1,"h":1,"keep":"first"}],"final":"010"})";
  const auto r = run({"verify"}, tampered);
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(r.err.empty());
  const std::string not_root =
      R"({"original":"0000","beta":0.0,"steps":[{"i":1,"h":1,"keep":"first"}],"final":"000"})";
  EXPECT_EQ(run({"verify"}, not_root).code, 4);
  EXPECT_EQ(run({"verify"}, "not json").code, 2);
}

TEST(Cli, EmitProcessIsVerifiable) {
  const auto path = (std::filesystem::temp_directory_path() / "dupdist_cli_proc.json").string();
  ASSERT_EQ(run({"distance", "1001011", "--emit-process", path}).code, 0);
  EXPECT_EQ(run({"verify", path}).code, 0);
  ASSERT_EQ(run({"distance", "0111010", "--beta", "0.5", "--emit-process", path}).code, 0);
  EXPECT_EQ(run({"verify", path}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, BoundsAndFindRepeat) {
  const auto b = run({"bounds", "--n", "12"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("\"exact\""), std::string::npos);
  EXPECT_EQ(run({"bounds", "--n", "1000", "--beta", "0.3"}).code, 0);
  const auto w = run({"find-repeat", "--random", "2000", "--beta", "0.6"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("\"mismatches\""), std::string::npos);
  EXPECT_EQ(run({"find-repeat", "--random", "4096", "--a", "0.5"}).code, 0);
  EXPECT_EQ(run({"find-repeat", "0101", "--beta", "0.6"}).code, 2);
}
