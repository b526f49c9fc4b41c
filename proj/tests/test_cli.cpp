#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ONEWTYPE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, DecomposeSpinF4) {
  auto r = run("decompose-spin F4 --sigma '(4,8)'");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["constituents"], nlohmann::json::parse(R"([{"label":"8_s","mult":1},{"label":"8_ss","mult":1}])"));
}

TEST(Cli, CentralCharacterTypeB) {
  auto r = run("central-character --type B --lambda 2,1 --ks 1 --kl 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1,2,0)\n");
}

TEST(Cli, VerifyTables) {
  EXPECT_EQ(run("verify-table G2 --full").code, 0);
  EXPECT_EQ(run("verify-table E8 --dims-only").code, 0);
  EXPECT_EQ(run("verify-table E6 --full").code, 3);
  EXPECT_EQ(run("verify-table G2").code, 2);
}

TEST(Cli, InvalidInputAndGates) {
  EXPECT_EQ(run("roots Q3").code, 2);
  EXPECT_EQ(run("decompose-spin F4 --sigma '(5,5)'").code, 2);
  EXPECT_EQ(run("central-character --type B --lambda 2,3").code, 2);
  EXPECT_EQ(run("weyl-classes E8").code, 3);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, OneWTypeBuildAndDeterminism) {
  auto a = run("one-wtype-build --type F4 --sigma '(4,8)' --ks 1 --kl 1");
  ASSERT_EQ(a.code, 0);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["extends"]);
  EXPECT_TRUE(j["dirac_zero"]);
  EXPECT_EQ(a.out, run("one-wtype-build --type F4 --sigma '(4,8)' --ks 1 --kl 1").out);
  auto no = nlohmann::json::parse(run("one-wtype-build --type F4 --sigma '(4,7)' --ks 3 --kl 1").out);
  EXPECT_FALSE(no["extends"]);
  auto list = nlohmann::json::parse(run("one-wtype A 3 --ks 1 --kl 1").out);
  EXPECT_EQ(list["candidates"].size(), 3u);
}

TEST(Cli, RootsAndTables) {
  auto j = nlohmann::json::parse(run("roots G2").out);
  EXPECT_EQ(j["positive_roots"].size(), 6u);
  auto pc = nlohmann::json::parse(run("pin-cover G2").out);
  EXPECT_EQ(pc["order"], 24);
  auto t = run("chartab G2");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("chi5"), std::string::npos);
}
