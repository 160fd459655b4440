#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(UNITAL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

json outputs(const CliRun& r) { return json::parse(r.out).at("outputs"); }

}  // namespace

TEST(Cli, NegativityOfWernerHolevo) {
  const CliRun r = run("covariant negativity --d 3 --epsilon 0.6667");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(outputs(r)["negativity"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, QuaternionCertificate) {
  const CliRun r = run("birkhoff quaternion --d 3");
  ASSERT_EQ(r.code, 0);
  const json o = outputs(r);
  EXPECT_NEAR(o["y"].get<double>(), -7.0 / 9.0, 1e-12);
  EXPECT_TRUE(o["hermitian"].get<bool>());
  EXPECT_TRUE(o["unitary"].get<bool>());
  EXPECT_EQ(run("birkhoff quaternion --d 7").code, 4);
}

TEST(Cli, NonSquareMatrixFile) {
  const std::string path = write_temp("cli_nonsquare.json", R"({"kraus": [[[1, 0, 0], [0, 1, 0]]]})");
  EXPECT_EQ(run("check " + path).code, 3);
  EXPECT_EQ(run("check " + write_temp("cli_garbage.json", "{oops")).code, 3);
  EXPECT_EQ(run("check /nonexistent/file.json").code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("covariant coords").code, 2);
  EXPECT_EQ(run("covariant coords --d 3").code, 2);
  EXPECT_EQ(run("covariant coords --d 3 --epsilon 0.1 --q0 1").code, 2);
  EXPECT_EQ(run("decompose affine x.json").code, 2);
  EXPECT_EQ(run("extremal").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, RangeErrors) {
  EXPECT_EQ(run("covariant negativity --d 3 --epsilon 0.9").code, 4);
  EXPECT_EQ(run("covariant coords --d 3 --q0 0.5 --q1 0.6 --q2 0.1").code, 4);
  EXPECT_EQ(run("optimize --objective nope --d 3 --D 2 --seed 1").code, 4);
  EXPECT_EQ(run("figure two-copy --d 5 --out /dev/null").code, 4);
}

TEST(Cli, CheckAndChoi) {
  const std::string path = write_temp("cli_depol.json",
                                      R"({"kraus": [[[0.5, 0], [0, 0.5]], [[0, 0.5], [0.5, 0]],
                                                    [[0, [0, -0.5]], [[0, 0.5], 0]], [[0.5, 0], [0, -0.5]]]})");
  const CliRun r = run("check " + path);
  ASSERT_EQ(r.code, 0);
  const json o = outputs(r);
  EXPECT_TRUE(o["cp"].get<bool>());
  EXPECT_TRUE(o["tp"].get<bool>());
  EXPECT_TRUE(o["unital"].get<bool>());
  const CliRun c = run("choi " + path);
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(outputs(c)["d"], 2);
  EXPECT_NEAR(outputs(c)["rho"][0][0].get<double>(), 0.25, 1e-15);
}

TEST(Cli, Decompositions) {
  const std::string path = write_temp("cli_mix.json", R"({"kraus": [[[0.6, 0], [0, 0.6]], [[0.8, 0], [0, -0.8]]]})");
  const CliRun a = run("decompose affine " + path + " --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_NEAR(outputs(a)["coefficient_sum"].get<double>(), 1.0, 1e-10);
  EXPECT_LT(outputs(a)["residual"].get<double>(), 1e-8);
  const CliRun h = run("decompose hs " + path);
  ASSERT_EQ(h.code, 0);
  EXPECT_LT(outputs(h)["reconstruction_error"].get<double>(), 1e-10);
}

TEST(Cli, ExtremalBuiltInExample) {
  const CliRun r = run("extremal --appendix-b");
  ASSERT_EQ(r.code, 0);
  const json o = outputs(r);
  EXPECT_FALSE(o["extremal_in_all"].get<bool>());
  EXPECT_TRUE(o["extremal_in_unital"].get<bool>());
  EXPECT_EQ(o["rank_unital"], 16);
}

TEST(Cli, WitnessOnFamily) {
  const std::string b = write_temp("cli_b.json", "[[1,0,0],[0,1,0],[0,0,1]]");
  const CliRun r = run("witness --b " + b);
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(outputs(r)["w"].get<double>(), 1.0 / 3.0, 1e-15);
  const std::string rho2 = write_temp("cli_rho2.json", R"({"rho": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]]})");
  EXPECT_EQ(run("witness --b " + b + " --rho " + rho2).code, 3);
}

TEST(Cli, TwoCopyAndDepolarizing) {
  const CliRun t = run("birkhoff two-copy --epsilon 0.3");
  ASSERT_EQ(t.code, 0);
  EXPECT_TRUE(outputs(t)["in_unitary_mixtures"].get<bool>());
  EXPECT_FALSE(outputs(run("birkhoff two-copy --epsilon 0.33"))["in_unitary_mixtures"].get<bool>());
  const CliRun d = run("birkhoff depolarizing --d 3 --D 2 --epsilon 0.4");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(outputs(d)["verdict"], "inside");
  EXPECT_NEAR(outputs(d)["y"].get<double>(), -1.0 / 3.0 - 0.4, 1e-12);
}

TEST(Cli, OptimizeIsDeterministic) {
  const std::string args = "optimize --objective tr-u-ubar-t2 --d 3 --D 2 --restarts 5 --seed 7";
  const CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NEAR(outputs(a)["value"].get<double>(), -7.0 / 9.0, 1e-6);
  EXPECT_EQ(outputs(a)["restarts"], 5);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* args : {"covariant membership --d 5 --q0 0.2 --q1 0.3 --q2 0.5", "extremal --appendix-b",
                           "birkhoff quaternion --d 5"})
    EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Cli, FigureFiles) {
  for (const char* kind : {"covariant", "negativity", "two-copy"}) {
    const std::string path = ::testing::TempDir() + "cli_fig_" + kind + ".csv";
    const CliRun r = run(std::string("figure ") + kind + " --d 3 --out " + path);
    ASSERT_EQ(r.code, 0) << kind;
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    EXPECT_NE(header.find("x_F"), std::string::npos);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, outputs(r)["rows"].get<int>());
    std::remove(path.c_str());
  }
}
