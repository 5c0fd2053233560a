// Runs the built command-line tool and checks exit codes and output.

#include "support.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

using namespace testing_support;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(LATVAR_CLI) + "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kExample = "'" + fixture("singular10.json") + "'";

TEST(Cli, BuildSummary) {
  const Result r = run("build " + kExample);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "|L|=10 |J|=5 codim=5 dim=5\n");
  const Result j = run("build --from-lattice " + kExample + " --json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(latvar::json::parse(j.out).at("size"), 10);
}

TEST(Cli, PointVerdictExitCodes) {
  const Result bad = run("smoothness " + kExample + " --point 3");
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(bad.out, "singular (rank 4 < codim 5)\n");
  const Result good = run("smoothness " + kExample + " --point 4");
  EXPECT_EQ(good.status, 0);
  EXPECT_EQ(good.out, "smooth\n");
  EXPECT_EQ(run("smoothness --chains 4 --point '{1}'").out, "smooth (codim 0)\n");
  const Result j = run("--json smoothness --from-lattice " + kExample + " --point 3");
  EXPECT_EQ(j.status, 2);
  const auto doc = latvar::json::parse(j.out);
  EXPECT_EQ(doc.at("rank"), 4);
  EXPECT_EQ(doc.at("verdict"), "singular");
}

TEST(Cli, FullReportAndPolytope) {
  const Result r = run("smoothness " + kExample);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("all coordinate points smooth: no"), std::string::npos);
  const Result p = run("polytope " + kExample);
  EXPECT_EQ(p.status, 2);
  EXPECT_NE(p.out.find("dimension 4, 10 vertices, 21 edges"), std::string::npos);
  EXPECT_NE(p.out.find("3: not simple (5 edges in dimension 4)"), std::string::npos);
  EXPECT_EQ(run("polytope --chains 3,3").status, 0);
}

TEST(Cli, ClassifyDecomposePrune) {
  const Result c = run("classify --chains 3,2");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("square: yes"), std::string::npos);
  EXPECT_EQ(run("decompose --chains 3,2").out, "c(3) x c(2)\n");
  EXPECT_EQ(run("decompose " + kExample).status, 1);
  const Result p = run("prune --chains 3,3 --beta a2");
  EXPECT_EQ(p.status, 0);
  EXPECT_NE(p.out.find("|L_beta|=6 |B_beta|=3"), std::string::npos);
  EXPECT_EQ(run("prune --chains 3,3 --beta a1").status, 1);
}

TEST(Cli, VerifyAndCampaign) {
  EXPECT_EQ(run("verify --theorem b --chain-products 16").status, 0);
  EXPECT_EQ(run("verify --theorem tree-honest --all-posets 3").status, 0);
  EXPECT_EQ(run("verify --lemmas --chain-products 12").status, 0);
  EXPECT_EQ(run("verify --chain-products 12").status, 1);
  EXPECT_EQ(run("verify --theorem z --chain-products 12").status, 1);
  const Result c = run("campaign --random-trees 5 --seed 3 --json");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(latvar::json::parse(c.out).at("family"), "random-trees(5,depth=3,branches=3,seed=3)");
  EXPECT_EQ(run("campaign --random-trees 5 --seed 3 --json").out, c.out);
}

TEST(Cli, Exports) {
  const auto dir = std::filesystem::temp_directory_path() / "latvar-cli-test";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "ex").string();
  EXPECT_EQ(run("export " + kExample + " --dot -o '" + prefix + "'").status, 0);
  EXPECT_TRUE(std::filesystem::exists(prefix + ".lattice.dot"));
  EXPECT_TRUE(std::filesystem::exists(prefix + ".j.dot"));
  EXPECT_EQ(run("export --chains 2,2 --relations").out, "x[1]*x[2] - x[0]*x[3]\n");
  const Result j = run("export " + kExample);
  EXPECT_EQ(latvar::json::parse(j.out).at("codim"), 5);
}

TEST(Cli, ErrorsAndCaps) {
  const Result missing = run("--json build /nonexistent.json");
  EXPECT_EQ(missing.status, 1);
  EXPECT_EQ(latvar::json::parse(missing.out).at("error").at("code"), "IoError");
  const Result capped = run("build " + kExample + " --max-size 5 --json");
  EXPECT_EQ(capped.status, 1);
  EXPECT_EQ(latvar::json::parse(capped.out).at("error").at("code"), "SizeLimitExceeded");
  EXPECT_EQ(run("build " + kExample, "LATTICE_MAX_SIZE=5").status, 1);
  EXPECT_EQ(run("build " + kExample + " --max-size 20", "LATTICE_MAX_SIZE=5").status, 0);
  EXPECT_EQ(run("build").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("smoothness " + kExample + " --point nope").status, 1);
}

}  // namespace
