#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "convlab/fixtures.hpp"
#include "convlab/lab/document.hpp"
#include "convlab/reflectors.hpp"

using namespace convlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result sh(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CONVLAB_CLI + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("convlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    for (const auto& f : fixtures::all()) write(f.name + ".json", lab::dump(lab::serialize_space(f.space)));
    write("q.json", lab::dump(lab::serialize_map(fixtures::quotient_not_hereditarily_quotient())));
    write("bad_atom.json", R"({"carrier": ["a", "b"], "completion": "isotone",
      "limits": [{"kernel": ["d"], "limits": ["a"]}]})");
    write("broken.json", "{");
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static nlohmann::json json(const std::string& s) { return nlohmann::json::parse(s); }

  static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, Validate) {
  const auto r = sh("validate " + path("PT3.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = json(r.out);
  EXPECT_TRUE(j["valid"]);
  EXPECT_TRUE(j["pretopology"]);
  EXPECT_FALSE(j["topology"]);
  EXPECT_EQ(sh("validate " + path("bad_atom.json")).code, 2);
  EXPECT_EQ(sh("validate " + path("broken.json")).code, 2);
  EXPECT_EQ(sh("validate " + path("missing.json")).code, 2);
  EXPECT_EQ(sh("validate " + path("NP3.json"), "CONVLAB_MAX_CARRIER=2").code, 3);
  EXPECT_EQ(sh("validate").code, 2);
  EXPECT_EQ(sh("frobnicate").code, 2);
}

TEST_F(Cli, ReflectAdherenceClosurePaving) {
  const auto r = sh("reflect " + path("PT3.json") + " --functor T");
  ASSERT_EQ(r.code, 0);
  const auto t = lab::parse_space_text(r.out);
  EXPECT_EQ(t, reflect(fixtures::pt3(), FunctorTag::T));
  EXPECT_EQ(sh("reflect " + path("PT3.json") + " --functor Q").code, 2);
  const auto a = json(sh("adh " + path("PT3.json") + " --set c").out);
  EXPECT_EQ(a["adherence"], nlohmann::json::array({"b", "c"}));
  const auto c = json(sh("closure " + path("PT3.json") + " --set c").out);
  EXPECT_EQ(c["closure"], nlohmann::json::array({"a", "b", "c"}));
  const auto p = json(sh("paving " + path("NP3.json") + " --point a").out);
  EXPECT_EQ(p["paving_number"], 3);
  EXPECT_EQ(sh("paving " + path("NP3.json") + " --point z").code, 2);
  EXPECT_EQ(sh("adh " + path("NP3.json") + " --set a --format text").code, 0);
}

TEST_F(Cli, ClassifyDualEpi) {
  const auto c = sh("classify " + path("q.json"));
  ASSERT_EQ(c.code, 0);
  const auto j = json(c.out);
  EXPECT_TRUE(j["quotient"]);
  EXPECT_FALSE(j["hereditarily_quotient"]);
  const auto d = json(sh("dual " + path("SIER.json") + " --dualizer sier").out);
  EXPECT_EQ(d["functions"], nlohmann::json::array({"<0,0>", "<0,1>", "<1,1>"}));
  const auto f = json(sh("dual " + path("DISC2.json") + " --dualizer " + path("SIER.json")).out);
  EXPECT_EQ(f["functions"].size(), 4u);
  EXPECT_EQ(sh("dual " + path("DISC3.json") + " --dualizer bour").code, 3);
  const auto e = sh("epi " + path("NP3.json") + " --dualizer bour");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(lab::parse_space(json(e.out)["epi"]), reflect(fixtures::np3(), FunctorTag::S0));
  EXPECT_EQ(sh("epi " + path("NP3.json") + " --dualizer nope").code, 2);
}

TEST_F(Cli, Enumerate) {
  EXPECT_EQ(json(sh("enumerate --size 3 --class topology --count-only").out)["count"], 29);
  EXPECT_EQ(json(sh("enumerate --size 2 --class convergence").out)["spaces"].size(), 9u);
  EXPECT_EQ(sh("enumerate --size 4 --class convergence").code, 3);
  EXPECT_EQ(sh("enumerate --size 2 --class blob").code, 2);
  EXPECT_NE(sh("enumerate --size 3 --class pretopology --count-only --format text").out.find("count: 64"),
            std::string::npos);
}

TEST_F(Cli, SearchAndReplay) {
  const auto s = sh("search --claim S-product-commutation --size 2");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(json(s.out)["status"], "verified");
  EXPECT_EQ(sh("search --claim nope").code, 2);
  const auto f = sh("suite fault-injection");
  EXPECT_EQ(f.code, 1);
  const auto report = json(f.out);
  EXPECT_FALSE(report["passed"]);
  const auto w = report["claims"][0]["witnesses"][0];
  write("witness.json", w.dump());
  const auto r = sh("search --claim fault-declared-classes --replay " + path("witness.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json(r.out)["outcome"], "fails");
  EXPECT_EQ(sh("suite nope").code, 2);
}

TEST_F(Cli, SearchIsDeterministicAcrossWorkers) {
  const std::string args = "search --claim AH-initial-commutation --seed 7 --samples 2000";
  const auto one = sh(args, "CONVLAB_WORKERS=1");
  const auto four = sh(args, "CONVLAB_WORKERS=4");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(json(one.out)["scope"]["seed"], 7);
}
