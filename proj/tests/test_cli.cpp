#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/helpers.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(CPOSET_BIN) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cposet_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST(Cli, GoldenReports) {
  for (const auto& name : testing_support::figure_names()) {
    const Outcome text = run("analyze " + name);
    EXPECT_EQ(text.status, 0) << name;
    EXPECT_EQ(text.out, slurp(fs::path(GOLDEN_DIR) / (name + ".txt"))) << name;
    const Outcome machine = run("--format machine analyze " + name);
    EXPECT_EQ(machine.status, 0) << name;
    EXPECT_EQ(machine.out, slurp(fs::path(GOLDEN_DIR) / (name + ".machine"))) << name;
  }
}

TEST(Cli, DataFilesMatchCorpus) {
  for (const auto& name : testing_support::figure_names()) {
    const Outcome from_file = run("--format machine analyze " + std::string(DATA_DIR) + "/" + name + ".poset");
    EXPECT_EQ(from_file.status, 0);
    EXPECT_EQ(from_file.out, slurp(fs::path(GOLDEN_DIR) / (name + ".machine"))) << name;
  }
}

TEST(Cli, Queries) {
  const Outcome ci = run("ideals fig1 --class c-ideal");
  EXPECT_EQ(ci.status, 0);
  EXPECT_NE(ci.out.find("L(0)"), std::string::npos);
  EXPECT_NE(ci.out.find("L(b)"), std::string::npos);
  EXPECT_EQ(ci.out.find("L(a)"), std::string::npos);

  const Outcome sep = run("separate fig4 --ideal \"e'\" --filter b --mode second");
  EXPECT_EQ(sep.status, 0);
  EXPECT_NE(sep.out.find("L(b')"), std::string::npos);

  const Outcome sep3 = run("separate fig3 --ideal a --filter d");
  EXPECT_EQ(sep3.status, 0);
  EXPECT_NE(sep3.out.find("L(d')"), std::string::npos);

  const Outcome dot = run("dot fig3 --highlight \"L(a')\"");
  EXPECT_EQ(dot.status, 0);
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);

  EXPECT_EQ(run("check fig4").status, 0);
  EXPECT_EQ(run("corpus").status, 0);
}

TEST(Cli, ExitCodeForFailedSeparationAndUnmetRequest) {
  EXPECT_EQ(run("separate fig3 --ideal a --filter b").status, 4);
  EXPECT_EQ(run("check fig2a --statement THM_SEP1").status, 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("--format bogus analyze fig1").status, 1);
  EXPECT_EQ(run("analyze no_such_entry").status, 1);
  EXPECT_EQ(run("check fig1 --statement NOPE").status, 1);
  EXPECT_EQ(run("ideals fig1 --class weird").status, 1);
  EXPECT_EQ(run("separate fig3 --ideal a --filter d --mode sideways").status, 1);
  EXPECT_EQ(run("dot fig1 --highlight \"L(q)\"").status, 1);
  EXPECT_EQ(run("gen --size 1 --seed 1").status, 1);
}

TEST_F(TempFiles, MalformedInputs) {
  EXPECT_EQ(run("analyze " + write("syn.poset", "name: x\nelements: a b\nle: a << b\n")).status, 2);
  EXPECT_EQ(run("analyze " + write("unk.poset", "name: x\nelements: a\ncomp: a -> z\n")).status, 2);
  EXPECT_EQ(run("analyze " + write("dup.poset", "name: x\nname: y\n")).status, 2);
  EXPECT_EQ(run("analyze " + write("cyc.poset", "name: x\nelements: p q\nle: p < q\nle: q < p\n")).status, 3);
  EXPECT_EQ(run("analyze " + write("ax.poset", "name: x\nelements: 0 1\nle: 0 < 1\ncomp: 0 -> 0\ncomp: 1 -> 1\n")).status,
            3);
  const std::string bare = write("bare.poset", "name: x\nelements: 0 1\nle: 0 < 1\n");
  EXPECT_EQ(run("analyze " + bare).status, 0);
  EXPECT_EQ(run("check " + bare).status, 3);
  EXPECT_EQ(run("separate fig3 --ideal \"{a,b}\" --filter d").status, 3);
}

TEST_F(TempFiles, GenIsDeterministicAndReparses) {
  const Outcome a = run("gen --size 8 --seed 42 --require antitone,involution");
  const Outcome b = run("gen --size 8 --seed 42 --require antitone,involution");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("gen --size 7 --seed 42 --require involution").status, 3);
  const std::string path = write("gen.poset", a.out);
  EXPECT_EQ(run("check " + path).status, 0);
  const auto inst = cposet::parse_instance(a.out);
  ASSERT_TRUE(inst.comp);
  const auto cp = cposet::complemented(inst);
  EXPECT_TRUE(cp.props().antitone);
  EXPECT_TRUE(cp.props().involution);
}

TEST_F(TempFiles, CorpusEmitRoundTrips) {
  ASSERT_EQ(run("corpus --emit " + dir_.string()).status, 0);
  for (const auto& name : testing_support::figure_names()) {
    EXPECT_EQ(slurp(dir_ / (name + ".poset")), slurp(fs::path(DATA_DIR) / (name + ".poset"))) << name;
  }
}
