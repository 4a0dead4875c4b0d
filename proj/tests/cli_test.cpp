#include "sawtooth/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "sawtooth/io.hpp"
#include "sawtooth/network.hpp"

namespace sawtooth {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sawtooth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_text_file(path("mirror.json"), network_to_json(mirror_network()).dump(2));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "sawtooth");
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CompileMirror) {
  ASSERT_EQ(run({"compile", path("mirror.json"), "-o", path("f.json")}), kExitOk) << err_.str();
  EXPECT_EQ(pwl_from_json(parse_json_text(read_text_file(path("f.json")))), mirror_map());
  EXPECT_NE(out_.str().find("pieces: 4"), std::string::npos);

  ASSERT_EQ(run({"compile", path("mirror.json"), "--iterations", "3", "-o", path("f3.json")}), kExitOk);
  EXPECT_EQ(pwl_from_json(parse_json_text(read_text_file(path("f3.json")))).piece_count(), 10u);
  EXPECT_NE(out_.str().find("pieces: 10"), std::string::npos);
  EXPECT_NE(out_.str().find("4096"), std::string::npos);  // (2*2)^(2*3)
}

TEST_F(CliTest, CompileTruncatedFileFails) {
  const std::string text = read_text_file(path("mirror.json"));
  write_text_file(path("bad.json"), text.substr(0, text.size() / 2));
  EXPECT_EQ(run({"compile", path("bad.json"), "-o", path("out.json")}), kExitUsage);
  EXPECT_FALSE(fs::exists(path("out.json")));
  EXPECT_EQ(run({"compile", path("missing.json"), "-o", path("out.json")}), kExitUsage);
}

TEST_F(CliTest, Dataset) {
  ASSERT_EQ(run({"dataset", "--k", "2", "-o", path("d.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("d.csv")), "x,y\n0,0\n1/4,1\n1/2,0\n3/4,1\n");
  ASSERT_EQ(run({"dataset", "--n", "1", "-o", path("one.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("one.csv")), "x,y\n0,0\n");
  ASSERT_EQ(run({"dataset", "--k", "2", "--strict-paper-coords", "-o", path("s.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("s.csv")), "x,y\n1/16,1\n1/8,0\n3/16,1\n1/4,0\n");
  EXPECT_EQ(run({"dataset", "--k", "2", "--n", "4", "-o", path("x.csv")}), kExitUsage);
  EXPECT_EQ(run({"dataset", "-o", path("x.csv")}), kExitUsage);
}

TEST_F(CliTest, Error) {
  ASSERT_EQ(run({"compile", path("mirror.json"), "--iterations", "3", "-o", path("f3.json")}), kExitOk);
  ASSERT_EQ(run({"dataset", "--k", "3", "-o", path("d8.csv")}), kExitOk);
  ASSERT_EQ(run({"error", path("f3.json"), path("d8.csv")}), kExitOk);
  EXPECT_NE(out_.str().find("error: 0\n"), std::string::npos) << out_.str();

  write_text_file(path("zero.json"), pwl_to_json(PwlFunction()).dump());
  ASSERT_EQ(run({"error", path("zero.json"), path("d8.csv")}), kExitOk);
  EXPECT_NE(out_.str().find("error: 1/2\n"), std::string::npos);
  EXPECT_NE(out_.str().find("0.5"), std::string::npos);

  write_text_file(path("mismatch.json"),
                  R"({"breakpoints":["0","1"],"pieces":[{"slope":"0","intercept":"0"}]})");
  EXPECT_EQ(run({"error", path("mismatch.json"), path("d8.csv")}), kExitUsage);
}

TEST_F(CliTest, Bound) {
  ASSERT_EQ(run({"bound", "--n", "256", "--t", "2", "--m", "2", "--l", "2"}), kExitOk);
  Json j = Json::parse(out_.str());
  EXPECT_EQ(j["bound"], "1/4");
  ASSERT_EQ(run({"bound", "--n", "256", "--m", "8", "--l", "2"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str())["bound"], "0");
  ASSERT_EQ(run({"bound", "--k", "10", "--m", "5", "--l", "2"}), kExitOk);
  const ExactRational b = ExactRational::parse(Json::parse(out_.str())["bound"].get<std::string>());
  EXPECT_GE(b, ExactRational(1, 6));
  EXPECT_EQ(run({"bound", "--n", "0", "--m", "1", "--l", "1"}), kExitUsage);
  EXPECT_EQ(run({"bound", "--m", "1", "--l", "1"}), kExitUsage);
}

TEST_F(CliTest, Plot) {
  write_text_file(path("fm.json"), pwl_to_json(mirror_map()).dump());
  ASSERT_EQ(run({"plot", path("fm.json"), "--range", "0..1", "-o", path("p.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("p.csv")), "x,y\n0,0\n0.5,1\n1,0\n");
  write_text_file(path("c.json"), pwl_to_json(PwlFunction::constant(1)).dump());
  ASSERT_EQ(run({"plot", path("c.json"), "--range", "0..1", "-o", path("c.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("c.csv")), "x,y\n0,1\n1,1\n");
  write_text_file(path("f2.json"), pwl_to_json(compile_recurrent(mirror_recurrent(2))).dump());
  ASSERT_EQ(run({"plot", path("f2.json"), "--range", "0..1", "-o", path("p2.csv")}), kExitOk);
  EXPECT_EQ(read_text_file(path("p2.csv")), "x,y\n0,0\n0.25,1\n0.5,0\n0.75,1\n1,0\n");
  EXPECT_EQ(run({"plot", path("fm.json"), "--range", "1..0", "-o", path("x.csv")}), kExitUsage);
  EXPECT_EQ(run({"plot", path("fm.json"), "--range", "zero", "-o", path("x.csv")}), kExitUsage);
}

TEST_F(CliTest, Verify) {
  ASSERT_EQ(run({"verify", "--suite", "add_bound", "--cases", "50", "--seed", "7"}), kExitOk);
  EXPECT_NE(out_.str().find("PASS add_bound"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}), kExitUsage);
  ASSERT_EQ(run({"verify", "--suite", "ap_image", "-o", path("r.json")}), kExitOk);
  const Json r = parse_json_text(read_text_file(path("r.json")));
  EXPECT_EQ(r["suite"], "ap_image");
  EXPECT_EQ(r["failures"], 0);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("SAWTOOTH_SEED", "123", 1);
  ASSERT_EQ(run({"verify", "--suite", "add_bound", "--cases", "5"}), kExitOk);
  EXPECT_NE(out_.str().find("seed 123"), std::string::npos);
  ::setenv("SAWTOOTH_SEED", "abc", 1);
  EXPECT_EQ(run({"verify", "--suite", "add_bound", "--cases", "5"}), kExitUsage);
  ::unsetenv("SAWTOOTH_SEED");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

}  // namespace
}  // namespace sawtooth
