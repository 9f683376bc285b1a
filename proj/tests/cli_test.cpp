#include "eah/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "test_support.hpp"

namespace eah::cli {
namespace {

namespace fs = std::filesystem;
using eah::testing::kSample200;
using eah::testing::kSample9;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("eahc_") + info->name() + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("EAHC_MAX_ORDER");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("EAHC_MAX_ORDER");
  }

  fs::path write(const std::string& name, std::string_view data) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary).write(data.data(), static_cast<std::streamsize>(data.size()));
    return path;
  }

  static std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, EncodeReportsComponentsAndDecodeRestores) {
  const auto input = write("sample.txt", kSample200);
  ASSERT_EQ(cmd_encode(input, dir_ / "sample.eah", 1, out_, err_), 0) << err_.str();
  EXPECT_NE(out_.str().find("|E|=235"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("LEAH1=316"), std::string::npos);

  ASSERT_EQ(cmd_decode(dir_ / "sample.eah", dir_ / "back.txt", out_, err_), 0) << err_.str();
  EXPECT_EQ(slurp(dir_ / "back.txt"), kSample200);
}

TEST_F(CliTest, EncodeFailures) {
  EXPECT_NE(cmd_encode(write("empty", ""), dir_ / "x.eah", 1, out_, err_), 0);
  EXPECT_NE(err_.str().find("argument"), std::string::npos) << err_.str();
  EXPECT_NE(cmd_encode(write("s", kSample9), dir_ / "missing" / "x.eah", 1, out_, err_), 0);
  EXPECT_NE(cmd_encode(dir_ / "nope", dir_ / "x.eah", 1, out_, err_), 0);
  EXPECT_NE(cmd_encode(write("s", kSample9), dir_ / "x.eah", 0, out_, err_), 0);
}

TEST_F(CliTest, DecodeFailures) {
  const auto input = write("s", kSample200);
  ASSERT_EQ(cmd_encode(input, dir_ / "s.eah", 2, out_, err_), 0);
  std::string container = slurp(dir_ / "s.eah");

  std::string bad = container;
  bad[3] = '2';
  EXPECT_NE(cmd_decode(write("bad.eah", bad), dir_ / "o", out_, err_), 0);
  EXPECT_NE(err_.str().find("bad magic"), std::string::npos);

  EXPECT_NE(cmd_decode(write("cut.eah", container.substr(0, container.size() - 4)), dir_ / "o", out_, err_), 0);
  EXPECT_NE(err_.str().find("truncation"), std::string::npos);
}

TEST_F(CliTest, OrderCapFromEnvironment) {
  const auto input = write("s", kSample9);
  EXPECT_EQ(max_order(), 3u);
  EXPECT_NE(cmd_encode(input, dir_ / "x", 4, out_, err_), 0);
  ::setenv("EAHC_MAX_ORDER", "5", 1);
  EXPECT_EQ(cmd_encode(input, dir_ / "x", 4, out_, err_), 0);
  ::setenv("EAHC_MAX_ORDER", "1", 1);
  EXPECT_NE(cmd_encode(input, dir_ / "x", 2, out_, err_), 0);
  ::setenv("EAHC_MAX_ORDER", "zero", 1);
  EXPECT_NE(cmd_encode(input, dir_ / "x", 1, out_, err_), 0);
}

TEST_F(CliTest, StatsSampleRow) {
  const auto input = write("sample.txt", kSample200);
  ASSERT_EQ(cmd_stats(input, {1}, dir_ / "stats.csv", out_, err_), 0) << err_.str();
  EXPECT_NE(out_.str().find("LH=462"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("LLZ=388"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "stats.csv"), std::string(kCsvHeader) + "\nsample.txt,200,1,316,462,388,0.197500\n");
}

TEST_F(CliTest, StatsOneByteFile) {
  const auto input = write("one", "x");
  ASSERT_EQ(cmd_stats(input, {1}, dir_ / "one.csv", out_, err_), 0) << err_.str();
  // Huffman: one bit; EAH1: only the one-bit context bitmap; LZ78: one 0-bit phrase.
  EXPECT_EQ(slurp(dir_ / "one.csv"), std::string(kCsvHeader) + "\none,1,1,1,1,0,0.125000\n");
}

TEST_F(CliTest, StatsSeveralOrdersOnRandomFile) {
  std::mt19937_64 rng(3);
  const auto input = write("rand.bin", eah::testing::random_text(rng, 1500, 40));
  ASSERT_EQ(cmd_stats(input, {1, 2, 3}, dir_ / "r.csv", out_, err_), 0) << err_.str();
  const std::string csv = slurp(dir_ / "r.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("rand.bin,1500,3,"), std::string::npos);
}

TEST_F(CliTest, GraphExport) {
  ASSERT_EQ(cmd_graph(write("nine", kSample9), 1, dir_ / "g.dot", out_, err_), 0) << err_.str();
  const std::string dot = slurp(dir_ / "g.dot");
  EXPECT_NE(dot.find("[label=\"(2,0)\"]"), std::string::npos);

  ASSERT_EQ(cmd_graph(write("nine", kSample9), 1, dir_ / "g2.dot", out_, err_), 0);
  EXPECT_EQ(slurp(dir_ / "g2.dot"), dot);

  ASSERT_EQ(cmd_graph(write("short", "ab"), 3, dir_ / "e.dot", out_, err_), 0);
  EXPECT_EQ(slurp(dir_ / "e.dot"), "digraph G {\n}\n");
}

TEST_F(CliTest, BenchCorpus) {
  fs::create_directories(dir_ / "corpus");
  write("corpus/sample.txt", kSample200);
  write("corpus/nine.txt", kSample9);
  ASSERT_EQ(cmd_bench(dir_ / "corpus", {2, 1}, dir_ / "bench.csv", out_, err_), 0) << err_.str();
  const std::string csv = slurp(dir_ / "bench.csv");
  const auto lines = [&] {
    std::vector<std::string> out;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  }();
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], kCsvHeader);
  EXPECT_EQ(lines[1].rfind("nine.txt,9,1,46,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2].rfind("nine.txt,9,2,", 0), 0u);
  EXPECT_EQ(lines[3], "sample.txt,200,1,316,462,388,0.197500");
  EXPECT_EQ(lines[4].rfind("sample.txt,200,2,", 0), 0u);
}

TEST_F(CliTest, BenchEmptyAndMissingDirectories) {
  fs::create_directories(dir_ / "empty");
  ASSERT_EQ(cmd_bench(dir_ / "empty", {1}, dir_ / "e.csv", out_, err_), 0);
  EXPECT_EQ(slurp(dir_ / "e.csv"), std::string(kCsvHeader) + "\n");
  EXPECT_NE(cmd_bench(dir_ / "absent", {1}, dir_ / "e.csv", out_, err_), 0);
}

TEST(ParseOrders, ListsAndErrors) {
  EXPECT_EQ(parse_orders("1,2,3"), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(parse_orders("2"), (std::vector<std::size_t>{2}));
  EXPECT_THROW(parse_orders(""), Error);
  EXPECT_THROW(parse_orders("1,,2"), Error);
  EXPECT_THROW(parse_orders("1,x"), Error);
}

TEST_F(CliTest, RunDispatchesSubcommands) {
  const auto input = write("s", kSample200);
  const std::string in = input.string();
  const std::string packed = (dir_ / "s.eah").string();
  const std::string back = (dir_ / "s.out").string();

  std::vector<std::string> encode_args = {"eahc", "encode", "-i", in, "-o", packed, "--order", "2"};
  std::vector<char*> argv;
  for (auto& a : encode_args) argv.push_back(a.data());
  ASSERT_EQ(run(static_cast<int>(argv.size()), argv.data(), out_, err_), 0) << err_.str();

  std::vector<std::string> decode_args = {"eahc", "decode", "--input", packed, "--output", back};
  argv.clear();
  for (auto& a : decode_args) argv.push_back(a.data());
  ASSERT_EQ(run(static_cast<int>(argv.size()), argv.data(), out_, err_), 0) << err_.str();
  EXPECT_EQ(slurp(back), kSample200);

  std::vector<std::string> bad_args = {"eahc", "stats", "-i", in, "--orders", "1;2"};
  argv.clear();
  for (auto& a : bad_args) argv.push_back(a.data());
  EXPECT_NE(run(static_cast<int>(argv.size()), argv.data(), out_, err_), 0);

  std::vector<std::string> no_args = {"eahc"};
  argv.clear();
  for (auto& a : no_args) argv.push_back(a.data());
  EXPECT_NE(run(static_cast<int>(argv.size()), argv.data(), out_, err_), 0);
}

TEST_F(CliTest, BinaryRoundTrip) {
  const auto input = write("s", kSample200);
  const std::string cmd = std::string(EAHC_BINARY) + " encode -i " + input.string() + " -o " +
                          (dir_ / "s.eah").string() + " > /dev/null && " + EAHC_BINARY + " decode -i " +
                          (dir_ / "s.eah").string() + " -o " + (dir_ / "s.out").string() + " > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(dir_ / "s.out"), kSample200);
}

}  // namespace
}  // namespace eah::cli
