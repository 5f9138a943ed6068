#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "dupdist/table_cache.hpp"

using namespace dupdist;
namespace fs = std::filesystem;

namespace {

DistanceTable small_table(int max_n) {
  SearchConfig cfg;
  cfg.max_n = max_n;
  return build_table(cfg);
}

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("dupdist_test_" + name);
  fs::remove(p);
  return p;
}

std::string bytes_of(const DistanceTable& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

}  // namespace

TEST(Cache, StreamRoundTrip) {
  const auto t = small_table(10);
  std::istringstream is(bytes_of(t));
  EXPECT_EQ(read_table(is), t);
}

TEST(Cache, HeaderLayout) {
  const std::string b = bytes_of(small_table(4));
  ASSERT_GE(b.size(), 9u);
  EXPECT_EQ(b.substr(0, 4), "DDR1");
  EXPECT_EQ(static_cast<unsigned char>(b[4]), 0x01);
  EXPECT_EQ(static_cast<unsigned char>(b[5]), 4);
  EXPECT_EQ(b[6] | b[7] | b[8], 0);
  // levels 1..4 hold 1, 2, 4, 8 bytes
  EXPECT_EQ(b.size(), 9u + 1 + 2 + 4 + 8);
}

TEST(Cache, RejectsCorruption) {
  const std::string good = bytes_of(small_table(6));
  auto expect_bad = [](std::string data) {
    std::istringstream is(data);
    EXPECT_THROW(read_table(is), CacheError);
  };
  std::string bad = good;
  bad[0] = 'X';
  expect_bad(bad);
  bad = good;
  bad[4] = 2;
  expect_bad(bad);
  bad = good;
  bad[5] = 40;
  expect_bad(bad);
  expect_bad(good.substr(0, good.size() - 1));
  expect_bad(good + "x");
  expect_bad("");
}

TEST(Cache, FileRoundTripAndLoadOrBuild) {
  const auto path = temp_file("roundtrip.bin");
  SearchConfig cfg;
  cfg.max_n = 12;
  cfg.cache_path = path;
  std::string warning;
  const auto built = load_or_build_table(cfg, &warning);
  EXPECT_TRUE(warning.empty());
  ASSERT_TRUE(fs::exists(path));
  EXPECT_EQ(load_table(path), built);

  // a larger cache serves a smaller request
  cfg.max_n = 9;
  const auto sliced = load_or_build_table(cfg, &warning);
  EXPECT_EQ(sliced, small_table(9));
  fs::remove(path);
}

TEST(Cache, CorruptFileIsRebuiltWithWarning) {
  const auto path = temp_file("corrupt.bin");
  {
    std::ofstream f(path, std::ios::binary);
    f << "DDR1garbage";
  }
  SearchConfig cfg;
  cfg.max_n = 8;
  cfg.cache_path = path;
  std::string warning;
  const auto t = load_or_build_table(cfg, &warning);
  EXPECT_FALSE(warning.empty());
  EXPECT_EQ(t, small_table(8));
  EXPECT_EQ(load_table(path), t);
  fs::remove(path);
}

TEST(Cache, MissingFile) {
  EXPECT_THROW(load_table(temp_file("missing.bin")), CacheError);
}
