#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "oracles.hpp"
#include "qseries/error.hpp"
#include "qseries/fps_io.hpp"
#include "qseries/partition.hpp"

using namespace qseries;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qseries_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(FpsIo, RoundTrip) {
  std::mt19937_64 rng(5);
  for (std::uint32_t m : {2u, 13u, 65521u}) {
    auto s = oracle::random_series(rng, m, 1234);
    EXPECT_EQ(decode_fps(encode_fps(s)), s);
  }
  auto dir = scratch_dir("roundtrip");
  auto s = FpSeries::from_integers(13, std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11});
  write_fps(dir / "p.fps", s);
  EXPECT_EQ(read_fps(dir / "p.fps"), s);
  fs::remove_all(dir);
}

TEST(FpsIo, ByteLayout) {
  auto bytes = encode_fps(FpSeries::from_integers(13, std::vector<std::int64_t>{1, 258}));
  ASSERT_EQ(bytes.size(), 4u + 8 + 8 + 2 * 2);
  EXPECT_EQ(bytes.substr(0, 4), "FPS1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 13);
  for (int i = 5; i < 12; ++i) EXPECT_EQ(bytes[i], 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 2);
  EXPECT_EQ(static_cast<unsigned char>(bytes[20]), 1);
  EXPECT_EQ(static_cast<unsigned char>(bytes[22]), 258 % 13);
}

TEST(FpsIo, CorruptInputIsRejected) {
  auto good = encode_fps(FpSeries::from_integers(13, std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_THROW(decode_fps("FPS2" + good.substr(4)), FormatError);
  EXPECT_THROW(decode_fps(good.substr(0, good.size() - 1)), FormatError);
  EXPECT_THROW(decode_fps(good + "x"), FormatError);
  EXPECT_THROW(decode_fps("FP"), FormatError);
  auto bad_coeff = good;
  bad_coeff[20] = 13;
  EXPECT_THROW(decode_fps(bad_coeff), FormatError);
  auto bad_modulus = good;
  bad_modulus[4] = 12;
  EXPECT_THROW(decode_fps(bad_modulus), FormatError);
  EXPECT_THROW(read_fps("/nonexistent/dir/x.fps"), FormatError);
}

TEST(FpsIo, StoreReloadsCache) {
  auto dir = scratch_dir("store");
  std::vector<Residue> first;
  {
    PartitionStore store(100000, dir);
    const auto& t = store.table(13, 5000);
    first.assign(t.values().begin(), t.values().end());
  }
  ASSERT_TRUE(fs::exists(dir / "p_m13_k0_N5000.fps"));
  PartitionStore again(100000, dir);
  const auto& t = again.table(13, 3000);
  EXPECT_EQ(t.size(), 5000u);
  EXPECT_TRUE(std::equal(first.begin(), first.end(), t.values().begin()));
  fs::remove_all(dir);
}

TEST(FpsIo, CorruptCacheIsRebuilt) {
  auto dir = scratch_dir("corrupt");
  {
    std::ofstream(dir / "p_m13_k0_N5000.fps", std::ios::binary) << "garbage";
  }
  PartitionStore store(100000, dir);
  const auto& t = store.table(13, 5000);
  auto ref = partition_table_serial(13, 5000);
  ASSERT_EQ(t.size(), ref.size());
  EXPECT_TRUE(std::equal(ref.values().begin(), ref.values().end(), t.values().begin()));
  EXPECT_EQ(read_fps(dir / "p_m13_k0_N5000.fps"), ref.as_series());
  fs::remove_all(dir);
}

TEST(FpsIo, StoreBudget) {
  PartitionStore store(1000);
  EXPECT_THROW(store.table(13, 1001), BudgetError);
  EXPECT_TRUE(store.affordable(1000));
  EXPECT_FALSE(store.affordable(1001));
  EXPECT_THROW(store.table(13, 10).at(store.table(13, 10).size()), PrecisionError);
}
