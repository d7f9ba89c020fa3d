#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qseries::cli {

struct JobConfig {
  std::string command;
  std::uint32_t m = 13;
  unsigned k = 1;
  std::size_t N = 0;  // 0: the command's default
  std::uint64_t lmin = 5;
  std::uint64_t lmax = 100;
  std::string mode = "rigorous";  // rigorous | truncated
  std::uint64_t trunc = 0;        // bound for truncated mode
  std::string route = "definition";
  std::uint64_t k_max = 0;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> t_max;
  std::uint64_t X = 100000;
  int which = 9;
  std::string claims_file;
  bool derive = false;
  std::size_t budget = 0;  // 0: library default
  std::string cache_dir;   // empty: $QSERIES_CACHE, else no cache
  std::string out;         // empty: the `out` stream
  std::string fps;         // optional ".fps" dump of an emitted series
  int threads = 0;         // 0: OpenMP default
};

// Runs one subcommand (args exclude the program name) and writes JSON lines
// to out, or to --out. Errors go to err as one JSON object. Returns 0 on
// success, 1 when a verification failed and 2 on usage or runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
