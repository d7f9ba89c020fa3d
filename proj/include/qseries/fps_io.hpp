#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qseries/fpseries.hpp"

// ".fps" series cache: "FPS1", modulus (u64 LE), precision N (u64 LE), then N
// coefficients as u16 LE.
namespace qseries {

std::string encode_fps(const FpSeries& s);
// Throws FormatError on bad magic, inadmissible modulus, wrong length or an
// out-of-range coefficient.
FpSeries decode_fps(std::string_view bytes);

void write_fps(const std::filesystem::path& path, const FpSeries& s);
FpSeries read_fps(const std::filesystem::path& path);

}  // namespace qseries
