#include "qseries/fps_io.hpp"

#include <fstream>
#include <iterator>

#include "qseries/error.hpp"

namespace qseries {
namespace {

constexpr std::string_view kMagic = "FPS1";
constexpr std::size_t kHeader = 4 + 8 + 8;

void put_le(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::string_view in, std::size_t pos, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= std::uint64_t{static_cast<unsigned char>(in[pos + static_cast<std::size_t>(i)])} << (8 * i);
  }
  return v;
}

}  // namespace

std::string encode_fps(const FpSeries& s) {
  std::string out;
  out.reserve(kHeader + 2 * s.precision());
  out.append(kMagic);
  put_le(out, s.modulus(), 8);
  put_le(out, s.precision(), 8);
  for (Residue r : s.coeffs()) put_le(out, r, 2);
  return out;
}

FpSeries decode_fps(std::string_view bytes) {
  if (bytes.size() < kHeader || bytes.substr(0, 4) != kMagic) throw FormatError("fps: bad magic");
  const std::uint64_t modulus = get_le(bytes, 4, 8);
  const std::uint64_t n = get_le(bytes, 12, 8);
  if (modulus >= kModulusLimit) throw FormatError("fps: modulus out of range");
  if (n > (bytes.size() - kHeader) / 2 || bytes.size() != kHeader + 2 * n) {
    throw FormatError("fps: length does not match header");
  }
  std::vector<Residue> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = get_le(bytes, kHeader + 2 * i, 2);
    if (v >= modulus) throw FormatError("fps: coefficient out of range");
    c[i] = static_cast<Residue>(v);
  }
  try {
    return FpSeries(static_cast<std::uint32_t>(modulus), std::move(c));
  } catch (const ModulusError& e) {
    throw FormatError(std::string("fps: ") + e.what());
  }
}

void write_fps(const std::filesystem::path& path, const FpSeries& s) {
  const std::string bytes = encode_fps(s);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("fps: cannot open " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("fps: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

FpSeries read_fps(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("fps: cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_fps(bytes);
}

}  // namespace qseries
