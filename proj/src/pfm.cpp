#include "lfdepth/pfm.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "lfdepth/error.hpp"

namespace lfdepth {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// Reads one whitespace-terminated token, skipping leading whitespace.
std::string read_token(std::FILE* f) {
  std::string token;
  int ch;
  while ((ch = std::fgetc(f)) != EOF && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')) {
  }
  while (ch != EOF && ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') {
    token.push_back(static_cast<char>(ch));
    ch = std::fgetc(f);
  }
  return token;
}

void byteswap_floats(std::vector<float>& values) {
  for (float& v : values) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    bits = __builtin_bswap32(bits);
    std::memcpy(&v, &bits, 4);
  }
}

bool host_is_little_endian() {
  const uint16_t probe = 1;
  uint8_t byte;
  std::memcpy(&byte, &probe, 1);
  return byte == 1;
}

}  // namespace

void save_pfm(const DepthMap& map, const std::string& path) {
  if (map.empty()) throw IoError("cannot save empty depth map: " + path);
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open for writing: " + path);

  std::fprintf(f.get(), "Pf\n%d %d\n-1.0\n", map.cols(), map.rows());

  std::vector<float> row(static_cast<size_t>(map.cols()));
  for (int y = map.rows() - 1; y >= 0; --y) {
    for (int x = 0; x < map.cols(); ++x) row[x] = static_cast<float>(map(y, x));
    if (!host_is_little_endian()) byteswap_floats(row);
    if (std::fwrite(row.data(), sizeof(float), row.size(), f.get()) != row.size())
      throw IoError("short write: " + path);
  }
}

DepthMap load_pfm(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open: " + path);

  const std::string magic = read_token(f.get());
  if (magic == "PF") throw MalformedPfm("color PFM not supported for depth maps: " + path);
  if (magic != "Pf") throw MalformedPfm("bad magic '" + magic + "': " + path);

  int width = 0, height = 0;
  double scale = 0.0;
  try {
    width = std::stoi(read_token(f.get()));
    height = std::stoi(read_token(f.get()));
    scale = std::stod(read_token(f.get()));
  } catch (const std::exception&) {
    throw MalformedPfm("bad header: " + path);
  }
  if (width <= 0 || height <= 0 || scale == 0.0)
    throw MalformedPfm("bad header values: " + path);

  const bool file_little_endian = scale < 0.0;
  DepthMap map(height, width);
  std::vector<float> row(static_cast<size_t>(width));
  for (int y = height - 1; y >= 0; --y) {
    if (std::fread(row.data(), sizeof(float), row.size(), f.get()) != row.size())
      throw MalformedPfm("truncated sample data: " + path);
    if (file_little_endian != host_is_little_endian()) byteswap_floats(row);
    for (int x = 0; x < width; ++x) map(y, x) = static_cast<double>(row[x]);
  }
  return map;
}

}  // namespace lfdepth
