#include "lfdepth/png_io.hpp"

#include <png.h>

#include <cmath>
#include <csetjmp>
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

}  // namespace

Image load_png(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw MissingView("cannot open: " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, f.get()) != 8 || png_sig_cmp(header, 0, 8))
    throw CorruptImage("not a PNG file: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw CorruptImage("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw CorruptImage("libpng init failed");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw CorruptImage("corrupt PNG: " + path);
  }

  png_init_io(png, f.get());
  png_set_sig_bytes(png, 8);
  // Normalize to 8/16-bit gray or RGB without alpha.
  png_read_png(png, info,
               PNG_TRANSFORM_STRIP_ALPHA | PNG_TRANSFORM_PACKING | PNG_TRANSFORM_EXPAND,
               nullptr);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int channels = png_get_channels(png, info);
  png_bytepp rows = png_get_rows(png, info);

  if ((channels != 1 && channels != 3) || (bit_depth != 8 && bit_depth != 16)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw CorruptImage("unsupported PNG layout (channels=" + std::to_string(channels) +
                       ", bits=" + std::to_string(bit_depth) + "): " + path);
  }

  Image image(static_cast<int>(height), static_cast<int>(width), channels);
  const double max_value = bit_depth == 8 ? 255.0 : 65535.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    const png_bytep row = rows[y];
    for (png_uint_32 x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        unsigned v;
        if (bit_depth == 8) {
          v = row[x * channels + c];
        } else {
          const size_t i = (x * channels + c) * 2;  // PNG 16-bit is big-endian
          v = (static_cast<unsigned>(row[i]) << 8) | row[i + 1];
        }
        image(static_cast<int>(y), static_cast<int>(x), c) = v / max_value;
      }
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

void save_png(const Image& image, const std::string& path, int bit_depth) {
  if (image.empty()) throw IoError("cannot save empty image: " + path);
  if (image.channels() != 1 && image.channels() != 3)
    throw IoError("PNG output supports 1 or 3 channels");
  if (bit_depth != 8 && bit_depth != 16) throw IoError("PNG bit depth must be 8 or 16");

  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path);
  }

  png_init_io(png, f.get());
  png_set_IHDR(png, info, image.width(), image.height(), bit_depth,
               image.channels() == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const unsigned max_value = bit_depth == 8 ? 255u : 65535u;
  const size_t bytes_per_sample = bit_depth == 8 ? 1 : 2;
  std::vector<png_byte> row(static_cast<size_t>(image.width()) * image.channels() *
                            bytes_per_sample);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < image.channels(); ++c) {
        double v = image(y, x, c);
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        const unsigned q = static_cast<unsigned>(std::lround(v * max_value));
        const size_t i = (static_cast<size_t>(x) * image.channels() + c) * bytes_per_sample;
        if (bit_depth == 8) {
          row[i] = static_cast<png_byte>(q);
        } else {
          row[i] = static_cast<png_byte>(q >> 8);
          row[i + 1] = static_cast<png_byte>(q & 0xff);
        }
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

}  // namespace lfdepth
