#pragma once

#include <string>

#include "lfdepth/image.hpp"

namespace lfdepth {

// Reads an 8- or 16-bit PNG into [0, 1] samples. Palette images are expanded
// to RGB and alpha channels are dropped; the result has 1 or 3 channels.
Image load_png(const std::string& path);

// Writes a grayscale or RGB PNG, quantizing samples to the given bit depth.
void save_png(const Image& image, const std::string& path, int bit_depth = 16);

}  // namespace lfdepth
