#pragma once

#include <string>

#include "lfdepth/array2d.hpp"

namespace lfdepth {

// Grayscale PFM ("Pf"), 32-bit float samples, scale header -1.0
// (little-endian), scanlines stored bottom-to-top. Non-defined depth entries
// are stored as NaN. Values round-trip bit-exactly at float precision.
void save_pfm(const DepthMap& map, const std::string& path);
DepthMap load_pfm(const std::string& path);

}  // namespace lfdepth
