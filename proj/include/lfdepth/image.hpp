#pragma once

#include <cstddef>
#include <vector>

#include "lfdepth/array2d.hpp"

namespace lfdepth {

// Interleaved (y, x, c) image with real-valued samples, normally in [0, 1].
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels, double fill = 0.0)
      : height_(height),
        width_(width),
        channels_(channels),
        data_(static_cast<size_t>(height) * width * channels, fill) {}

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int y, int x, int c) {
    return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
  }
  double operator()(int y, int x, int c) const {
    return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool same_shape(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ && channels_ == other.channels_;
  }

  // Rec. 601 luma; single-channel images pass through.
  Array2D<double> luminance() const {
    Array2D<double> out(height_, width_);
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) {
        if (channels_ == 1) {
          out(y, x) = (*this)(y, x, 0);
        } else {
          out(y, x) = 0.299 * (*this)(y, x, 0) + 0.587 * (*this)(y, x, 1) +
                      0.114 * (*this)(y, x, 2);
        }
      }
    }
    return out;
  }

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

}  // namespace lfdepth
