#pragma once

#include <cstddef>
#include <vector>

#include "lfdepth/image.hpp"

namespace lfdepth {

// Dense 4D radiance samples L(s, t, y, x) with C color channels, stored as a
// rank-5 array indexed (s, t, y, x, c). s/t are the angular grid indices,
// y/x the pixel coordinates of each sub-aperture view.
//
// Geometry convention used throughout the pipeline:a scene point at slope m
// seen at (y, x) in the center view appears at
//   x' = x + m * (s - floor(S/2)),   y' = y + m * (t - floor(T/2))
// in view (s, t). Hence horizontal EPIs (fixed y, t = center column) carry
// lines of slope dx/ds = m and vertical EPIs (fixed x, s = center row) carry
// lines of slope dy/dt = m.
class LightField {
 public:
  LightField() = default;
  LightField(int S, int T, int Y, int X, int C, double fill = 0.0)
      : S_(S),
        T_(T),
        Y_(Y),
        X_(X),
        C_(C),
        samples_(static_cast<size_t>(S) * T * Y * X * C, fill) {}

  int angular_rows() const { return S_; }
  int angular_cols() const { return T_; }
  int height() const { return Y_; }
  int width() const { return X_; }
  int channels() const { return C_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  int center_s() const { return S_ / 2; }
  int center_t() const { return T_ / 2; }

  double& operator()(int s, int t, int y, int x, int c) {
    return samples_[index(s, t, y, x, c)];
  }
  double operator()(int s, int t, int y, int x, int c) const {
    return samples_[index(s, t, y, x, c)];
  }

  double* data() { return samples_.data(); }
  const double* data() const { return samples_.data(); }

  // Pointer to the contiguous (Y, X, C) block of view (s, t).
  double* view_data(int s, int t) { return samples_.data() + index(s, t, 0, 0, 0); }
  const double* view_data(int s, int t) const { return samples_.data() + index(s, t, 0, 0, 0); }

 private:
  size_t index(int s, int t, int y, int x, int c) const {
    return (((static_cast<size_t>(s) * T_ + t) * Y_ + y) * X_ + x) * C_ + c;
  }

  int S_ = 0, T_ = 0, Y_ = 0, X_ = 0, C_ = 0;
  std::vector<double> samples_;
};

enum class EpiOrientation {
  kHorizontal,  // fixed (y*, t*), axes (s, x)
  kVertical,    // fixed (x*, s*), axes (t, y)
};

// 2D angular/spatial slice. pixels has shape (angular, spatial, C): (S, X, C)
// for horizontal EPIs, (T, Y, C) for vertical ones.
struct Epi {
  Image pixels;
  EpiOrientation orientation = EpiOrientation::kHorizontal;
  int fixed_spatial = 0;  // y* for horizontal, x* for vertical
  int fixed_angular = 0;  // t* for horizontal, s* for vertical
};

// Exact slices; throw IndexOutOfRange on bad indices.
Image subaperture(const LightField& lf, int s, int t);
Epi epi_h(const LightField& lf, int y, int t);
Epi epi_v(const LightField& lf, int x, int s);

}  // namespace lfdepth
