#include "lfdepth/lightfield.hpp"

#include <cstring>
#include <string>

#include "lfdepth/error.hpp"

namespace lfdepth {

namespace {
void check_index(int value, int limit, const char* name) {
  if (value < 0 || value >= limit) {
    throw IndexOutOfRange(std::string(name) + " index " + std::to_string(value) +
                          " outside [0, " + std::to_string(limit) + ")");
  }
}
}  // namespace

Image subaperture(const LightField& lf, int s, int t) {
  check_index(s, lf.angular_rows(), "s");
  check_index(t, lf.angular_cols(), "t");
  Image out(lf.height(), lf.width(), lf.channels());
  std::memcpy(out.data(), lf.view_data(s, t), out.size() * sizeof(double));
  return out;
}

Epi epi_h(const LightField& lf, int y, int t) {
  check_index(y, lf.height(), "y");
  check_index(t, lf.angular_cols(), "t");
  Epi epi;
  epi.orientation = EpiOrientation::kHorizontal;
  epi.fixed_spatial = y;
  epi.fixed_angular = t;
  epi.pixels = Image(lf.angular_rows(), lf.width(), lf.channels());
  for (int s = 0; s < lf.angular_rows(); ++s)
    for (int x = 0; x < lf.width(); ++x)
      for (int c = 0; c < lf.channels(); ++c) epi.pixels(s, x, c) = lf(s, t, y, x, c);
  return epi;
}

Epi epi_v(const LightField& lf, int x, int s) {
  check_index(x, lf.width(), "x");
  check_index(s, lf.angular_rows(), "s");
  Epi epi;
  epi.orientation = EpiOrientation::kVertical;
  epi.fixed_spatial = x;
  epi.fixed_angular = s;
  epi.pixels = Image(lf.angular_cols(), lf.height(), lf.channels());
  for (int t = 0; t < lf.angular_cols(); ++t)
    for (int y = 0; y < lf.height(); ++y)
      for (int c = 0; c < lf.channels(); ++c) epi.pixels(t, y, c) = lf(s, t, y, x, c);
  return epi;
}

}  // namespace lfdepth
