#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace lfdepth {

// Dense row-major 2D array. Indexing is (row, col) = (y, x).
template <typename T>
class Array2D {
 public:
  Array2D() = default;
  Array2D(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(int y, int x) { return data_[static_cast<size_t>(y) * cols_ + x]; }
  const T& operator()(int y, int x) const { return data_[static_cast<size_t>(y) * cols_ + x]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool same_shape(const Array2D& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  void fill(T value) { data_.assign(data_.size(), value); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Per-pixel slope of the center view in pixels per unit angular step.
// Non-defined entries are NaN.
using DepthMap = Array2D<double>;

// Per-pixel reliability in [0, 1].
using CoherenceMap = Array2D<double>;

inline bool is_defined(const DepthMap& m, int y, int x) { return std::isfinite(m(y, x)); }

inline int defined_count(const DepthMap& m) {
  int n = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (std::isfinite(m.data()[i])) ++n;
  return n;
}

}  // namespace lfdepth
