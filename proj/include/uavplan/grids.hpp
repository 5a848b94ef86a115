#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace uavplan {

// Dense row-major 2-D table. Sizes fixed at construction.
template <typename T>
class Grid2 {
 public:
  Grid2() = default;
  Grid2(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  T& at(int r, int c) { return data_[idx(r, c)]; }
  const T& at(int r, int c) const { return data_[idx(r, c)]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool same_shape(const Grid2& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  bool operator==(const Grid2&) const = default;

 private:
  size_t idx(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return static_cast<size_t>(r) * cols_ + c;
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Dense 3-D table indexed (i, j, k), k fastest.
template <typename T>
class Grid3 {
 public:
  Grid3() = default;
  Grid3(int n1, int n2, int n3, T fill = T{})
      : n1_(n1), n2_(n2), n3_(n3),
        data_(static_cast<size_t>(n1) * n2 * n3, fill) {}

  T& at(int i, int j, int k) { return data_[idx(i, j, k)]; }
  const T& at(int i, int j, int k) const { return data_[idx(i, j, k)]; }

  int dim1() const { return n1_; }
  int dim2() const { return n2_; }
  int dim3() const { return n3_; }
  bool same_shape(const Grid3& o) const {
    return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_;
  }

  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  bool operator==(const Grid3&) const = default;

 private:
  size_t idx(int i, int j, int k) const {
    assert(i >= 0 && i < n1_ && j >= 0 && j < n2_ && k >= 0 && k < n3_);
    return (static_cast<size_t>(i) * n2_ + j) * n3_ + k;
  }
  int n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<T> data_;
};

}  // namespace uavplan
