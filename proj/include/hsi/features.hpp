#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"

namespace hsi {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// rows x cols x dim feature cube, pixel-major (all features of pixel 0, then
/// pixel 1, ...). Pixels are indexed row-major.
class FeatureStack {
 public:
  FeatureStack() = default;
  FeatureStack(std::size_t rows, std::size_t cols, std::size_t dim)
      : rows_(rows), cols_(cols), dim_(dim), data_(rows * cols * dim, 0.0) {}
  FeatureStack(std::size_t rows, std::size_t cols, std::size_t dim, std::vector<double> data)
      : rows_(rows), cols_(cols), dim_(dim), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_ * dim_, ErrorCode::kSizeMismatch,
            "feature data length != rows*cols*dim");
    for (double v : data_) require(std::isfinite(v), ErrorCode::kNonFiniteSample, "non-finite feature");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t pixels() const noexcept { return rows_ * cols_; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  std::span<const double> pixel(std::size_t p) const noexcept {
    return std::span<const double>(data_).subspan(p * dim_, dim_);
  }
  std::span<double> pixel(std::size_t p) noexcept { return std::span<double>(data_).subspan(p * dim_, dim_); }
  std::span<const double> pixel(std::size_t row, std::size_t col) const noexcept {
    return pixel(row * cols_ + col);
  }
  double& at(std::size_t p, std::size_t k) noexcept { return data_[p * dim_ + k]; }
  double at(std::size_t p, std::size_t k) const noexcept { return data_[p * dim_ + k]; }

  /// pixels() x dim view.
  Eigen::Map<const RowMatrix> matrix() const {
    return Eigen::Map<const RowMatrix>(data_.data(), static_cast<Eigen::Index>(pixels()),
                                       static_cast<Eigen::Index>(dim_));
  }
  Eigen::Map<RowMatrix> matrix() {
    return Eigen::Map<RowMatrix>(data_.data(), static_cast<Eigen::Index>(pixels()),
                                 static_cast<Eigen::Index>(dim_));
  }

  friend bool operator==(const FeatureStack&, const FeatureStack&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

inline FeatureStack to_features(const HyperCube& cube) {
  FeatureStack out(cube.rows(), cube.cols(), cube.bands());
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    auto plane = cube.band_plane(b);
    for (std::size_t p = 0; p < cube.pixels(); ++p) out.at(p, b) = plane[p];
  }
  return out;
}

/// Feature stacks travel in the cube format with feature indices in place of
/// wavelengths. Values are narrowed to float32.
inline HyperCube to_cube(const FeatureStack& features) {
  std::vector<double> index(features.dim());
  std::iota(index.begin(), index.end(), 0.0);
  std::vector<float> data(features.pixels() * features.dim());
  for (std::size_t p = 0; p < features.pixels(); ++p) {
    for (std::size_t k = 0; k < features.dim(); ++k) {
      data[k * features.pixels() + p] = static_cast<float>(features.at(p, k));
    }
  }
  return HyperCube(features.rows(), features.cols(), std::move(index), std::move(data));
}

inline FeatureStack concat(std::span<const FeatureStack> parts) {
  require(!parts.empty(), ErrorCode::kEmptyInput, "nothing to concatenate");
  const std::size_t rows = parts.front().rows(), cols = parts.front().cols();
  std::size_t dim = 0;
  for (const auto& part : parts) {
    require(part.rows() == rows && part.cols() == cols, ErrorCode::kDimensionMismatch,
            "feature stacks differ in spatial size");
    dim += part.dim();
  }
  FeatureStack out(rows, cols, dim);
  for (std::size_t p = 0; p < rows * cols; ++p) {
    std::size_t offset = 0;
    for (const auto& part : parts) {
      auto src = part.pixel(p);
      std::copy(src.begin(), src.end(), out.pixel(p).begin() + static_cast<std::ptrdiff_t>(offset));
      offset += part.dim();
    }
  }
  return out;
}

inline FeatureStack crop(const FeatureStack& stack, PatchOrigin origin, std::size_t rows, std::size_t cols) {
  require(origin.row + rows <= stack.rows() && origin.col + cols <= stack.cols(), ErrorCode::kOutOfRange,
          "crop window outside feature stack");
  FeatureStack out(rows, cols, stack.dim());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto src = stack.pixel(origin.row + r, origin.col + c);
      std::copy(src.begin(), src.end(), out.pixel(r * cols + c).begin());
    }
  }
  return out;
}

/// Swaps rows and columns.
inline FeatureStack transpose(const FeatureStack& stack) {
  FeatureStack out(stack.cols(), stack.rows(), stack.dim());
  for (std::size_t r = 0; r < stack.rows(); ++r) {
    for (std::size_t c = 0; c < stack.cols(); ++c) {
      auto src = stack.pixel(r, c);
      std::copy(src.begin(), src.end(), out.pixel(c * stack.rows() + r).begin());
    }
  }
  return out;
}

/// Gathers the labeled pixels of a stack as an n x dim sample matrix.
inline Eigen::MatrixXd gather_rows(const FeatureStack& features, std::span<const std::size_t> indices) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(features.dim()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] < features.pixels(), ErrorCode::kOutOfRange, "labeled index outside feature stack");
    out.row(static_cast<Eigen::Index>(i)) = features.matrix().row(static_cast<Eigen::Index>(indices[i]));
  }
  return out;
}

/// Per-dimension min-max scaling to [0, 1]; constant dimensions map to 0.
inline FeatureStack minmax_scale(const FeatureStack& features) {
  FeatureStack out = features;
  auto m = out.matrix();
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const double lo = m.col(k).minCoeff();
    const double hi = m.col(k).maxCoeff();
    if (hi > lo) {
      m.col(k) = (m.col(k).array() - lo) / (hi - lo);
    } else {
      m.col(k).setZero();
    }
  }
  return out;
}

}  // namespace hsi
