#pragma once

// TensorSSA features: adaptive trajectory-tensor embedding, low-tubal-rank
// approximation through the FFT-based t-SVD, and reprojection by averaging.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/features.hpp"
#include "hsi/parallel.hpp"

namespace hsi {

/// How spectra are normalized before the neighbour distance is taken.
enum class SpectrumNorm { kUnitL2, kZScore };

struct TssaConfig {
  std::size_t u = 5;     // half window, w = 2u + 1
  std::size_t l = 60;    // fibers per pixel
  std::size_t rtub = 1;  // target tubal rank
  SpectrumNorm norm = SpectrumNorm::kUnitL2;

  std::size_t window() const noexcept { return 2 * u + 1; }

  void validate() const {
    require(u >= 1, ErrorCode::kInvalidArgument, "u must be >= 1");
    require(l >= 1, ErrorCode::kInvalidArgument, "l must be >= 1");
    require(l <= (2 * u - 1) * (2 * u - 1), ErrorCode::kInvalidArgument,
            "l must not exceed (w - 2)^2 = " + std::to_string((2 * u - 1) * (2 * u - 1)));
    require(rtub >= 1 && rtub <= l, ErrorCode::kInvalidArgument, "rtub must lie in [1, l]");
  }
};

/// Dense order-3 real tensor, last mode contiguous: (i, j, k) -> (i * n2 + j) * n3 + k.
struct Tensor3 {
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  std::vector<double> data;

  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c) : n1(a), n2(b), n3(c), data(a * b * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept { return data[(i * n2 + j) * n3 + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return data[(i * n2 + j) * n3 + k];
  }
  double frobenius() const {
    double s = 0.0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
  }
};

/// l x (rows*cols) x bands embedding plus the source pixel of every fiber.
struct TrajectoryTensor {
  std::size_t rows = 0, cols = 0;
  Tensor3 z;                           // (fiber k, pixel p, band b)
  std::vector<std::size_t> index_map;  // k * pixels + p -> source pixel

  std::size_t l() const noexcept { return z.n1; }
  std::size_t pixels() const noexcept { return z.n2; }
  std::size_t bands() const noexcept { return z.n3; }
  std::size_t source(std::size_t k, std::size_t p) const noexcept { return index_map[k * z.n2 + p]; }
};

/// Normalized spectra, pixels x bands. Unit L2 norm by default; z-scoring
/// removes the spectrum mean first. Degenerate (zero-norm) rows stay as is.
inline RowMatrix unit_spectra(const HyperCube& cube, SpectrumNorm mode = SpectrumNorm::kUnitL2) {
  RowMatrix out = to_features(cube).matrix();
  for (Eigen::Index p = 0; p < out.rows(); ++p) {
    if (mode == SpectrumNorm::kZScore) out.row(p).array() -= out.row(p).mean();
    double norm = out.row(p).norm();
    if (mode == SpectrumNorm::kZScore) norm /= std::sqrt(static_cast<double>(out.cols()));
    if (norm > 0.0) out.row(p) /= norm;
  }
  return out;
}

/// Squared Euclidean distance between the unit-normalized versions of a and b.
inline double normalized_distance2(std::span<const double> a, std::span<const double> b) {
  double na = 0.0, nb = 0.0;
  for (double v : a) na += v * v;
  for (double v : b) nb += v * v;
  na = na > 0.0 ? 1.0 / std::sqrt(na) : 0.0;
  nb = nb > 0.0 ? 1.0 / std::sqrt(nb) : 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] * na - b[i] * nb;
    d += diff * diff;
  }
  return d;
}

struct Window {
  std::size_t row0, row1, col0, col1;  // half-open
  std::size_t size() const noexcept { return (row1 - row0) * (col1 - col0); }
};

/// The w x w window around (row, col), shifted inward at the borders so it
/// stays inside the image (it shrinks only when the image itself is narrower
/// than w).
inline Window search_window(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col, std::size_t u) {
  auto span = [u](std::size_t center, std::size_t extent) {
    const std::size_t w = std::min(2 * u + 1, extent);
    std::size_t start = center >= u ? center - u : 0;
    start = std::min(start, extent - w);
    return std::pair{start, start + w};
  };
  const auto [r0, r1] = span(row, rows);
  const auto [c0, c1] = span(col, cols);
  return {r0, r1, c0, c1};
}

namespace detail {

inline std::vector<std::size_t> rank_neighbors(const RowMatrix& unit, std::size_t rows, std::size_t cols,
                                               std::size_t pixel, std::size_t u, std::size_t l) {
  const Window win = search_window(rows, cols, pixel / cols, pixel % cols, u);
  require(win.size() >= l, ErrorCode::kInvalidArgument,
          "search window holds " + std::to_string(win.size()) + " pixels, fewer than l = " + std::to_string(l));
  std::vector<std::pair<double, std::size_t>> candidates;
  candidates.reserve(win.size());
  const auto center = unit.row(static_cast<Eigen::Index>(pixel));
  for (std::size_t r = win.row0; r < win.row1; ++r) {
    for (std::size_t c = win.col0; c < win.col1; ++c) {
      const std::size_t q = r * cols + c;
      if (q == pixel) continue;
      candidates.emplace_back((unit.row(static_cast<Eigen::Index>(q)) - center).squaredNorm(), q);
    }
  }
  std::vector<std::size_t> out{pixel};
  if (l > 1) {
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(l - 1), candidates.end());
    for (std::size_t k = 0; k + 1 < l; ++k) out.push_back(candidates[k].second);
  }
  return out;
}

}  // namespace detail

/// The pixel itself followed by its l - 1 most similar window neighbours
/// (distance between unit-norm spectra, ties to the lower row-major index).
inline std::vector<std::size_t> similar_neighbors(const HyperCube& cube, std::size_t pixel, std::size_t u,
                                                  std::size_t l, SpectrumNorm norm = SpectrumNorm::kUnitL2) {
  require(pixel < cube.pixels(), ErrorCode::kOutOfRange, "pixel index out of range");
  require(l >= 1 && l <= (2 * u - 1) * (2 * u - 1), ErrorCode::kInvalidArgument, "l must lie in [1, (2u-1)^2]");
  return detail::rank_neighbors(unit_spectra(cube, norm), cube.rows(), cube.cols(), pixel, u, l);
}

inline TrajectoryTensor embed(const HyperCube& cube, const TssaConfig& config) {
  config.validate();
  const RowMatrix unit = unit_spectra(cube, config.norm);
  const std::size_t n = cube.pixels();
  TrajectoryTensor t;
  t.rows = cube.rows();
  t.cols = cube.cols();
  t.z = Tensor3(config.l, n, cube.bands());
  t.index_map.assign(config.l * n, 0);
  parallel_for(n, [&](std::size_t p) {
    const auto neighbors = detail::rank_neighbors(unit, cube.rows(), cube.cols(), p, config.u, config.l);
    for (std::size_t k = 0; k < config.l; ++k) {
      t.index_map[k * n + p] = neighbors[k];
      for (std::size_t b = 0; b < cube.bands(); ++b) t.z(k, p, b) = cube.sample(neighbors[k], b);
    }
  });
  return t;
}

/// Best tubal-rank-`rtub` approximation: FFT along the third mode, truncated
/// SVD of every frequency slice, inverse FFT. Slices above d/2 are the
/// conjugates of their mirror slices, so the result is real by construction.
inline Tensor3 tsvd_lowrank(const Tensor3& z, std::size_t rtub) {
  require(z.n1 > 0 && z.n2 > 0 && z.n3 > 0, ErrorCode::kEmptyInput, "empty tensor");
  require(rtub >= 1 && rtub <= std::min(z.n1, z.n2), ErrorCode::kInvalidArgument,
          "rtub must lie in [1, min(n1, n2)]");
  using Complex = std::complex<double>;
  const std::size_t tubes = z.n1 * z.n2;
  const std::size_t d = z.n3;

  // spectrum[f] holds slice f as an n1 x n2 matrix.
  std::vector<Eigen::MatrixXcd> spectrum(d, Eigen::MatrixXcd(z.n1, z.n2));
  {
    Eigen::FFT<double> fft;
    std::vector<double> tube(d);
    std::vector<Complex> freq;
    for (std::size_t t = 0; t < tubes; ++t) {
      std::copy_n(z.data.begin() + static_cast<std::ptrdiff_t>(t * d), d, tube.begin());
      // kissfft does not handle length 1; that transform is the identity anyway
      if (d == 1) freq.assign(1, Complex(tube[0], 0.0));
      else fft.fwd(freq, tube);
      const auto i = static_cast<Eigen::Index>(t / z.n2), j = static_cast<Eigen::Index>(t % z.n2);
      for (std::size_t f = 0; f < d; ++f) spectrum[f](i, j) = freq[f];
    }
  }

  const std::size_t half = d / 2;
  const auto r = static_cast<Eigen::Index>(rtub);
  parallel_for(half + 1, [&](std::size_t f) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(spectrum[f], Eigen::ComputeThinU | Eigen::ComputeThinV);
    spectrum[f] = svd.matrixU().leftCols(r) * svd.singularValues().head(r).asDiagonal() *
                  svd.matrixV().leftCols(r).adjoint();
  });
  for (std::size_t f = half + 1; f < d; ++f) spectrum[f] = spectrum[d - f].conjugate();

  Tensor3 out(z.n1, z.n2, z.n3);
  Eigen::FFT<double> fft;
  std::vector<Complex> freq(d), tube(d);
  for (std::size_t t = 0; t < tubes; ++t) {
    const auto i = static_cast<Eigen::Index>(t / z.n2), j = static_cast<Eigen::Index>(t % z.n2);
    for (std::size_t f = 0; f < d; ++f) freq[f] = spectrum[f](i, j);
    if (d == 1) tube[0] = freq[0];
    else fft.inv(tube, freq);
    for (std::size_t k = 0; k < d; ++k) out.data[t * d + k] = tube[k].real();
  }
  return out;
}

/// Averages every fiber back onto its source pixel.
inline FeatureStack reproject(const Tensor3& z, const std::vector<std::size_t>& index_map, std::size_t rows,
                              std::size_t cols) {
  const std::size_t n = rows * cols;
  require(z.n2 == n && index_map.size() == z.n1 * n, ErrorCode::kDimensionMismatch,
          "tensor, index map and image size disagree");
  FeatureStack out(rows, cols, z.n3);
  std::vector<std::size_t> hits(n, 0);
  for (std::size_t k = 0; k < z.n1; ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t s = index_map[k * n + p];
      require(s < n, ErrorCode::kOutOfRange, "index map entry out of range");
      ++hits[s];
      auto dst = out.pixel(s);
      for (std::size_t b = 0; b < z.n3; ++b) dst[b] += z(k, p, b);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    require(hits[s] > 0, ErrorCode::kInvalidArgument, "pixel " + std::to_string(s) + " received no fiber");
    for (double& v : out.pixel(s)) v /= static_cast<double>(hits[s]);
  }
  return out;
}

inline FeatureStack tensorssa_extract(const HyperCube& cube, const TssaConfig& config) {
  const TrajectoryTensor t = embed(cube, config);
  return reproject(tsvd_lowrank(t.z, config.rtub), t.index_map, cube.rows(), cube.cols());
}

}  // namespace hsi
