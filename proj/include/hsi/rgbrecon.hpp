#pragma once

// Hyperspectral -> CIE XYZ -> sRGB rendering.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hsi/cie1931_data.hpp"
#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"

namespace hsi {

struct CmfTable {
  std::vector<double> wavelengths;  // 1 nm grid
  std::vector<double> xbar;
  std::vector<double> ybar;
  std::vector<double> zbar;

  void validate() const {
    const std::size_t n = wavelengths.size();
    require(n >= 2 && xbar.size() == n && ybar.size() == n && zbar.size() == n,
            ErrorCode::kInvalidArgument, "CMF columns must have equal length >= 2");
    for (std::size_t i = 1; i < n; ++i) {
      require(std::abs(wavelengths[i] - wavelengths[i - 1] - 1.0) < 1e-9, ErrorCode::kInvalidArgument,
              "CMF wavelengths must be a strictly increasing 1 nm grid");
    }
    require(wavelengths.front() <= 450.0 && wavelengths.back() >= 800.0, ErrorCode::kInvalidArgument,
            "CMF table must cover 450-800 nm");
    double ysum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      require(xbar[i] >= 0.0 && ybar[i] >= 0.0 && zbar[i] >= 0.0, ErrorCode::kInvalidArgument,
              "CMF weights must be nonnegative");
      ysum += ybar[i];
    }
    require(ysum > 0.0, ErrorCode::kInvalidArgument, "ybar integrates to zero");
  }

  /// Index of the table row nearest to `nm`; throws when outside the table.
  std::size_t nearest(double nm) const {
    require(nm >= wavelengths.front() - 0.5 && nm <= wavelengths.back() + 0.5, ErrorCode::kOutOfRange,
            "wavelength " + std::to_string(nm) + " nm outside CMF table");
    const double offset = std::round(nm - wavelengths.front());
    return std::min(static_cast<std::size_t>(std::max(0.0, offset)), wavelengths.size() - 1);
  }
};

/// The CIE 1931 2-degree observer compiled into the library.
inline const CmfTable& default_cmf() {
  static const CmfTable table = [] {
    CmfTable t;
    for (std::size_t i = 0; i < cie1931::kTable.size(); ++i) {
      t.wavelengths.push_back(cie1931::kFirstNm + static_cast<double>(i));
      t.xbar.push_back(cie1931::kTable[i][0]);
      t.ybar.push_back(cie1931::kTable[i][1]);
      t.zbar.push_back(cie1931::kTable[i][2]);
    }
    t.validate();
    return t;
  }();
  return table;
}

/// Plain-text table: `nm xbar ybar zbar` per line, '#' comments allowed.
inline CmfTable load_cmf(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open CMF table " + path.string());
  CmfTable t;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    double nm, x, y, z;
    if (!(fields >> nm)) continue;
    require(static_cast<bool>(fields >> x >> y >> z), ErrorCode::kMalformedHeader,
            "CMF line needs four columns: " + line);
    t.wavelengths.push_back(nm);
    t.xbar.push_back(x);
    t.ybar.push_back(y);
    t.zbar.push_back(z);
  }
  t.validate();
  return t;
}

/// Three planes (X/Y/Z or R/G/B) of rows x cols, plane-major.
struct ColorImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  ColorImage() = default;
  ColorImage(std::size_t r, std::size_t c) : rows(r), cols(c), data(3 * r * c, 0.0) {}

  std::size_t pixels() const noexcept { return rows * cols; }
  double& at(std::size_t channel, std::size_t pixel) noexcept { return data[channel * rows * cols + pixel]; }
  double at(std::size_t channel, std::size_t pixel) const noexcept { return data[channel * rows * cols + pixel]; }
};

/// Per-band CMF weights for the cube's wavelength grid, divided by the flat
/// unit spectrum's response so that S == 1 maps to XYZ == (1, 1, 1). A channel
/// with zero response over the grid gets zero weights.
inline std::array<std::vector<double>, 3> xyz_weights(const std::vector<double>& wavelengths,
                                                      const CmfTable& cmf) {
  std::array<std::vector<double>, 3> w;
  for (auto& channel : w) channel.resize(wavelengths.size());
  for (std::size_t b = 0; b < wavelengths.size(); ++b) {
    const std::size_t i = cmf.nearest(wavelengths[b]);
    w[0][b] = cmf.xbar[i];
    w[1][b] = cmf.ybar[i];
    w[2][b] = cmf.zbar[i];
  }
  for (auto& channel : w) {
    double white = 0.0;
    for (double v : channel) white += v;
    for (double& v : channel) v = white > 0.0 ? v / white : 0.0;
  }
  return w;
}

inline ColorImage hsi_to_xyz(const HyperCube& cube, const CmfTable& cmf = default_cmf()) {
  const auto w = xyz_weights(cube.wavelengths(), cmf);
  ColorImage xyz(cube.rows(), cube.cols());
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    auto plane = cube.band_plane(b);
    for (std::size_t ch = 0; ch < 3; ++ch) {
      const double weight = w[ch][b];
      if (weight == 0.0) continue;
      for (std::size_t p = 0; p < plane.size(); ++p) xyz.at(ch, p) += weight * plane[p];
    }
  }
  return xyz;
}

/// XYZ -> linear sRGB (D65) matrix with each row scaled to sum to one, so
/// neutral XYZ stays neutral.
inline const std::array<std::array<double, 3>, 3>& xyz_to_linear_srgb_matrix() {
  static const auto m = [] {
    std::array<std::array<double, 3>, 3> raw = {{{3.2404542, -1.5371385, -0.4985314},
                                                 {-0.9692660, 1.8760108, 0.0415560},
                                                 {0.0556434, -0.2040259, 1.0572252}}};
    for (auto& row : raw) {
      const double sum = row[0] + row[1] + row[2];
      for (double& v : row) v /= sum;
    }
    return raw;
  }();
  return m;
}

inline double srgb_transfer(double linear) {
  return linear <= 0.0031308 ? 12.92 * linear : 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
}

inline ColorImage xyz_to_srgb(const ColorImage& xyz) {
  const auto& m = xyz_to_linear_srgb_matrix();
  ColorImage rgb(xyz.rows, xyz.cols);
  for (std::size_t p = 0; p < xyz.pixels(); ++p) {
    const double in[3] = {xyz.at(0, p), xyz.at(1, p), xyz.at(2, p)};
    for (std::size_t ch = 0; ch < 3; ++ch) {
      double linear = m[ch][0] * in[0] + m[ch][1] * in[1] + m[ch][2] * in[2];
      if (!std::isfinite(linear)) linear = 0.0;
      rgb.at(ch, p) = srgb_transfer(std::clamp(linear, 0.0, 1.0));
    }
  }
  return rgb;
}

inline ColorImage hsi_to_rgb(const HyperCube& cube, const CmfTable& cmf = default_cmf()) {
  return xyz_to_srgb(hsi_to_xyz(cube, cmf));
}

inline std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

/// Binary PPM (P6, maxval 255).
inline std::string encode_ppm(const ColorImage& rgb) {
  std::string out = "P6\n" + std::to_string(rgb.cols) + " " + std::to_string(rgb.rows) + "\n255\n";
  out.reserve(out.size() + 3 * rgb.pixels());
  for (std::size_t p = 0; p < rgb.pixels(); ++p) {
    for (std::size_t ch = 0; ch < 3; ++ch) out.push_back(static_cast<char>(to_byte(rgb.at(ch, p))));
  }
  return out;
}

inline void save_ppm(const ColorImage& rgb, const std::filesystem::path& path) {
  detail::write_file(path, encode_ppm(rgb));
}

}  // namespace hsi
