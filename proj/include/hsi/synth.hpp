#pragma once

// Deterministic synthetic phantoms with known ground truth.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/rgbrecon.hpp"

namespace hsi {

struct PhantomSpec {
  std::size_t rows = 64;
  std::size_t cols = 64;
  std::size_t bands = 32;
  std::size_t class_count = 2;
  std::vector<std::vector<double>> class_spectra;  // class_count x bands, values in [0, 1]
  std::uint64_t region_seed = 1;
  std::uint64_t noise_seed = 2;
  double noise_sigma = 0.0;
  double gain_jitter = 0.0;
  double first_nm = 450.0;
  double last_nm = 800.0;

  void validate() const {
    require(rows > 0 && cols > 0 && bands > 0, ErrorCode::kInvalidArgument, "phantom dimensions must be positive");
    require(class_count >= 2, ErrorCode::kInvalidArgument, "phantom needs at least two classes");
    require(class_spectra.size() == class_count, ErrorCode::kInvalidArgument,
            "need one mean spectrum per class");
    for (const auto& s : class_spectra) {
      require(s.size() == bands, ErrorCode::kInvalidArgument, "class spectrum length != bands");
      for (double v : s) {
        require(std::isfinite(v) && v >= 0.0 && v <= 1.0, ErrorCode::kInvalidArgument,
                "class spectra must lie in [0, 1]");
      }
    }
    for (std::size_t a = 0; a < class_count; ++a) {
      for (std::size_t b = a + 1; b < class_count; ++b) {
        double diff = 0.0;
        for (std::size_t k = 0; k < bands; ++k) {
          diff = std::max(diff, std::abs(class_spectra[a][k] - class_spectra[b][k]));
        }
        require(diff > 0.0, ErrorCode::kInvalidArgument, "class spectra must be pairwise distinct");
      }
    }
    require(std::isfinite(noise_sigma) && noise_sigma >= 0.0, ErrorCode::kInvalidArgument,
            "noise_sigma must be >= 0");
    require(std::isfinite(gain_jitter) && gain_jitter >= 0.0, ErrorCode::kInvalidArgument,
            "gain_jitter must be >= 0");
    require(first_nm < last_nm || bands == 1, ErrorCode::kInvalidArgument, "first_nm must precede last_nm");
  }

  std::vector<double> wavelengths() const {
    std::vector<double> w(bands);
    for (std::size_t b = 0; b < bands; ++b) {
      w[b] = bands == 1 ? first_nm
                        : first_nm + (last_nm - first_nm) * static_cast<double>(b) / static_cast<double>(bands - 1);
    }
    return w;
  }
};

struct Phantom {
  HyperCube cube;
  LabelMap truth;                  // class 0 -> non-cancer, every other class -> cancer
  std::vector<std::size_t> classes;  // per-pixel class index
};

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; mt19937_64 output is fixed by
// the standard, so the stream is portable.
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline double standard_normal(std::mt19937_64& engine) {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform01(engine);
  const double u2 = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace detail

/// Low-frequency random field: a sum of a few random plane waves with 0.5-2.5
/// cycles across the image.
inline std::vector<double> region_field(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  constexpr int kWaves = 6;
  struct Wave {
    double fr, fc, phase, amp;
  };
  std::vector<Wave> waves;
  for (int k = 0; k < kWaves; ++k) {
    const double freq = 0.5 + 2.0 * detail::uniform01(engine);
    const double angle = 2.0 * std::numbers::pi * detail::uniform01(engine);
    const double phase = 2.0 * std::numbers::pi * detail::uniform01(engine);
    const double amp = 0.5 + detail::uniform01(engine);
    waves.push_back({freq * std::sin(angle), freq * std::cos(angle), phase, amp});
  }
  std::vector<double> field(rows * cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double v = 0.0;
      for (const auto& w : waves) {
        v += w.amp * std::cos(2.0 * std::numbers::pi *
                                  (w.fr * static_cast<double>(r) / static_cast<double>(rows) +
                                   w.fc * static_cast<double>(c) / static_cast<double>(cols)) +
                              w.phase);
      }
      field[r * cols + c] = v;
    }
  }
  return field;
}

inline Phantom make_phantom(const PhantomSpec& spec) {
  spec.validate();
  const std::size_t n = spec.rows * spec.cols;

  // Threshold the field at equal-mass quantiles: rank order decides the class.
  const auto field = region_field(spec.rows, spec.cols, spec.region_seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return field[a] < field[b]; });
  std::vector<std::size_t> classes(n);
  for (std::size_t rank = 0; rank < n; ++rank) classes[order[rank]] = rank * spec.class_count / n;

  std::mt19937_64 engine(spec.noise_seed);
  std::vector<double> gain(n, 1.0);
  if (spec.gain_jitter > 0.0) {
    for (auto& g : gain) g = 1.0 - spec.gain_jitter + 2.0 * spec.gain_jitter * detail::uniform01(engine);
  }
  std::vector<float> data(n * spec.bands);
  for (std::size_t b = 0; b < spec.bands; ++b) {
    for (std::size_t p = 0; p < n; ++p) {
      double v = gain[p] * spec.class_spectra[classes[p]][b];
      if (spec.noise_sigma > 0.0) v += spec.noise_sigma * detail::standard_normal(engine);
      data[b * n + p] = static_cast<float>(v);
    }
  }

  std::vector<std::uint8_t> labels(n);
  for (std::size_t p = 0; p < n; ++p) labels[p] = classes[p] == 0 ? kNonCancer : kCancer;

  return Phantom{HyperCube(spec.rows, spec.cols, spec.wavelengths(), std::move(data)),
                 LabelMap(spec.rows, spec.cols, std::move(labels)), std::move(classes)};
}

/// Two smooth class spectra over 450-800 nm that differ mostly in shape: a
/// modest visible-range difference plus a larger one above 700 nm, where the
/// colour-matching functions are almost blind. Values stay inside [0, 1].
inline std::vector<std::vector<double>> tissue_like_spectra(const std::vector<double>& wavelengths) {
  auto bump = [](double nm, double center, double width) {
    const double z = (nm - center) / width;
    return std::exp(-0.5 * z * z);
  };
  std::vector<std::vector<double>> spectra(2, std::vector<double>(wavelengths.size()));
  for (std::size_t b = 0; b < wavelengths.size(); ++b) {
    const double nm = wavelengths[b];
    const double base = 0.45 + 0.2 * (nm - 450.0) / 350.0 - 0.25 * bump(nm, 550.0, 35.0);
    spectra[0][b] = base;
    spectra[1][b] = base - 0.03 * bump(nm, 600.0, 30.0) + 0.06 * bump(nm, 760.0, 30.0);
  }
  return spectra;
}

/// Phantom spec used by the ordering checks: two tissue-like classes.
inline PhantomSpec standard_phantom_spec(std::size_t rows, std::size_t cols, std::size_t bands,
                                         double noise_sigma, double gain_jitter, std::uint64_t seed) {
  PhantomSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.bands = bands;
  spec.class_count = 2;
  spec.class_spectra = tissue_like_spectra(spec.wavelengths());
  spec.region_seed = seed;
  spec.noise_seed = seed ^ 0x9e3779b97f4a7c15ULL;
  spec.noise_sigma = noise_sigma;
  spec.gain_jitter = gain_jitter;
  return spec;
}

/// Rendered sRGB of the cube as a 3-band cube ordered blue, green, red so the
/// nominal wavelengths (465, 549, 611 nm) increase.
inline HyperCube make_rgb_projection(const HyperCube& cube, const CmfTable& cmf = default_cmf()) {
  require(cube.bands() >= 3, ErrorCode::kInvalidArgument, "RGB projection needs at least 3 bands");
  const ColorImage rgb = hsi_to_rgb(cube, cmf);
  const std::size_t n = cube.pixels();
  std::vector<float> data(3 * n);
  for (std::size_t p = 0; p < n; ++p) {
    data[0 * n + p] = static_cast<float>(rgb.at(2, p));
    data[1 * n + p] = static_cast<float>(rgb.at(1, p));
    data[2 * n + p] = static_cast<float>(rgb.at(0, p));
  }
  return HyperCube(cube.rows(), cube.cols(), {465.0, 549.0, 611.0}, std::move(data));
}

}  // namespace hsi
