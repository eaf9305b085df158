#pragma once

// Hyperspectral cube / label-map data model, on-disk formats and the
// patch-tiling protocol.
//
// Cube file layout:
//   HSCUBE1 <rows> <cols> <bands>\n
//   <wavelength_0> <wavelength_1> ... <wavelength_{bands-1}>\n
//   rows*cols*bands little-endian float32, band-major then row-major.

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hsi/error.hpp"

namespace hsi {

class HyperCube {
 public:
  HyperCube() = default;

  /// Validates every invariant; throws hsi::Error on violation.
  HyperCube(std::size_t rows, std::size_t cols, std::vector<double> wavelengths,
            std::vector<float> data)
      : rows_(rows), cols_(cols), bands_(wavelengths.size()),
        wavelengths_(std::move(wavelengths)), data_(std::move(data)) {
    require(rows_ > 0 && cols_ > 0 && bands_ > 0, ErrorCode::kInvalidArgument,
            "cube dimensions must be positive");
    require(data_.size() == rows_ * cols_ * bands_, ErrorCode::kSizeMismatch,
            "cube payload holds " + std::to_string(data_.size()) + " samples, expected " +
                std::to_string(rows_ * cols_ * bands_));
    for (std::size_t b = 0; b < bands_; ++b) {
      require(std::isfinite(wavelengths_[b]), ErrorCode::kNonFiniteSample,
              "non-finite wavelength");
      if (b > 0) {
        require(wavelengths_[b] > wavelengths_[b - 1], ErrorCode::kNonIncreasingWavelengths,
                "wavelength " + std::to_string(b) + " does not exceed its predecessor");
      }
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
      require(std::isfinite(data_[i]), ErrorCode::kNonFiniteSample,
              "non-finite sample at flat index " + std::to_string(i));
    }
  }

  /// Zero-filled cube.
  static HyperCube zeros(std::size_t rows, std::size_t cols, std::vector<double> wavelengths) {
    const std::size_t n = rows * cols * wavelengths.size();
    return HyperCube(rows, cols, std::move(wavelengths), std::vector<float>(n, 0.0f));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t bands() const noexcept { return bands_; }
  std::size_t pixels() const noexcept { return rows_ * cols_; }
  const std::vector<double>& wavelengths() const noexcept { return wavelengths_; }
  std::span<const float> data() const noexcept { return data_; }

  std::size_t index(std::size_t row, std::size_t col, std::size_t band) const noexcept {
    return band * rows_ * cols_ + row * cols_ + col;
  }
  float at(std::size_t row, std::size_t col, std::size_t band) const noexcept {
    return data_[index(row, col, band)];
  }
  /// Sample of pixel `pixel` (row-major flat index) in band `band`.
  float sample(std::size_t pixel, std::size_t band) const noexcept {
    return data_[band * rows_ * cols_ + pixel];
  }
  std::span<const float> band_plane(std::size_t band) const noexcept {
    return std::span<const float>(data_).subspan(band * rows_ * cols_, rows_ * cols_);
  }
  std::vector<double> spectrum(std::size_t pixel) const {
    std::vector<double> s(bands_);
    for (std::size_t b = 0; b < bands_; ++b) s[b] = sample(pixel, b);
    return s;
  }

  friend bool operator==(const HyperCube&, const HyperCube&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t bands_ = 0;
  std::vector<double> wavelengths_;
  std::vector<float> data_;
};

inline constexpr std::uint8_t kNonCancer = 0;
inline constexpr std::uint8_t kCancer = 1;
inline constexpr std::uint8_t kUnlabeled = 255;

inline bool is_valid_label(std::uint8_t v) noexcept {
  return v == kNonCancer || v == kCancer || v == kUnlabeled;
}

class LabelMap {
 public:
  LabelMap() = default;
  LabelMap(std::size_t rows, std::size_t cols, std::uint8_t fill = kUnlabeled)
      : rows_(rows), cols_(cols), labels_(rows * cols, fill) {
    require(rows > 0 && cols > 0, ErrorCode::kInvalidArgument, "label map dimensions must be positive");
    require(is_valid_label(fill), ErrorCode::kOutOfRange, "label value outside {0,1,255}");
  }
  LabelMap(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> labels)
      : rows_(rows), cols_(cols), labels_(std::move(labels)) {
    require(rows > 0 && cols > 0, ErrorCode::kInvalidArgument, "label map dimensions must be positive");
    require(labels_.size() == rows * cols, ErrorCode::kSizeMismatch, "label count != rows*cols");
    for (auto v : labels_) {
      require(is_valid_label(v), ErrorCode::kOutOfRange,
              "label value " + std::to_string(v) + " outside {0,1,255}");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t pixels() const noexcept { return labels_.size(); }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }

  std::uint8_t operator[](std::size_t pixel) const noexcept { return labels_[pixel]; }
  std::uint8_t at(std::size_t row, std::size_t col) const noexcept { return labels_[row * cols_ + col]; }
  void set(std::size_t pixel, std::uint8_t value) {
    require(is_valid_label(value), ErrorCode::kOutOfRange, "label value outside {0,1,255}");
    labels_[pixel] = value;
  }

  bool matches(const HyperCube& cube) const noexcept {
    return rows_ == cube.rows() && cols_ == cube.cols();
  }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct PatchOrigin {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const PatchOrigin&, const PatchOrigin&) = default;
};

struct PatchGrid {
  std::size_t patch_rows = 0;
  std::size_t patch_cols = 0;
  std::size_t grid_rows = 0;
  std::size_t grid_cols = 0;
  std::vector<PatchOrigin> origins;  // row-major over the grid

  std::size_t count() const noexcept { return origins.size(); }
};

/// Row-major grid of disjoint patch_rows x patch_cols tiles. Trailing rows and
/// columns that do not fill a whole patch are dropped.
inline PatchGrid tile(std::size_t rows, std::size_t cols, std::size_t patch_rows,
                      std::size_t patch_cols) {
  require(patch_rows > 0 && patch_cols > 0, ErrorCode::kInvalidArgument,
          "patch dimensions must be positive");
  require(patch_rows <= rows && patch_cols <= cols, ErrorCode::kInvalidArgument,
          "patch " + std::to_string(patch_rows) + "x" + std::to_string(patch_cols) +
              " larger than image " + std::to_string(rows) + "x" + std::to_string(cols));
  PatchGrid grid;
  grid.patch_rows = patch_rows;
  grid.patch_cols = patch_cols;
  grid.grid_rows = rows / patch_rows;
  grid.grid_cols = cols / patch_cols;
  grid.origins.reserve(grid.grid_rows * grid.grid_cols);
  for (std::size_t gr = 0; gr < grid.grid_rows; ++gr) {
    for (std::size_t gc = 0; gc < grid.grid_cols; ++gc) {
      grid.origins.push_back({gr * patch_rows, gc * patch_cols});
    }
  }
  return grid;
}

inline HyperCube crop(const HyperCube& cube, PatchOrigin origin, std::size_t rows, std::size_t cols) {
  require(origin.row + rows <= cube.rows() && origin.col + cols <= cube.cols(),
          ErrorCode::kOutOfRange, "crop window outside cube");
  std::vector<float> data(rows * cols * cube.bands());
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        data[b * rows * cols + r * cols + c] = cube.at(origin.row + r, origin.col + c, b);
      }
    }
  }
  return HyperCube(rows, cols, cube.wavelengths(), std::move(data));
}

inline LabelMap crop(const LabelMap& map, PatchOrigin origin, std::size_t rows, std::size_t cols) {
  require(origin.row + rows <= map.rows() && origin.col + cols <= map.cols(),
          ErrorCode::kOutOfRange, "crop window outside label map");
  std::vector<std::uint8_t> labels(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) labels[r * cols + c] = map.at(origin.row + r, origin.col + c);
  }
  return LabelMap(rows, cols, std::move(labels));
}

/// Divides each band by a strictly positive reference spectrum (e.g. the lamp).
inline HyperCube band_normalize(const HyperCube& cube, std::span<const double> reference) {
  require(reference.size() == cube.bands(), ErrorCode::kDimensionMismatch,
          "reference spectrum length differs from band count");
  for (double r : reference) {
    require(std::isfinite(r) && r > 0.0, ErrorCode::kInvalidArgument,
            "reference spectrum entries must be positive");
  }
  std::vector<float> out(cube.data().begin(), cube.data().end());
  const std::size_t plane = cube.pixels();
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    for (std::size_t p = 0; p < plane; ++p) {
      out[b * plane + p] = static_cast<float>(static_cast<double>(out[b * plane + p]) / reference[b]);
    }
  }
  return HyperCube(cube.rows(), cube.cols(), cube.wavelengths(), std::move(out));
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline bool parse_size(std::string_view token, std::size_t& out) {
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

inline bool parse_double(std::string_view token, double& out) {
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::uint32_t to_little_endian(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    return ((v & 0xffu) << 24) | ((v & 0xff00u) << 8) | ((v >> 8) & 0xff00u) | (v >> 24);
  }
  return v;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  require(static_cast<bool>(out), ErrorCode::kIo, "write failed for " + path.string());
}

// Reads one whitespace-delimited token of a PNM header, skipping '#' comments.
inline std::string_view pnm_token(std::string_view bytes, std::size_t& pos) {
  for (;;) {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
  return bytes.substr(start, pos - start);
}

}  // namespace detail

inline std::string encode_cube(const HyperCube& cube) {
  std::string out = "HSCUBE1 " + std::to_string(cube.rows()) + " " + std::to_string(cube.cols()) +
                    " " + std::to_string(cube.bands()) + "\n";
  for (std::size_t b = 0; b < cube.bands(); ++b) {
    if (b > 0) out += ' ';
    out += detail::format_double(cube.wavelengths()[b]);
  }
  out += '\n';
  const std::size_t header = out.size();
  out.resize(header + cube.data().size() * 4);
  char* dst = out.data() + header;
  for (float v : cube.data()) {
    std::uint32_t bits = detail::to_little_endian(std::bit_cast<std::uint32_t>(v));
    std::memcpy(dst, &bits, 4);
    dst += 4;
  }
  return out;
}

struct CubeHeader {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> wavelengths;
  std::size_t payload_offset = 0;  // bytes before the first sample

  std::size_t bands() const noexcept { return wavelengths.size(); }
  std::size_t payload_bytes() const noexcept { return rows * cols * wavelengths.size() * 4; }
};

/// Parses the two text lines of a cube file. `bytes` only needs to hold the header.
inline CubeHeader parse_cube_header(std::string_view bytes) {
  const auto eol1 = bytes.find('\n');
  require(eol1 != std::string_view::npos, ErrorCode::kMalformedHeader, "missing header line");
  const auto header = detail::split_ws(bytes.substr(0, eol1));
  std::size_t rows = 0, cols = 0, bands = 0;
  require(header.size() == 4 && header[0] == "HSCUBE1", ErrorCode::kMalformedHeader,
          "expected 'HSCUBE1 rows cols bands'");
  require(detail::parse_size(header[1], rows) && detail::parse_size(header[2], cols) &&
              detail::parse_size(header[3], bands),
          ErrorCode::kMalformedHeader, "non-numeric cube dimension");
  require(rows > 0 && cols > 0 && bands > 0, ErrorCode::kMalformedHeader, "zero cube dimension");

  const auto eol2 = bytes.find('\n', eol1 + 1);
  require(eol2 != std::string_view::npos, ErrorCode::kMalformedHeader, "missing wavelength line");
  const auto tokens = detail::split_ws(bytes.substr(eol1 + 1, eol2 - eol1 - 1));
  require(tokens.size() == bands, ErrorCode::kMalformedHeader,
          "wavelength line has " + std::to_string(tokens.size()) + " entries, expected " +
              std::to_string(bands));
  CubeHeader h;
  h.rows = rows;
  h.cols = cols;
  h.wavelengths.resize(bands);
  for (std::size_t b = 0; b < bands; ++b) {
    require(detail::parse_double(tokens[b], h.wavelengths[b]), ErrorCode::kMalformedHeader,
            "bad wavelength token '" + std::string(tokens[b]) + "'");
  }
  for (std::size_t b = 1; b < bands; ++b) {
    require(h.wavelengths[b] > h.wavelengths[b - 1], ErrorCode::kNonIncreasingWavelengths,
            "wavelengths must be strictly increasing");
  }
  h.payload_offset = eol2 + 1;
  return h;
}

inline HyperCube decode_cube(std::string_view bytes) {
  CubeHeader h = parse_cube_header(bytes);
  const std::size_t rows = h.rows, cols = h.cols, bands = h.bands();
  const std::size_t eol2 = h.payload_offset - 1;
  std::vector<double> wavelengths = std::move(h.wavelengths);

  const std::size_t count = rows * cols * bands;
  const std::size_t payload = bytes.size() - (eol2 + 1);
  require(payload == count * 4, ErrorCode::kSizeMismatch,
          "payload holds " + std::to_string(payload) + " bytes, header implies " +
              std::to_string(count * 4));
  std::vector<float> data(count);
  const char* src = bytes.data() + eol2 + 1;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t bits;
    std::memcpy(&bits, src + 4 * i, 4);
    data[i] = std::bit_cast<float>(detail::to_little_endian(bits));
    require(std::isfinite(data[i]), ErrorCode::kNonFiniteSample,
            "non-finite sample at flat index " + std::to_string(i));
  }
  return HyperCube(rows, cols, std::move(wavelengths), std::move(data));
}

inline void save_cube(const HyperCube& cube, const std::filesystem::path& path) {
  detail::write_file(path, encode_cube(cube));
}

inline HyperCube load_cube(const std::filesystem::path& path) {
  return decode_cube(detail::read_file(path));
}

/// Header of a cube file plus a payload-size check, without reading samples.
inline CubeHeader probe_cube(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path.string());
  std::string head;
  std::string line;
  for (int i = 0; i < 2 && std::getline(in, line); ++i) head += line + '\n';
  CubeHeader h = parse_cube_header(head);
  const auto size = static_cast<std::size_t>(std::filesystem::file_size(path));
  require(size >= h.payload_offset && size - h.payload_offset == h.payload_bytes(), ErrorCode::kSizeMismatch,
          "payload holds " + std::to_string(size - std::min(size, h.payload_offset)) + " bytes, header implies " +
              std::to_string(h.payload_bytes()));
  return h;
}

inline std::string encode_label_map(const LabelMap& map) {
  std::string out = "P5\n" + std::to_string(map.cols()) + " " + std::to_string(map.rows()) + "\n255\n";
  out.append(reinterpret_cast<const char*>(map.labels().data()), map.size());
  return out;
}

inline LabelMap decode_label_map(std::string_view bytes) {
  std::size_t pos = 0;
  require(detail::pnm_token(bytes, pos) == "P5", ErrorCode::kMalformedHeader, "label map is not binary PGM (P5)");
  std::size_t cols = 0, rows = 0, maxval = 0;
  require(detail::parse_size(detail::pnm_token(bytes, pos), cols) &&
              detail::parse_size(detail::pnm_token(bytes, pos), rows) &&
              detail::parse_size(detail::pnm_token(bytes, pos), maxval),
          ErrorCode::kMalformedHeader, "bad PGM header");
  require(maxval == 255, ErrorCode::kMalformedHeader, "PGM maxval must be 255");
  require(rows > 0 && cols > 0, ErrorCode::kMalformedHeader, "zero PGM dimension");
  require(pos < bytes.size(), ErrorCode::kSizeMismatch, "PGM payload missing");
  ++pos;  // single whitespace byte after maxval
  require(bytes.size() - pos == rows * cols, ErrorCode::kSizeMismatch,
          "PGM payload size differs from width*height");
  std::vector<std::uint8_t> labels(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
  return LabelMap(rows, cols, std::move(labels));
}

inline void save_label_map(const LabelMap& map, const std::filesystem::path& path) {
  detail::write_file(path, encode_label_map(map));
}

inline LabelMap load_label_map(const std::filesystem::path& path) {
  return decode_label_map(detail::read_file(path));
}

}  // namespace hsi
