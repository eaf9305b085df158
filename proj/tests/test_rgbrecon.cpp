#include <gtest/gtest.h>

#include <random>

#include "hsi/rgbrecon.hpp"

using namespace hsi;

namespace {

std::vector<double> grid(double first, double last) {
  std::vector<double> w;
  for (double nm = first; nm <= last + 1e-9; nm += 1.0) w.push_back(nm);
  return w;
}

HyperCube spectra_cube(const std::vector<std::vector<double>>& spectra, const std::vector<double>& w) {
  const std::size_t n = spectra.size();
  std::vector<float> data(n * w.size());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t b = 0; b < w.size(); ++b) data[b * n + p] = static_cast<float>(spectra[p][b]);
  return HyperCube(1, n, w, std::move(data));
}

}  // namespace

TEST(Cmf, ShippedTableMatchesCompiledCopy) {
  const CmfTable file = load_cmf(std::string(HSI_DATA_DIR) + "/cie1931_2deg_1nm.txt");
  const CmfTable& built = default_cmf();
  ASSERT_EQ(file.wavelengths.size(), built.wavelengths.size());
  EXPECT_EQ(file.wavelengths.front(), 360.0);
  EXPECT_EQ(file.wavelengths.back(), 830.0);
  for (std::size_t i = 0; i < file.wavelengths.size(); ++i) {
    EXPECT_DOUBLE_EQ(file.xbar[i], built.xbar[i]);
    EXPECT_DOUBLE_EQ(file.ybar[i], built.ybar[i]);
    EXPECT_DOUBLE_EQ(file.zbar[i], built.zbar[i]);
  }
}

TEST(Cmf, KnownObserverValues) {
  // CIE 1931 2-degree tabulated values at 5 nm nodes
  const CmfTable& t = default_cmf();
  const auto i550 = t.nearest(550.0);
  EXPECT_NEAR(t.xbar[i550], 0.4334499, 1e-7);
  EXPECT_NEAR(t.ybar[i550], 0.9949501, 1e-7);
  EXPECT_NEAR(t.zbar[i550], 0.0087500, 1e-7);
  const auto i600 = t.nearest(600.0);
  EXPECT_NEAR(t.xbar[i600], 1.0622, 1e-4);
  EXPECT_NEAR(t.ybar[i600], 0.631, 1e-4);
  EXPECT_NEAR(t.ybar[t.nearest(555.0)], 1.0, 1e-3);
}

TEST(Cmf, RejectsOutOfTableWavelength) {
  const HyperCube cube(1, 1, {900.0}, {1.0f});
  EXPECT_THROW(hsi_to_xyz(cube), Error);
}

TEST(HsiToXyz, FlatAndZero) {
  const auto w = grid(450, 800);
  const HyperCube flat = spectra_cube({std::vector<double>(w.size(), 1.0)}, w);
  const ColorImage xyz = hsi_to_xyz(flat);
  for (int ch = 0; ch < 3; ++ch) EXPECT_NEAR(xyz.at(ch, 0), 1.0, 1e-12);
  const HyperCube zero = spectra_cube({std::vector<double>(w.size(), 0.0)}, w);
  for (int ch = 0; ch < 3; ++ch) EXPECT_EQ(hsi_to_xyz(zero).at(ch, 0), 0.0);
}

TEST(HsiToXyz, SpikeMatchesDirectSummation) {
  const auto w = grid(450, 800);
  std::vector<double> s(w.size(), 0.0);
  s[100] = 1.0;  // 550 nm
  const ColorImage xyz = hsi_to_xyz(spectra_cube({s}, w));
  const CmfTable& t = default_cmf();
  double white[3] = {0, 0, 0};
  for (std::size_t i = 0; i < t.wavelengths.size(); ++i) {
    if (t.wavelengths[i] < 450 || t.wavelengths[i] > 800) continue;
    white[0] += t.xbar[i];
    white[1] += t.ybar[i];
    white[2] += t.zbar[i];
  }
  EXPECT_NEAR(xyz.at(0, 0), 0.4334499 / white[0], 1e-12);
  EXPECT_NEAR(xyz.at(1, 0), 0.9949501 / white[1], 1e-12);
  EXPECT_NEAR(xyz.at(2, 0), 0.008749999 / white[2], 1e-12);
}

TEST(HsiToXyz, Linearity) {
  const auto w = grid(450, 800);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0), coef(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> s(w.size()), t(w.size());
    for (auto& v : s) v = static_cast<float>(u(rng));
    for (auto& v : t) v = static_cast<float>(u(rng));
    const double a = coef(rng), b = coef(rng);
    // combine in double, stored as float: compare against the float-rounded inputs
    std::vector<double> mix(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) mix[k] = a * s[k] + b * t[k];
    const HyperCube cube = spectra_cube({s, t}, w);
    const ColorImage xs = hsi_to_xyz(cube);
    const auto wts = xyz_weights(w, default_cmf());
    for (int ch = 0; ch < 3; ++ch) {
      double direct = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) direct += wts[ch][k] * mix[k];
      const double combined = a * xs.at(ch, 0) + b * xs.at(ch, 1);
      EXPECT_LE(std::abs(combined - direct), 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST(XyzToSrgb, Basics) {
  ColorImage xyz(1, 2);
  for (int ch = 0; ch < 3; ++ch) xyz.at(ch, 1) = 1.0;
  const ColorImage rgb = xyz_to_srgb(xyz);
  for (int ch = 0; ch < 3; ++ch) EXPECT_EQ(rgb.at(ch, 0), 0.0);
  EXPECT_NEAR(rgb.at(0, 1), rgb.at(1, 1), 1e-6);
  EXPECT_NEAR(rgb.at(1, 1), rgb.at(2, 1), 1e-6);
  EXPECT_NEAR(rgb.at(0, 1), 1.0, 1e-12);
}

TEST(XyzToSrgb, MatrixRowsSumToOne) {
  for (const auto& row : xyz_to_linear_srgb_matrix()) EXPECT_NEAR(row[0] + row[1] + row[2], 1.0, 1e-15);
}

TEST(XyzToSrgb, TransferCurve) {
  EXPECT_NEAR(srgb_transfer(0.5), 1.055 * std::pow(0.5, 1.0 / 2.4) - 0.055, 1e-15);
  EXPECT_NEAR(srgb_transfer(0.5), 0.7354, 5e-5);
  EXPECT_DOUBLE_EQ(srgb_transfer(0.001), 0.01292);
  EXPECT_DOUBLE_EQ(srgb_transfer(1.0), 1.0);
  // continuous at the knee
  EXPECT_NEAR(srgb_transfer(0.0031308), 1.055 * std::pow(0.0031308, 1.0 / 2.4) - 0.055, 1e-6);
}

TEST(XyzToSrgb, ClipsAndNeverNan) {
  ColorImage xyz(1, 4);
  const double vals[4][3] = {{5, -3, 2}, {-1, -1, -1}, {1e300, 1e300, -1e300}, {0.2, 0.9, 0.1}};
  for (int p = 0; p < 4; ++p)
    for (int ch = 0; ch < 3; ++ch) xyz.at(ch, p) = vals[p][ch];
  const ColorImage rgb = xyz_to_srgb(xyz);
  for (double v : rgb.data) {
    EXPECT_FALSE(std::isnan(v));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(HsiToRgb, FlatCubeIsNeutralWhite) {
  const auto w = grid(450, 800);
  std::vector<std::vector<double>> px(6, std::vector<double>(w.size(), 1.0));
  const ColorImage rgb = hsi_to_rgb(spectra_cube(px, w));
  for (std::size_t p = 0; p < 6; ++p) {
    const double lo = std::min({rgb.at(0, p), rgb.at(1, p), rgb.at(2, p)});
    const double hi = std::max({rgb.at(0, p), rgb.at(1, p), rgb.at(2, p)});
    EXPECT_LT(hi - lo, 1e-6);
    EXPECT_NEAR(hi, 1.0, 1e-9);
  }
}

TEST(HsiToRgb, ZeroCubeIsBlack) {
  const HyperCube zero = HyperCube::zeros(3, 3, grid(450, 800));
  for (double v : hsi_to_rgb(zero).data) EXPECT_EQ(v, 0.0);
}

TEST(HsiToRgb, RampTowardRedIsRed) {
  const auto w = grid(450, 650);
  std::vector<std::vector<double>> px;
  for (double scale : {0.2, 0.5, 1.0}) {
    std::vector<double> s(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) s[k] = scale * (0.05 + 0.95 * static_cast<double>(k) / 200.0);
    px.push_back(s);
  }
  const ColorImage rgb = hsi_to_rgb(spectra_cube(px, w));
  for (std::size_t p = 0; p < px.size(); ++p) EXPECT_GT(rgb.at(0, p), rgb.at(2, p));
}

TEST(HsiToRgb, OutputsInUnitRange) {
  const auto w = grid(450, 800);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.5, 3.0);
  std::vector<std::vector<double>> px(40, std::vector<double>(w.size()));
  for (auto& s : px)
    for (auto& v : s) v = u(rng);
  for (double v : hsi_to_rgb(spectra_cube(px, w)).data) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Ppm, Encoding) {
  ColorImage rgb(1, 2);
  rgb.at(0, 0) = 1.0;
  rgb.at(2, 1) = 0.5;
  const std::string bytes = encode_ppm(rgb);
  const std::string head = "P6\n2 1\n255\n";
  ASSERT_EQ(bytes.size(), head.size() + 6);
  EXPECT_EQ(bytes.substr(0, head.size()), head);
  EXPECT_EQ(static_cast<unsigned char>(bytes[head.size()]), 255);
  EXPECT_EQ(static_cast<unsigned char>(bytes[head.size() + 5]), 128);
}
