#include <gtest/gtest.h>

#include "hsi/synth.hpp"

using namespace hsi;

namespace {

PhantomSpec small_spec(double noise, double jitter, std::uint64_t seed = 3) {
  return standard_phantom_spec(64, 64, 32, noise, jitter, seed);
}

}  // namespace

TEST(Phantom, NoiseFreePixelsEqualClassMeans) {
  const PhantomSpec spec = small_spec(0.0, 0.0);
  const Phantom ph = make_phantom(spec);
  for (std::size_t p = 0; p < ph.cube.pixels(); ++p)
    for (std::size_t b = 0; b < spec.bands; ++b)
      ASSERT_EQ(ph.cube.sample(p, b), static_cast<float>(spec.class_spectra[ph.classes[p]][b]));
}

TEST(Phantom, Deterministic) {
  const PhantomSpec spec = small_spec(0.05, 0.1, 17);
  const Phantom a = make_phantom(spec), b = make_phantom(spec);
  EXPECT_EQ(a.cube, b.cube);
  EXPECT_EQ(a.truth, b.truth);
  const Phantom c = make_phantom(small_spec(0.05, 0.1, 18));
  EXPECT_NE(a.cube, c.cube);
}

TEST(Phantom, ClassMeansFollowLawOfLargeNumbers) {
  const PhantomSpec spec = small_spec(0.02, 0.0, 5);
  const Phantom ph = make_phantom(spec);
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t n = 0;
    std::vector<double> mean(spec.bands, 0.0);
    for (std::size_t p = 0; p < ph.cube.pixels(); ++p) {
      if (ph.classes[p] != k) continue;
      ++n;
      for (std::size_t b = 0; b < spec.bands; ++b) mean[b] += ph.cube.sample(p, b);
    }
    ASSERT_GT(n, 0u);
    const double bound = 3.0 * 0.02 / std::sqrt(static_cast<double>(n));
    for (std::size_t b = 0; b < spec.bands; ++b)
      EXPECT_LE(std::abs(mean[b] / static_cast<double>(n) - spec.class_spectra[k][b]), bound) << "class " << k;
  }
}

TEST(Phantom, RegionsAreContiguous) {
  for (std::uint64_t seed : {1, 2, 3, 2024}) {
    const Phantom ph = make_phantom(small_spec(0.0, 0.0, seed));
    const std::size_t rows = ph.truth.rows(), cols = ph.truth.cols();
    std::size_t agree = 0;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const auto v = ph.truth.at(r, c);
        const bool same = (r > 0 && ph.truth.at(r - 1, c) == v) || (r + 1 < rows && ph.truth.at(r + 1, c) == v) ||
                          (c > 0 && ph.truth.at(r, c - 1) == v) || (c + 1 < cols && ph.truth.at(r, c + 1) == v);
        agree += same;
      }
    EXPECT_GE(static_cast<double>(agree), 0.9 * static_cast<double>(rows * cols)) << "seed " << seed;
  }
}

TEST(Phantom, BothClassesPresentAndBinary) {
  const Phantom ph = make_phantom(small_spec(0.0, 0.0));
  std::size_t ones = 0;
  for (auto v : ph.truth.labels()) {
    ASSERT_TRUE(v == kCancer || v == kNonCancer);
    ones += v == kCancer;
  }
  EXPECT_EQ(ones, ph.truth.size() / 2);
}

TEST(Phantom, NearestClassMeanIsPerfectWithoutNoise) {
  const PhantomSpec spec = small_spec(0.0, 0.0, 11);
  const Phantom ph = make_phantom(spec);
  for (std::size_t p = 0; p < ph.cube.pixels(); ++p) {
    double d[2] = {0, 0};
    for (int k = 0; k < 2; ++k)
      for (std::size_t b = 0; b < spec.bands; ++b) {
        const double e = ph.cube.sample(p, b) - spec.class_spectra[k][b];
        d[k] += e * e;
      }
    ASSERT_EQ(d[1] < d[0] ? kCancer : kNonCancer, ph.truth[p]);
  }
}

TEST(Phantom, GainJitterWithinBounds) {
  PhantomSpec spec = small_spec(0.0, 0.1, 4);
  const Phantom ph = make_phantom(spec);
  for (std::size_t p = 0; p < ph.cube.pixels(); ++p) {
    const double ratio = ph.cube.sample(p, 0) / spec.class_spectra[ph.classes[p]][0];
    EXPECT_GE(ratio, 0.9 - 1e-6);
    EXPECT_LE(ratio, 1.1 + 1e-6);
    // one scalar per pixel
    const double ratio2 = ph.cube.sample(p, 20) / spec.class_spectra[ph.classes[p]][20];
    EXPECT_NEAR(ratio, ratio2, 1e-6);
  }
}

TEST(Phantom, MoreThanTwoClassesMapToCancer) {
  PhantomSpec spec;
  spec.rows = 12;
  spec.cols = 12;
  spec.bands = 4;
  spec.class_count = 3;
  spec.class_spectra = {{0.1, 0.1, 0.1, 0.1}, {0.5, 0.5, 0.5, 0.5}, {0.9, 0.9, 0.9, 0.9}};
  const Phantom ph = make_phantom(spec);
  for (std::size_t p = 0; p < ph.cube.pixels(); ++p)
    EXPECT_EQ(ph.truth[p], ph.classes[p] == 0 ? kNonCancer : kCancer);
}

TEST(Phantom, InvalidSpecs) {
  PhantomSpec spec = small_spec(0.0, 0.0);
  spec.class_spectra[1] = spec.class_spectra[0];
  EXPECT_THROW(make_phantom(spec), Error);
  spec = small_spec(0.0, 0.0);
  spec.class_spectra[0][3] = 1.5;
  EXPECT_THROW(make_phantom(spec), Error);
  spec = small_spec(-0.1, 0.0);
  EXPECT_THROW(make_phantom(spec), Error);
  spec = small_spec(0.0, 0.0);
  spec.class_count = 1;
  EXPECT_THROW(make_phantom(spec), Error);
}

TEST(RgbProjection, FlatCubeBandsEqual) {
  std::vector<double> w;
  for (int nm = 450; nm <= 800; ++nm) w.push_back(nm);
  const HyperCube flat(2, 2, w, std::vector<float>(4 * w.size(), 1.0f));
  const HyperCube rgb = make_rgb_projection(flat);
  ASSERT_EQ(rgb.bands(), 3u);
  for (std::size_t p = 0; p < 4; ++p) {
    EXPECT_NEAR(rgb.sample(p, 0), rgb.sample(p, 1), 1e-6);
    EXPECT_NEAR(rgb.sample(p, 1), rgb.sample(p, 2), 1e-6);
  }
}

TEST(RgbProjection, ShapeAndBandOrder) {
  const HyperCube three(2, 3, {460, 550, 610}, std::vector<float>(18, 0.5f));
  const HyperCube rgb = make_rgb_projection(three);
  EXPECT_EQ(rgb.bands(), 3u);
  EXPECT_EQ(rgb.rows(), 2u);
  EXPECT_EQ(rgb.cols(), 3u);
  EXPECT_EQ(rgb.wavelengths(), (std::vector<double>{465, 549, 611}));
  // band 2 is the red channel
  const ColorImage direct = hsi_to_rgb(three);
  EXPECT_FLOAT_EQ(rgb.sample(0, 2), static_cast<float>(direct.at(0, 0)));
  EXPECT_FLOAT_EQ(rgb.sample(0, 0), static_cast<float>(direct.at(2, 0)));
  EXPECT_THROW(make_rgb_projection(HyperCube(1, 1, {500, 600}, {1.0f, 1.0f})), Error);
}

TEST(RgbProjection, ClassesStaySeparated) {
  const PhantomSpec spec = standard_phantom_spec(32, 32, 351, 0.0, 0.0, 7);
  const Phantom ph = make_phantom(spec);
  const HyperCube rgb = make_rgb_projection(ph.cube);
  double mean[2][3] = {};
  std::size_t n[2] = {};
  for (std::size_t p = 0; p < rgb.pixels(); ++p) {
    const int k = ph.truth[p];
    ++n[k];
    for (int b = 0; b < 3; ++b) mean[k][b] += rgb.sample(p, b);
  }
  double sep = 0.0;
  for (int b = 0; b < 3; ++b) sep = std::max(sep, std::abs(mean[0][b] / n[0] - mean[1][b] / n[1]));
  EXPECT_GT(sep, 0.0);
}
