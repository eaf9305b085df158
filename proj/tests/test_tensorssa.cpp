#include <gtest/gtest.h>

#include <random>

#include "hsi/synth.hpp"
#include "hsi/tensorssa.hpp"
#include "oracles.hpp"

using namespace hsi;

namespace {

HyperCube random_cube(std::size_t rows, std::size_t cols, std::size_t bands, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(0.05f, 1.0f);
  std::vector<float> data(rows * cols * bands);
  for (auto& v : data) v = u(rng);
  std::vector<double> w(bands);
  for (std::size_t b = 0; b < bands; ++b) w[b] = 450.0 + 10.0 * static_cast<double>(b);
  return HyperCube(rows, cols, w, std::move(data));
}

Tensor3 random_tensor(std::mt19937_64& rng, std::size_t a, std::size_t b, std::size_t c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Tensor3 t(a, b, c);
  for (double& v : t.data) v = n(rng);
  return t;
}

double diff_norm(const Tensor3& a, const Tensor3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += (a.data[i] - b.data[i]) * (a.data[i] - b.data[i]);
  return std::sqrt(s);
}

// Brute force: clipped-or-shifted window given explicitly, plain sort.
std::vector<std::size_t> brute_neighbors(const HyperCube& cube, std::size_t p, std::size_t r0, std::size_t r1,
                                         std::size_t c0, std::size_t c1, std::size_t l) {
  const auto sp = cube.spectrum(p);
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) {
      const std::size_t q = r * cube.cols() + c;
      if (q == p) continue;
      const auto sq = cube.spectrum(q);
      double na = 0, nb = 0, d = 0;
      for (std::size_t b = 0; b < sp.size(); ++b) {
        na += sp[b] * sp[b];
        nb += sq[b] * sq[b];
      }
      for (std::size_t b = 0; b < sp.size(); ++b) {
        const double e = sp[b] / std::sqrt(na) - sq[b] / std::sqrt(nb);
        d += e * e;
      }
      all.emplace_back(d, q);
    }
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> out{p};
  for (std::size_t k = 0; k + 1 < l; ++k) out.push_back(all[k].second);
  return out;
}

double within_class_variance(const FeatureStack& f, const LabelMap& gt) {
  double total = 0.0;
  for (std::uint8_t k : {kNonCancer, kCancer}) {
    std::vector<std::size_t> idx;
    for (std::size_t p = 0; p < gt.size(); ++p)
      if (gt[p] == k) idx.push_back(p);
    const Eigen::MatrixXd rows = gather_rows(f, idx);
    total += (rows.rowwise() - rows.colwise().mean()).squaredNorm();
  }
  return total / static_cast<double>(gt.size());
}

}  // namespace

TEST(TssaConfig, Bounds) {
  TssaConfig c;
  EXPECT_NO_THROW(c.validate());  // u = 5, l = 60 <= 81
  c.l = 82;
  EXPECT_THROW(c.validate(), Error);
  c = TssaConfig{};
  c.u = 2;
  c.l = 9;
  EXPECT_NO_THROW(c.validate());
  c.l = 10;
  EXPECT_THROW(c.validate(), Error);
  c = TssaConfig{};
  c.rtub = 61;
  EXPECT_THROW(c.validate(), Error);
  c.rtub = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(SearchWindow, InteriorAndBorders) {
  const Window mid = search_window(20, 20, 10, 10, 2);
  EXPECT_EQ(mid.row0, 8u);
  EXPECT_EQ(mid.row1, 13u);
  EXPECT_EQ(mid.size(), 25u);
  const Window corner = search_window(20, 20, 0, 0, 2);
  EXPECT_EQ(corner.row0, 0u);
  EXPECT_EQ(corner.col1, 5u);
  EXPECT_EQ(corner.size(), 25u);
  const Window far = search_window(20, 20, 19, 18, 5);
  EXPECT_EQ(far.row0, 9u);
  EXPECT_EQ(far.col0, 9u);
  EXPECT_EQ(far.size(), 121u);
  // image narrower than the window
  const Window narrow = search_window(3, 20, 1, 0, 2);
  EXPECT_EQ(narrow.row0, 0u);
  EXPECT_EQ(narrow.row1, 3u);
  EXPECT_EQ(narrow.size(), 15u);
}

TEST(SimilarNeighbors, ConstantCubeTieBreak) {
  const HyperCube cube(9, 9, {500, 600}, std::vector<float>(162, 0.5f));
  const std::size_t p = 4 * 9 + 4;
  const auto got = similar_neighbors(cube, p, 2, 5);
  EXPECT_EQ(got, (std::vector<std::size_t>{p, 2 * 9 + 2, 2 * 9 + 3, 2 * 9 + 4, 2 * 9 + 5}));
}

TEST(SimilarNeighbors, ScaledSpectrumHasZeroDistance) {
  HyperCube base = random_cube(2, 3, 3, 4);
  std::vector<float> d(base.data().begin(), base.data().end());
  for (std::size_t b = 0; b < 3; ++b) d[b * 6 + 5] = 2.5f * d[b * 6 + 0];
  const HyperCube cube(2, 3, base.wavelengths(), d);
  EXPECT_NEAR(normalized_distance2(cube.spectrum(0), cube.spectrum(5)), 0.0, 1e-12);
  const auto got = similar_neighbors(cube, 0, 2, 2);
  EXPECT_EQ(got[1], 5u);
}

TEST(SimilarNeighbors, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const HyperCube cube = random_cube(9, 9, 8, seed);
    for (std::size_t p = 0; p < cube.pixels(); ++p) {
      const Window w = search_window(9, 9, p / 9, p % 9, 2);
      EXPECT_EQ(similar_neighbors(cube, p, 2, 4), brute_neighbors(cube, p, w.row0, w.row1, w.col0, w.col1, 4));
      const std::size_t r = p / 9, c = p % 9;
      if (r >= 2 && r <= 6 && c >= 2 && c <= 6) {
        // away from the border the window is the plain centred one
        EXPECT_EQ(similar_neighbors(cube, p, 2, 4), brute_neighbors(cube, p, r - 2, r + 3, c - 2, c + 3, 4));
      }
    }
  }
}

TEST(SimilarNeighbors, CornerWithDefaultSizes) {
  // u = 5, l = 60: the window keeps 121 pixels even at a corner
  const HyperCube cube = random_cube(24, 24, 6, 9);
  const auto got = similar_neighbors(cube, 0, 5, 60);
  EXPECT_EQ(got.size(), 60u);
  EXPECT_EQ(got[0], 0u);
  const HyperCube tiny = random_cube(4, 4, 3, 1);
  EXPECT_THROW(similar_neighbors(tiny, 0, 5, 60), Error);
}

TEST(Embed, SingleFiberIsTheCube) {
  const HyperCube cube = random_cube(6, 7, 5, 2);
  TssaConfig cfg;
  cfg.u = 1;
  cfg.l = 1;
  const TrajectoryTensor t = embed(cube, cfg);
  for (std::size_t p = 0; p < cube.pixels(); ++p) {
    EXPECT_EQ(t.source(0, p), p);
    for (std::size_t b = 0; b < 5; ++b) EXPECT_EQ(t.z(0, p, b), cube.sample(p, b));
  }
}

TEST(Embed, ConstantCubeFibersIdentical) {
  const HyperCube cube(5, 5, {500, 600, 700}, std::vector<float>(75, 0.3f));
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 6;
  const TrajectoryTensor t = embed(cube, cfg);
  for (double v : t.z.data) EXPECT_EQ(v, static_cast<double>(0.3f));
}

TEST(Embed, FibersMatchIndexMap) {
  const HyperCube cube = random_cube(8, 8, 4, 3);
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 7;
  const TrajectoryTensor t = embed(cube, cfg);
  ASSERT_EQ(t.l(), 7u);
  ASSERT_EQ(t.pixels(), 64u);
  for (std::size_t p = 0; p < 64; ++p) {
    EXPECT_EQ(t.source(0, p), p);
    const auto expected = similar_neighbors(cube, p, 2, 7);
    for (std::size_t k = 0; k < 7; ++k) {
      EXPECT_EQ(t.source(k, p), expected[k]);
      for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(t.z(k, p, b), cube.sample(t.source(k, p), b));
    }
  }
}

TEST(Tsvd, FullRankIsIdentity) {
  std::mt19937_64 rng(1);
  for (auto [a, b, c] : {std::tuple{4, 5, 3}, {3, 3, 8}, {5, 2, 7}, {6, 6, 1}}) {
    const Tensor3 z = random_tensor(rng, a, b, c);
    const Tensor3 r = tsvd_lowrank(z, std::min(a, b));
    EXPECT_LT(diff_norm(r, z) / z.frobenius(), 1e-10);
  }
}

TEST(Tsvd, RankOneOuterProductRecovered) {
  std::mt19937_64 rng(2);
  const Eigen::VectorXd a = oracle::random_matrix(rng, 5, 1), b = oracle::random_matrix(rng, 7, 1);
  for (std::size_t d : {1u, 4u, 9u}) {
    Tensor3 z(5, 7, d);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t k = 0; k < d; ++k) z(i, j, k) = a(i) * b(j);
    EXPECT_LT(diff_norm(tsvd_lowrank(z, 1), z) / z.frobenius(), 1e-10) << "d " << d;
  }
  // tubal rank 1 with a varying tube: a(i) b(j) c(k)
  const Eigen::VectorXd c = oracle::random_matrix(rng, 6, 1);
  Tensor3 z(5, 7, 6);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 6; ++k) z(i, j, k) = a(i) * b(j) * c(k);
  EXPECT_LT(diff_norm(tsvd_lowrank(z, 1), z) / z.frobenius(), 1e-10);
}

TEST(Tsvd, MatchesPerSliceOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 z = random_tensor(rng, 4, 5, 3);
    const Tensor3 r = tsvd_lowrank(z, 2);
    const auto zs = oracle::dft_slices(z.data, 4, 5, 3);
    const auto rs = oracle::dft_slices(r.data, 4, 5, 3);
    double tail = 0.0;
    for (std::size_t f = 0; f < 3; ++f) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(zs[f], Eigen::ComputeFullU | Eigen::ComputeFullV);
      const Eigen::MatrixXcd best =
          svd.matrixU().leftCols(2) * svd.singularValues().head(2).asDiagonal() * svd.matrixV().leftCols(2).adjoint();
      EXPECT_LT((rs[f] - best).norm(), 1e-10 * std::max(1.0, best.norm()));
      tail += svd.singularValues().tail(svd.singularValues().size() - 2).squaredNorm();
    }
    // Parseval: |Z - Zr|^2 = (1/d) sum_f |Zf - Zrf|^2
    EXPECT_NEAR(diff_norm(z, r), std::sqrt(tail / 3.0), 1e-10);
  }
}

TEST(Tsvd, MonotoneInRank) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 z = random_tensor(rng, 5, 6, 4);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r <= 5; ++r) {
      const double e = diff_norm(tsvd_lowrank(z, r), z);
      EXPECT_LE(e, prev + 1e-12);
      prev = e;
    }
    EXPECT_LT(prev, 1e-10 * z.frobenius());
  }
}

TEST(Tsvd, OutputIsReal) {
  std::mt19937_64 rng(5);
  const Tensor3 z = random_tensor(rng, 4, 6, 7);
  const Tensor3 r = tsvd_lowrank(z, 2);
  // inverse DFT of the oracle slices of r has no imaginary part left
  const auto rs = oracle::dft_slices(r.data, 4, 6, 7);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 7; ++k) {
        std::complex<double> s = 0.0;
        for (int f = 0; f < 7; ++f) s += rs[f](i, j) * std::polar(1.0, 2.0 * std::numbers::pi * f * k / 7);
        s /= 7.0;
        EXPECT_LT(std::abs(s.imag()), 1e-9);
      }
}

TEST(Tsvd, Errors) {
  std::mt19937_64 rng(6);
  const Tensor3 z = random_tensor(rng, 3, 4, 2);
  EXPECT_THROW(tsvd_lowrank(z, 0), Error);
  EXPECT_THROW(tsvd_lowrank(z, 4), Error);
}

TEST(Reproject, UnmodifiedEmbeddingGivesCube) {
  const HyperCube cube = random_cube(7, 6, 5, 8);
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 6;
  const TrajectoryTensor t = embed(cube, cfg);
  const FeatureStack back = reproject(t.z, t.index_map, 7, 6);
  for (std::size_t p = 0; p < cube.pixels(); ++p)
    for (std::size_t b = 0; b < 5; ++b) EXPECT_NEAR(back.at(p, b), cube.sample(p, b), 1e-15);
}

TEST(Reproject, MatchesAccumulateOracle) {
  std::mt19937_64 rng(9);
  const std::size_t rows = 4, cols = 5, n = 20, l = 3, d = 4;
  const Tensor3 z = random_tensor(rng, l, n, d);
  std::vector<std::size_t> map(l * n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t p = 0; p < n; ++p) {
    map[p] = p;
    for (std::size_t k = 1; k < l; ++k) map[k * n + p] = pick(rng);
  }
  const FeatureStack got = reproject(z, map, rows, cols);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t b = 0; b < d; ++b) {
      double sum = 0.0;
      int hits = 0;
      for (std::size_t k = 0; k < l; ++k)
        for (std::size_t p = 0; p < n; ++p)
          if (map[k * n + p] == s) {
            sum += z(k, p, b);
            ++hits;
          }
      EXPECT_NEAR(got.at(s, b), sum / hits, 1e-12);
    }
  std::vector<std::size_t> missing(l * n, 0);
  EXPECT_THROW(reproject(z, missing, rows, cols), Error);
  EXPECT_THROW(reproject(z, map, rows, cols + 1), Error);
}

TEST(TensorSsa, ShapeAndNoiseFreeMeans) {
  const PhantomSpec spec = standard_phantom_spec(24, 24, 16, 0.0, 0.0, 3);
  const Phantom ph = make_phantom(spec);
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 8;
  const FeatureStack f = tensorssa_extract(ph.cube, cfg);
  EXPECT_EQ(f.rows(), 24u);
  EXPECT_EQ(f.cols(), 24u);
  EXPECT_EQ(f.dim(), 16u);
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<double> mean(16, 0.0);
    std::size_t n = 0;
    for (std::size_t p = 0; p < f.pixels(); ++p) {
      if (ph.classes[p] != k) continue;
      ++n;
      for (std::size_t b = 0; b < 16; ++b) mean[b] += f.at(p, b);
    }
    for (std::size_t b = 0; b < 16; ++b) {
      const double truth = spec.class_spectra[k][b];
      EXPECT_LE(std::abs(mean[b] / n - truth), 0.02 * truth);
    }
  }
}

TEST(TensorSsa, ReducesNoise) {
  const Phantom ph = make_phantom(standard_phantom_spec(32, 32, 16, 0.05, 0.0, 5));
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 8;
  const FeatureStack f = tensorssa_extract(ph.cube, cfg);
  EXPECT_LT(within_class_variance(f, ph.truth), within_class_variance(to_features(ph.cube), ph.truth));
}

TEST(TensorSsa, TransposeEquivariant) {
  const HyperCube cube = random_cube(7, 9, 6, 12);
  // transpose the cube
  std::vector<float> data(cube.data().size());
  for (std::size_t b = 0; b < 6; ++b)
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 9; ++c) data[b * 63 + c * 7 + r] = cube.at(r, c, b);
  const HyperCube t(9, 7, cube.wavelengths(), data);
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 5;
  const FeatureStack a = transpose(tensorssa_extract(cube, cfg));
  const FeatureStack b = tensorssa_extract(t, cfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  EXPECT_LT(worst, 1e-9);
}

TEST(TensorSsa, ZScoreVariant) {
  const HyperCube cube = random_cube(6, 6, 5, 1);
  const RowMatrix z = unit_spectra(cube, SpectrumNorm::kZScore);
  for (Eigen::Index p = 0; p < z.rows(); ++p) {
    EXPECT_NEAR(z.row(p).mean(), 0.0, 1e-12);
    EXPECT_NEAR(z.row(p).squaredNorm() / 5.0, 1.0, 1e-12);
  }
  TssaConfig cfg;
  cfg.u = 2;
  cfg.l = 4;
  cfg.norm = SpectrumNorm::kZScore;
  EXPECT_EQ(tensorssa_extract(cube, cfg).dim(), 5u);
}
