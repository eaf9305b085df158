#pragma once

// Principle-of-Relevant-Information features: Parzen information potentials,
// the PRI cost and its safeguarded fixed-point solver, the per-pixel sliding
// window scan, regularized LDA, and the multiscale / multilayer stack.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/features.hpp"
#include "hsi/labeled_set.hpp"
#include "hsi/parallel.hpp"

namespace hsi {

struct PriConfig {
  double beta = 2.0;
  double sigma2 = 0.3;
  std::size_t max_iter = 30;
  double tol = 1e-4;

  void validate() const {
    require(std::isfinite(beta) && beta >= 0.0, ErrorCode::kInvalidArgument, "beta must be >= 0");
    require(std::isfinite(sigma2) && sigma2 > 0.0, ErrorCode::kInvalidArgument, "sigma2 must be > 0");
    require(std::isfinite(tol) && tol > 0.0, ErrorCode::kInvalidArgument, "tol must be > 0");
  }
};

struct MpriConfig {
  std::vector<std::size_t> scales{3, 7, 11};
  std::size_t layers = 3;
  std::vector<double> betas{2.0, 2.0, 3.0};
  PriConfig pri;
  double rlda_gamma = 0.1;
  std::size_t rlda_dims = 1;
  bool include_raw = true;

  void validate() const {
    require(!scales.empty(), ErrorCode::kInvalidArgument, "at least one scale required");
    for (auto n : scales) {
      require(n >= 3 && n % 2 == 1, ErrorCode::kInvalidArgument, "scales must be odd and >= 3");
    }
    require(layers >= 1, ErrorCode::kInvalidArgument, "layers must be >= 1");
    require(betas.size() == layers, ErrorCode::kInvalidArgument, "need one beta per layer");
    for (double b : betas) require(std::isfinite(b) && b >= 0.0, ErrorCode::kInvalidArgument, "beta must be >= 0");
    pri.validate();
    require(std::isfinite(rlda_gamma) && rlda_gamma >= 0.0, ErrorCode::kInvalidArgument, "rlda_gamma must be >= 0");
    require(rlda_dims >= 1, ErrorCode::kInvalidArgument, "rlda_dims must be >= 1");
  }
};

// ---------------------------------------------------------------------------
// Parzen estimates

inline double gaussian_kernel(std::span<const double> u, double sigma2) {
  double sq = 0.0;
  for (double v : u) sq += v * v;
  return std::exp(-sq / (2.0 * sigma2));
}

/// Pairwise Gaussian kernel values G(a_i - b_j), N x M.
template <typename DA, typename DB>
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, double sigma2) {
  require(a.cols() == b.cols(), ErrorCode::kDimensionMismatch, "sample sets differ in dimension");
  const Eigen::ArrayXd na = a.rowwise().squaredNorm();
  const Eigen::VectorXd nb = b.rowwise().squaredNorm();
  Eigen::MatrixXd k = a * b.transpose();
  // -|a_i - b_j|^2 = 2 a_i.b_j - |a_i|^2 - |b_j|^2, clamped at 0 against
  // rounding. Column by column so the exponential stays vectorized.
  const double scale = 0.5 / sigma2;
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    k.col(j).array() = ((2.0 * k.col(j).array() - na - nb(j)).min(0.0) * scale).exp();
  }
  return k;
}

/// Mean pairwise kernel value (1/(N M)) sum_ij G(a_i - b_j).
template <typename DA, typename DB>
double information_potential(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, double sigma2) {
  require(a.rows() > 0 && b.rows() > 0, ErrorCode::kEmptyInput, "information potential of an empty set");
  return kernel_matrix(a, b, sigma2).mean();
}

/// Cauchy-Schwarz divergence estimate -2 log V(Y;X) + log V(Y) + log V(X).
template <typename DY, typename DX>
double cs_divergence(const Eigen::MatrixBase<DY>& y, const Eigen::MatrixBase<DX>& x, double sigma2) {
  return -2.0 * std::log(information_potential(y, x, sigma2)) + std::log(information_potential(y, y, sigma2)) +
         std::log(information_potential(x, x, sigma2));
}

/// -(1 - beta) log V(Y) - 2 beta log V(Y;X).
template <typename DY, typename DX>
double pri_objective(const Eigen::MatrixBase<DY>& y, const Eigen::MatrixBase<DX>& x, double beta, double sigma2) {
  return -(1.0 - beta) * std::log(information_potential(y, y, sigma2)) -
         2.0 * beta * std::log(information_potential(y, x, sigma2));
}

namespace detail {

struct PriState {
  Eigen::MatrixXd y;
  Eigen::MatrixXd kyy;
  Eigen::MatrixXd kyx;
  double vy = 0.0;
  double vyx = 0.0;
  double objective = 0.0;
};

inline PriState make_state(Eigen::MatrixXd y, const Eigen::MatrixXd& x, double beta, double sigma2) {
  PriState s;
  s.kyy = kernel_matrix(y, y, sigma2);
  s.kyx = kernel_matrix(y, x, sigma2);
  s.y = std::move(y);
  s.vy = s.kyy.mean();
  s.vyx = s.kyx.mean();
  s.objective = -(1.0 - beta) * std::log(s.vy) - 2.0 * beta * std::log(s.vyx);
  return s;
}

// Row weights of the two kernel sums in the gradient:
//   dJ/dy_i = (2 / sigma2) * [ wy (A_i y_i - (Kyy Y)_i) + wx (B_i y_i - (Kyx X)_i) ]
// with wy = (1 - beta) / (V(Y) N^2) and wx = beta / (V(Y;X) N M).
inline std::pair<double, double> gradient_weights(const PriState& s, Eigen::Index m, double beta) {
  const double n = static_cast<double>(s.y.rows());
  return {(1.0 - beta) / (s.vy * n * n), beta / (s.vyx * n * static_cast<double>(m))};
}

inline Eigen::MatrixXd gradient(const PriState& s, const Eigen::MatrixXd& x, double beta, double sigma2) {
  const auto [wy, wx] = gradient_weights(s, x.rows(), beta);
  const Eigen::VectorXd a = s.kyy.rowwise().sum();
  const Eigen::VectorXd b = s.kyx.rowwise().sum();
  const Eigen::VectorXd den = wy * a + wx * b;
  Eigen::MatrixXd g = s.y.array().colwise() * den.array();
  g -= wy * (s.kyy * s.y) + wx * (s.kyx * x);
  return (2.0 / sigma2) * g;
}

enum class StepKind { kFixedPoint, kGradient, kStalled };

// One safeguarded step.
//
// The stationarity update y_i' = num_i / den_i equals the gradient step
// y_i - eta_i grad_i with per-row eta_i = sigma2 / (2 den_i). It is taken as
// is when every denominator clears the floor and the objective does not rise.
// Otherwise the step is damped: rows with a positive, non-degenerate
// denominator keep eta_i, the remaining rows use a plain gradient step scaled
// to move at most one kernel width, and all step lengths are halved (at most
// 20 times) until the objective does not increase. If no trial succeeds the
// state is returned unchanged.
inline std::pair<PriState, StepKind> pri_step(const PriState& s, const Eigen::MatrixXd& x, double beta,
                                              double sigma2) {
  constexpr double kDenominatorFloor = 1e-12;
  constexpr double kObjectiveSlack = 1e-14;
  constexpr int kMaxHalvings = 20;

  const auto [wy, wx] = gradient_weights(s, x.rows(), beta);
  const Eigen::VectorXd a = s.kyy.rowwise().sum();
  const Eigen::VectorXd b = s.kyx.rowwise().sum();
  const Eigen::VectorXd den = wy * a + wx * b;
  const Eigen::MatrixXd num = wy * (s.kyy * s.y) + wx * (s.kyx * x);

  // The floor applies to the unscaled form p A_i + q B_i (p, q as in the
  // textbook update), which is den_i * N^2.
  const double scale = static_cast<double>(s.y.rows()) * static_cast<double>(s.y.rows());
  std::vector<bool> usable(static_cast<std::size_t>(den.size()));
  bool all_usable = true;
  for (Eigen::Index i = 0; i < den.size(); ++i) {
    usable[static_cast<std::size_t>(i)] = std::abs(den(i) * scale) >= kDenominatorFloor;
    all_usable = all_usable && usable[static_cast<std::size_t>(i)];
  }
  if (all_usable) {
    Eigen::MatrixXd candidate = num.array().colwise() / den.array();
    if (candidate.allFinite()) {
      PriState next = make_state(std::move(candidate), x, beta, sigma2);
      if (std::isfinite(next.objective) && next.objective <= s.objective + kObjectiveSlack) {
        return {std::move(next), StepKind::kFixedPoint};
      }
    }
  }

  // Per-row displacement at full length: the stationarity move where it is a
  // descent direction, otherwise a normalized negative gradient.
  const Eigen::MatrixXd grad = (2.0 / sigma2) * Eigen::MatrixXd(s.y.array().colwise() * den.array() - num.array());
  double max_plain = 0.0;
  for (Eigen::Index i = 0; i < den.size(); ++i) {
    if (!(usable[static_cast<std::size_t>(i)] && den(i) > 0.0)) max_plain = std::max(max_plain, grad.row(i).norm());
  }
  Eigen::MatrixXd move(s.y.rows(), s.y.cols());
  for (Eigen::Index i = 0; i < den.size(); ++i) {
    if (usable[static_cast<std::size_t>(i)] && den(i) > 0.0) {
      move.row(i) = num.row(i) / den(i) - s.y.row(i);
    } else {
      move.row(i) = max_plain > 0.0 ? Eigen::RowVectorXd(-std::sqrt(sigma2) / max_plain * grad.row(i))
                                    : Eigen::RowVectorXd::Zero(s.y.cols());
    }
  }
  if (move.allFinite() && move.squaredNorm() > 0.0) {
    double length = all_usable ? 0.5 : 1.0;
    for (int h = 0; h <= kMaxHalvings; ++h, length *= 0.5) {
      PriState next = make_state(s.y + length * move, x, beta, sigma2);
      if (std::isfinite(next.objective) && next.objective <= s.objective) {
        return {std::move(next), StepKind::kGradient};
      }
    }
  }
  return {s, StepKind::kStalled};
}

}  // namespace detail

/// Analytic gradient of pri_objective with respect to Y.
template <typename DY, typename DX>
Eigen::MatrixXd pri_gradient(const Eigen::MatrixBase<DY>& y, const Eigen::MatrixBase<DX>& x, double beta,
                             double sigma2) {
  require(y.cols() == x.cols(), ErrorCode::kDimensionMismatch, "Y and X differ in dimension");
  const Eigen::MatrixXd xm = x;
  return detail::gradient(detail::make_state(y, xm, beta, sigma2), xm, beta, sigma2);
}

/// One safeguarded update of Y toward a stationary point of the PRI cost.
template <typename DY, typename DX>
Eigen::MatrixXd pri_fixed_point_update(const Eigen::MatrixBase<DY>& y, const Eigen::MatrixBase<DX>& x, double beta,
                                       double sigma2) {
  require(y.cols() == x.cols(), ErrorCode::kDimensionMismatch, "Y and X differ in dimension");
  require(y.rows() > 0 && x.rows() > 0, ErrorCode::kEmptyInput, "empty sample set");
  const Eigen::MatrixXd xm = x;
  return detail::pri_step(detail::make_state(y, xm, beta, sigma2), xm, beta, sigma2).first.y;
}

struct PriResult {
  Eigen::MatrixXd y;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> objective;  // one entry per iterate, starting at Y = X
  std::size_t gradient_steps = 0;
};

/// Iterates from Y = X until the relative Frobenius change drops below tol or
/// max_iter updates have been made. Also stops (converged) when no trial step
/// lowers the objective, or when the objective has stayed flat to 1e-13
/// relative for 10 consecutive steps, i.e. it sits at its rounding floor.
inline PriResult pri_solve(const Eigen::MatrixXd& x, const PriConfig& config) {
  constexpr double kPlateau = 1e-13;
  constexpr int kPlateauSteps = 10;
  config.validate();
  require(x.rows() > 0, ErrorCode::kEmptyInput, "empty sample set");
  PriResult result;
  detail::PriState state = detail::make_state(x, x, config.beta, config.sigma2);
  result.objective.push_back(state.objective);
  int flat = 0;
  for (std::size_t it = 0; it < config.max_iter; ++it) {
    auto [next, kind] = detail::pri_step(state, x, config.beta, config.sigma2);
    ++result.iterations;
    if (kind == detail::StepKind::kGradient) ++result.gradient_steps;
    const double change = (next.y - state.y).norm();
    const double ref = std::max(state.y.norm(), std::numeric_limits<double>::min());
    const double drop = std::abs(state.objective - next.objective);
    flat = drop <= kPlateau * std::max(1.0, std::abs(next.objective)) ? flat + 1 : 0;
    state = std::move(next);
    result.objective.push_back(state.objective);
    if (kind == detail::StepKind::kStalled || change < config.tol * ref || flat >= kPlateauSteps) {
      result.converged = true;
      break;
    }
  }
  result.y = std::move(state.y);
  return result;
}

/// PRI representation of the centre pixel of an n x n patch (rows row-major).
inline std::vector<double> pri_patch(const Eigen::MatrixXd& patch, const PriConfig& config) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(patch.rows()))));
  require(n * n == static_cast<std::size_t>(patch.rows()) && n % 2 == 1, ErrorCode::kInvalidArgument,
          "patch rows must be n*n for odd n");
  const auto center = static_cast<Eigen::Index>((n / 2) * n + n / 2);
  const PriResult solved = pri_solve(patch, config);
  std::vector<double> out(static_cast<std::size_t>(patch.cols()));
  for (Eigen::Index k = 0; k < patch.cols(); ++k) out[static_cast<std::size_t>(k)] = solved.y(center, k);
  return out;
}

/// Mirror (reflect-101) index into [0, size).
inline std::size_t reflect_index(long i, std::size_t size) {
  const long n = static_cast<long>(size);
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return static_cast<std::size_t>(i);
}

/// Runs pri_patch on the mirror-padded n x n neighbourhood of every pixel.
inline FeatureStack pri_scale(const FeatureStack& input, std::size_t n, const PriConfig& config) {
  config.validate();
  require(n >= 1 && n % 2 == 1, ErrorCode::kInvalidArgument, "window size must be odd");
  require(n <= std::min(input.rows(), input.cols()), ErrorCode::kInvalidArgument,
          "window " + std::to_string(n) + " larger than image");
  const long half = static_cast<long>(n / 2);
  const std::size_t dim = input.dim();
  FeatureStack out(input.rows(), input.cols(), dim);
  parallel_for(input.pixels(), [&](std::size_t p) {
    const long r0 = static_cast<long>(p / input.cols());
    const long c0 = static_cast<long>(p % input.cols());
    Eigen::MatrixXd patch(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(dim));
    Eigen::Index row = 0;
    for (long dr = -half; dr <= half; ++dr) {
      const std::size_t r = reflect_index(r0 + dr, input.rows());
      for (long dc = -half; dc <= half; ++dc, ++row) {
        const std::size_t c = reflect_index(c0 + dc, input.cols());
        auto src = input.pixel(r, c);
        for (std::size_t k = 0; k < dim; ++k) patch(row, static_cast<Eigen::Index>(k)) = src[k];
      }
    }
    const auto center = pri_patch(patch, config);
    std::copy(center.begin(), center.end(), out.pixel(p).begin());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Regularized LDA

struct RldaProjection {
  Eigen::MatrixXd directions;  // D x k, unit columns

  std::size_t dims() const noexcept { return static_cast<std::size_t>(directions.cols()); }
};

/// Top generalized eigenvectors of (S_w + gamma I)^{-1} S_b for binary labels.
/// S_w is the pooled within-class covariance and S_b the prior-weighted
/// between-class scatter. The leading direction is oriented so class 1
/// projects above class 0.
inline RldaProjection rlda_fit(const Eigen::MatrixXd& samples, std::span<const std::uint8_t> labels, double gamma,
                               std::size_t dims) {
  require(static_cast<std::size_t>(samples.rows()) == labels.size(), ErrorCode::kSizeMismatch,
          "sample and label counts differ");
  require(std::isfinite(gamma) && gamma >= 0.0, ErrorCode::kInvalidArgument, "gamma must be >= 0");
  require(dims >= 1, ErrorCode::kInvalidArgument, "dims must be >= 1");
  const Eigen::Index d = samples.cols();
  std::size_t count[2] = {0, 0};
  Eigen::VectorXd mean[2] = {Eigen::VectorXd::Zero(d), Eigen::VectorXd::Zero(d)};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(labels[i] <= 1, ErrorCode::kOutOfRange, "rLDA labels must be 0 or 1");
    ++count[labels[i]];
    mean[labels[i]] += samples.row(static_cast<Eigen::Index>(i)).transpose();
  }
  require(count[0] >= 2 && count[1] >= 2, ErrorCode::kMissingClass, "rLDA needs at least 2 samples per class");
  for (int c = 0; c < 2; ++c) mean[c] /= static_cast<double>(count[c]);
  const double total = static_cast<double>(labels.size());
  const Eigen::VectorXd grand = (static_cast<double>(count[0]) * mean[0] + static_cast<double>(count[1]) * mean[1]) / total;

  Eigen::MatrixXd within = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Eigen::VectorXd centered = samples.row(static_cast<Eigen::Index>(i)).transpose() - mean[labels[i]];
    within.noalias() += centered * centered.transpose();
  }
  within /= (total - 2.0);
  Eigen::MatrixXd between = Eigen::MatrixXd::Zero(d, d);
  for (int c = 0; c < 2; ++c) {
    const Eigen::VectorXd diff = mean[c] - grand;
    between.noalias() += (static_cast<double>(count[c]) / total) * diff * diff.transpose();
  }

  Eigen::MatrixXd regularized = within + gamma * Eigen::MatrixXd::Identity(d, d);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spectrum(regularized, Eigen::EigenvaluesOnly);
    const double top = std::max(1.0, spectrum.eigenvalues().cwiseAbs().maxCoeff());
    require(spectrum.eigenvalues().minCoeff() > 1e-12 * top, ErrorCode::kInvalidArgument,
            "within-class scatter is singular; use gamma > 0");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(between, regularized);
  require(solver.info() == Eigen::Success, ErrorCode::kInvalidArgument, "rLDA eigen-decomposition failed");

  // Binary labels give at most one discriminant direction.
  const Eigen::Index keep = std::min<Eigen::Index>(static_cast<Eigen::Index>(dims), std::min<Eigen::Index>(1, d));
  RldaProjection proj;
  proj.directions.resize(d, keep);
  for (Eigen::Index k = 0; k < keep; ++k) {
    Eigen::VectorXd w = solver.eigenvectors().col(d - 1 - k);
    w.normalize();
    if (w.dot(mean[1] - mean[0]) < 0.0) w = -w;
    proj.directions.col(k) = w;
  }
  return proj;
}

inline FeatureStack rlda_apply(const RldaProjection& proj, const FeatureStack& features) {
  require(static_cast<std::size_t>(proj.directions.rows()) == features.dim(), ErrorCode::kDimensionMismatch,
          "projection and feature dimensions differ");
  FeatureStack out(features.rows(), features.cols(), proj.dims());
  out.matrix() = features.matrix() * proj.directions;
  return out;
}

/// First-layer PRI outputs (one stack per scale). They depend only on the
/// input, so callers sweeping label draws on a fixed image can compute them once.
inline std::vector<FeatureStack> mpri_first_layer(const FeatureStack& scaled_input, const MpriConfig& config) {
  config.validate();
  PriConfig pri = config.pri;
  pri.beta = config.betas.front();
  std::vector<FeatureStack> out;
  for (auto n : config.scales) out.push_back(pri_scale(scaled_input, n, pri));
  return out;
}

inline std::vector<FeatureStack> mpri_first_layer(const HyperCube& input, const MpriConfig& config) {
  return mpri_first_layer(minmax_scale(to_features(input)), config);
}

/// Multiscale multilayer PRI stack. Each layer runs PRI at every scale on the
/// (min-max scaled) layer input, reduces each scale with rLDA fitted on the
/// labeled pixels, and concatenates the reductions to form the next layer's
/// input. The result concatenates the scaled raw spectra (if enabled) and
/// every layer output.
inline FeatureStack mpri_extract(const HyperCube& input, const LabeledSet& labeled, const MpriConfig& config,
                                 const std::vector<FeatureStack>* first_layer = nullptr) {
  config.validate();
  labeled.validate(input.pixels());
  require(first_layer == nullptr || first_layer->size() == config.scales.size(), ErrorCode::kInvalidArgument,
          "cached first layer does not match the scale list");

  FeatureStack current = minmax_scale(to_features(input));
  std::vector<FeatureStack> blocks;
  if (config.include_raw) blocks.push_back(current);

  for (std::size_t layer = 0; layer < config.layers; ++layer) {
    PriConfig pri = config.pri;
    pri.beta = config.betas[layer];
    std::vector<FeatureStack> reduced;
    for (std::size_t s = 0; s < config.scales.size(); ++s) {
      FeatureStack pri_out = (layer == 0 && first_layer != nullptr) ? (*first_layer)[s]
                                                                     : pri_scale(current, config.scales[s], pri);
      const RldaProjection proj =
          rlda_fit(gather_rows(pri_out, labeled.indices), labeled.labels, config.rlda_gamma, config.rlda_dims);
      reduced.push_back(rlda_apply(proj, pri_out));
    }
    current = minmax_scale(concat(reduced));
    blocks.push_back(current);
  }
  return concat(blocks);
}

}  // namespace hsi
