#pragma once

// Self-training k-NN classifier and the k-NN / linear SVM baselines.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/features.hpp"
#include "hsi/labeled_set.hpp"
#include "hsi/metrics.hpp"
#include "hsi/parallel.hpp"

namespace hsi {

namespace detail {

/// Unbiased integer in [0, bound) by rejection; portable across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Per class, ceil(fraction * class size) pixels drawn without replacement.
/// Output lists class 0 then class 1, each in ascending pixel order.
inline LabeledSet sample_labels(const LabelMap& gt, double fraction, std::uint64_t seed) {
  require(fraction > 0.0 && fraction <= 1.0, ErrorCode::kInvalidArgument, "label fraction must lie in (0, 1]");
  LabeledSet out;
  std::mt19937_64 engine(seed);
  for (std::uint8_t label : {kNonCancer, kCancer}) {
    std::vector<std::size_t> pool;
    for (std::size_t p = 0; p < gt.pixels(); ++p) {
      if (gt[p] == label) pool.push_back(p);
    }
    require(!pool.empty(), ErrorCode::kMissingClass,
            "class " + std::to_string(label) + " absent from the patch");
    // The small slack keeps exact products such as 0.01 * 300 from rounding up.
    const auto want = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(pool.size()) - 1e-9));
    const std::size_t take = std::clamp<std::size_t>(want, 1, pool.size());
    for (std::size_t i = 0; i < take; ++i) {
      const std::size_t j = i + detail::bounded(engine, pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    std::sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    for (std::size_t i = 0; i < take; ++i) {
      out.indices.push_back(pool[i]);
      out.labels.push_back(label);
    }
  }
  return out;
}

struct KnnResult {
  std::vector<std::uint8_t> labels;
  std::vector<double> confidences;
};

/// Euclidean k-NN majority vote. Distance ties go to the lower training row,
/// vote ties to class 0; confidence is the winning share of the k votes.
inline KnnResult knn_predict(const RowMatrix& train, std::span<const std::uint8_t> train_labels,
                             const RowMatrix& query, std::size_t k) {
  require(train.rows() > 0, ErrorCode::kEmptyInput, "k-NN needs a nonempty training set");
  require(static_cast<std::size_t>(train.rows()) == train_labels.size(), ErrorCode::kSizeMismatch,
          "training rows and labels differ in count");
  require(train.cols() == query.cols(), ErrorCode::kDimensionMismatch, "training and query dimensions differ");
  require(k >= 1 && k <= train_labels.size(), ErrorCode::kInvalidArgument, "k must lie in [1, training size]");
  const std::size_t nq = static_cast<std::size_t>(query.rows());
  KnnResult out{std::vector<std::uint8_t>(nq), std::vector<double>(nq)};
  parallel_for(nq, [&](std::size_t q) {
    const Eigen::VectorXd dist = (train.rowwise() - query.row(static_cast<Eigen::Index>(q))).rowwise().squaredNorm();
    std::vector<std::pair<double, std::size_t>> order(train_labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = {dist[static_cast<Eigen::Index>(i)], i};
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
    std::size_t ones = 0;
    for (std::size_t i = 0; i < k; ++i) ones += train_labels[order[i].second] == kCancer;
    const bool positive = 2 * ones > k;
    out.labels[q] = positive ? kCancer : kNonCancer;
    out.confidences[q] = static_cast<double>(positive ? ones : k - ones) / static_cast<double>(k);
  });
  return out;
}

struct SslConfig {
  std::size_t k = 5;
  double tau = 0.9;
  std::size_t max_rounds = 10;
  std::size_t batch_cap = 0;  // 0 = unlimited

  void validate() const {
    require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
    require(tau > 0.0 && tau <= 1.0, ErrorCode::kInvalidArgument, "tau must lie in (0, 1]");
    require(max_rounds >= 1, ErrorCode::kInvalidArgument, "max_rounds must be >= 1");
  }
};

/// k actually used for a pool: never more neighbours than the smaller class
/// holds, so a lone seed of one class can still win its own neighbourhood.
inline std::size_t effective_k(std::size_t k, const LabeledSet& pool) {
  return std::max<std::size_t>(1, std::min({k, pool.count(kNonCancer), pool.count(kCancer)}));
}

struct SelfTrainResult {
  LabelMap labels;
  std::vector<std::size_t> pool_sizes;  // before round 1, then after every round
  std::size_t pseudo_labeled = 0;
};

inline SelfTrainResult self_train(const FeatureStack& features, const LabeledSet& seeds, const SslConfig& config) {
  config.validate();
  const std::size_t n = features.pixels();
  seeds.validate(n);
  std::vector<int> state(n, -1);  // -1 unlabeled, otherwise the pooled label
  for (std::size_t i = 0; i < seeds.size(); ++i) state[seeds.indices[i]] = seeds.labels[i];

  auto pool_set = [&] {
    LabeledSet pool;
    for (std::size_t p = 0; p < n; ++p) {
      if (state[p] >= 0) {
        pool.indices.push_back(p);
        pool.labels.push_back(static_cast<std::uint8_t>(state[p]));
      }
    }
    return pool;
  };
  auto predict = [&](const LabeledSet& pool, const std::vector<std::size_t>& targets) {
    const RowMatrix train = gather_rows(features, pool.indices);
    const RowMatrix query = gather_rows(features, targets);
    return knn_predict(train, pool.labels, query, effective_k(config.k, pool));
  };

  SelfTrainResult out{LabelMap(features.rows(), features.cols()), {seeds.size()}, 0};
  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    std::vector<std::size_t> unlabeled;
    for (std::size_t p = 0; p < n; ++p) {
      if (state[p] < 0) unlabeled.push_back(p);
    }
    if (unlabeled.empty()) break;
    const auto pred = predict(pool_set(), unlabeled);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < unlabeled.size(); ++i) {
      if (pred.confidences[i] >= config.tau) chosen.push_back(i);
    }
    if (chosen.empty()) break;
    if (config.batch_cap > 0 && chosen.size() > config.batch_cap) {
      std::stable_sort(chosen.begin(), chosen.end(),
                       [&](std::size_t a, std::size_t b) { return pred.confidences[a] > pred.confidences[b]; });
      chosen.resize(config.batch_cap);
    }
    for (std::size_t i : chosen) state[unlabeled[i]] = pred.labels[i];
    out.pseudo_labeled += chosen.size();
    out.pool_sizes.push_back(out.pool_sizes.back() + chosen.size());
  }

  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < n; ++p) {
    if (state[p] < 0) rest.push_back(p);
  }
  if (!rest.empty()) {
    const auto pred = predict(pool_set(), rest);
    for (std::size_t i = 0; i < rest.size(); ++i) state[rest[i]] = pred.labels[i];
  }
  for (std::size_t p = 0; p < n; ++p) out.labels.set(p, static_cast<std::uint8_t>(state[p]));
  return out;
}

struct LinearModel {
  Eigen::VectorXd w;
  double b = 0.0;

  double decision(const Eigen::Ref<const Eigen::RowVectorXd>& x) const { return x.dot(w) + b; }
};

struct SvmConfig {
  double lambda = 1e-3;
  std::size_t epochs = 20;

  void validate() const {
    require(std::isfinite(lambda) && lambda > 0.0, ErrorCode::kInvalidArgument, "svm lambda must be > 0");
    require(epochs >= 1, ErrorCode::kInvalidArgument, "svm epochs must be >= 1");
  }
};

/// Hinge loss + (lambda/2)|w|^2 by seeded stochastic subgradient descent with
/// step 1/(lambda t). The bias rides along as a weight on a constant feature.
/// Returns the average of all iterates.
inline LinearModel linear_svm_fit(const RowMatrix& x, std::span<const std::uint8_t> labels, double lambda,
                                  std::size_t epochs, std::uint64_t seed) {
  SvmConfig{lambda, epochs}.validate();
  const auto n = static_cast<std::size_t>(x.rows());
  require(n == labels.size() && n > 0, ErrorCode::kSizeMismatch, "svm rows and labels differ in count");
  std::size_t ones = 0;
  for (auto l : labels) ones += l == kCancer;
  require(ones > 0 && ones < n, ErrorCode::kMissingClass, "svm needs both classes");

  const Eigen::Index dim = x.cols() + 1;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim), avg = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd xi(dim);
  const double radius = 1.0 / std::sqrt(lambda);
  std::mt19937_64 engine(seed);
  const std::size_t steps = epochs * n;
  for (std::size_t t = 1; t <= steps; ++t) {
    const std::size_t i = detail::bounded(engine, n);
    xi.head(x.cols()) = x.row(static_cast<Eigen::Index>(i)).transpose();
    xi[x.cols()] = 1.0;
    const double y = labels[i] == kCancer ? 1.0 : -1.0;
    const double eta = 1.0 / (lambda * static_cast<double>(t));
    const bool violated = y * w.dot(xi) < 1.0;
    w *= 1.0 - eta * lambda;
    if (violated) w += eta * y * xi;
    const double norm = w.norm();
    if (norm > radius) w *= radius / norm;
    avg += (w - avg) / static_cast<double>(t);
  }
  return {avg.head(x.cols()), avg[x.cols()]};
}

enum class Method { kSsl, kKnn, kSvm };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::kSsl: return "ssl";
    case Method::kKnn: return "knn";
    case Method::kSvm: return "svm";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "ssl") return Method::kSsl;
  if (s == "knn") return Method::kKnn;
  if (s == "svm") return Method::kSvm;
  fail(ErrorCode::kInvalidArgument, "unknown classifier '" + s + "' (expected ssl, knn or svm)");
}

struct ClassifyConfig {
  Method method = Method::kSsl;
  double fraction = 0.01;
  std::uint64_t seed = 0;
  SslConfig ssl;
  SvmConfig svm;
};

struct PatchResult {
  LabelMap prediction;
  ConfusionCounts counts;
  LabeledSet training;
};

/// Predicts every pixel of the patch from `training` and scores the labeled
/// ground-truth pixels that were not used for training.
inline PatchResult classify_with_labels(const FeatureStack& features, const LabelMap& gt, const LabeledSet& training,
                                        const ClassifyConfig& config) {
  require(features.rows() == gt.rows() && features.cols() == gt.cols(), ErrorCode::kDimensionMismatch,
          "features and ground truth sizes differ");
  training.validate(features.pixels());
  const std::size_t n = features.pixels();
  LabelMap pred(features.rows(), features.cols());

  switch (config.method) {
    case Method::kSsl:
      pred = self_train(features, training, config.ssl).labels;
      break;
    case Method::kKnn: {
      config.ssl.validate();
      const auto result = knn_predict(gather_rows(features, training.indices), training.labels, features.matrix(),
                                      effective_k(config.ssl.k, training));
      for (std::size_t p = 0; p < n; ++p) pred.set(p, result.labels[p]);
      for (std::size_t i = 0; i < training.size(); ++i) pred.set(training.indices[i], training.labels[i]);
      break;
    }
    case Method::kSvm: {
      const FeatureStack scaled = minmax_scale(features);
      const auto model = linear_svm_fit(gather_rows(scaled, training.indices), training.labels, config.svm.lambda,
                                        config.svm.epochs, config.seed);
      const auto rows = scaled.matrix();
      for (std::size_t p = 0; p < n; ++p) {
        pred.set(p, model.decision(rows.row(static_cast<Eigen::Index>(p))) > 0.0 ? kCancer : kNonCancer);
      }
      break;
    }
  }

  std::vector<std::uint8_t> mask(n, 1);
  for (std::size_t p : training.indices) mask[p] = 0;
  bool any = false;
  for (std::size_t p = 0; p < n; ++p) any = any || (mask[p] && gt[p] != kUnlabeled);
  require(any, ErrorCode::kEmptyInput, "every labeled pixel was used for training; nothing left to evaluate");
  const ConfusionCounts counts = confusion(pred, gt, mask);
  return {std::move(pred), counts, training};
}

inline PatchResult classify_patch(const FeatureStack& features, const LabelMap& gt, const ClassifyConfig& config) {
  return classify_with_labels(features, gt, sample_labels(gt, config.fraction, config.seed), config);
}

}  // namespace hsi
