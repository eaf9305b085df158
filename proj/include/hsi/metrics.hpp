#pragma once

// Confusion-count metrics, micro/macro aggregation, annotation fusion and the
// Wilcoxon rank-sum test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"

namespace hsi {

struct ConfusionCounts {
  std::uint64_t tp = 0, tn = 0, fp = 0, fn = 0;

  std::uint64_t total() const noexcept { return tp + tn + fp + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) noexcept {
    tp += o.tp;
    tn += o.tn;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  bool operator==(const ConfusionCounts&) const = default;
};

/// Empty optionals mark ratios whose denominator is zero.
struct MetricsReport {
  std::optional<double> se, sp, bacc, f1, iou, prec;
};

inline constexpr std::array<const char*, 6> kMetricNames = {"SE", "SP", "BACC", "F1", "IoU", "PREC"};

inline std::array<std::optional<double>, 6> metric_values(const MetricsReport& r) {
  return {r.se, r.sp, r.bacc, r.f1, r.iou, r.prec};
}

/// Counts over pixels with a nonzero mask entry; class 1 is positive. Pixels
/// whose ground truth is unlabeled are skipped.
inline ConfusionCounts confusion(const LabelMap& pred, const LabelMap& gt, std::span<const std::uint8_t> mask) {
  require(pred.rows() == gt.rows() && pred.cols() == gt.cols(), ErrorCode::kDimensionMismatch,
          "prediction and ground truth sizes differ");
  require(mask.size() == gt.pixels(), ErrorCode::kDimensionMismatch, "mask size differs from label map");
  ConfusionCounts c;
  bool any = false;
  for (std::size_t p = 0; p < gt.pixels(); ++p) {
    if (!mask[p] || gt[p] == kUnlabeled) continue;
    any = true;
    const bool truth = gt[p] == kCancer;
    const bool guess = pred[p] == kCancer;
    if (truth && guess) ++c.tp;
    else if (truth) ++c.fn;
    else if (guess) ++c.fp;
    else ++c.tn;
  }
  require(any, ErrorCode::kEmptyInput, "no evaluated pixel");
  return c;
}

inline ConfusionCounts confusion(const LabelMap& pred, const LabelMap& gt) {
  const std::vector<std::uint8_t> all(gt.pixels(), 1);
  return confusion(pred, gt, all);
}

inline MetricsReport metrics(const ConfusionCounts& c) {
  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  MetricsReport r;
  r.se = ratio(c.tp, c.tp + c.fn);
  r.sp = ratio(c.tn, c.tn + c.fp);
  if (r.se && r.sp) r.bacc = (*r.se + *r.sp) / 2.0;
  r.f1 = ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn);
  r.iou = ratio(c.tp, c.tp + c.fn + c.fp);
  r.prec = ratio(c.tp, c.tp + c.fp);
  return r;
}

inline MetricsReport micro_aggregate(std::span<const ConfusionCounts> counts) {
  require(!counts.empty(), ErrorCode::kEmptyInput, "micro aggregation of an empty list");
  ConfusionCounts pooled;
  for (const auto& c : counts) pooled += c;
  return metrics(pooled);
}

struct MacroStat {
  double mean = 0.0;
  double std = 0.0;     // sample (n - 1) standard deviation, 0 when count == 1
  std::size_t count = 0;  // defined entries; mean/std are meaningless when 0
};

struct MacroReport {
  std::array<MacroStat, 6> stats;  // ordered as kMetricNames
};

inline MacroReport macro_aggregate(std::span<const MetricsReport> reports) {
  require(!reports.empty(), ErrorCode::kEmptyInput, "macro aggregation of an empty list");
  MacroReport out;
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<double> v;
    for (const auto& r : reports) {
      if (const auto x = metric_values(r)[k]) v.push_back(*x);
    }
    MacroStat& s = out.stats[k];
    s.count = v.size();
    if (v.empty()) continue;
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    if (v.size() > 1) {
      double ss = 0.0;
      for (double x : v) ss += (x - s.mean) * (x - s.mean);
      s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
  }
  return out;
}

/// Per-pixel modal label over an odd number (>= 3) of binary maps.
inline LabelMap majority_vote(std::span<const LabelMap> maps) {
  require(maps.size() >= 3 && maps.size() % 2 == 1, ErrorCode::kInvalidArgument,
          "majority vote needs an odd number (>= 3) of maps");
  const LabelMap& first = maps.front();
  for (const auto& m : maps) {
    require(m.rows() == first.rows() && m.cols() == first.cols(), ErrorCode::kDimensionMismatch,
            "label maps differ in size");
  }
  LabelMap out(first.rows(), first.cols());
  for (std::size_t p = 0; p < first.pixels(); ++p) {
    std::size_t ones = 0;
    for (const auto& m : maps) {
      require(m[p] == kNonCancer || m[p] == kCancer, ErrorCode::kInvalidArgument,
              "majority vote input contains a non-binary label");
      ones += m[p] == kCancer;
    }
    out.set(p, 2 * ones > maps.size() ? kCancer : kNonCancer);
  }
  return out;
}

/// Fleiss' kappa for `ratings[item][rater]` (any integer category, negative =
/// missing and rejected). Returns 1 for fully unanimous single-category data.
inline double fleiss_kappa(const std::vector<std::vector<int>>& ratings) {
  require(!ratings.empty(), ErrorCode::kEmptyInput, "kappa needs at least one item");
  const std::size_t m = ratings.front().size();
  require(m >= 2, ErrorCode::kInvalidArgument, "kappa needs at least two raters");
  std::map<int, std::size_t> category_totals;
  double p_bar = 0.0;
  for (const auto& item : ratings) {
    require(item.size() == m, ErrorCode::kSizeMismatch, "every item needs the same number of ratings");
    std::map<int, std::size_t> counts;
    for (int r : item) {
      require(r >= 0, ErrorCode::kInvalidArgument, "missing rating");
      ++counts[r];
      ++category_totals[r];
    }
    double agree = 0.0;
    for (const auto& [cat, n] : counts) agree += static_cast<double>(n) * static_cast<double>(n - 1);
    p_bar += agree / (static_cast<double>(m) * static_cast<double>(m - 1));
  }
  const double items = static_cast<double>(ratings.size());
  p_bar /= items;
  double p_e = 0.0;
  for (const auto& [cat, n] : category_totals) {
    const double pj = static_cast<double>(n) / (items * static_cast<double>(m));
    p_e += pj * pj;
  }
  if (p_e >= 1.0) return 1.0;
  return (p_bar - p_e) / (1.0 - p_e);
}

/// Agreement band. Each band is closed at its upper endpoint, and values
/// between two stated bands (e.g. 0.205) go to the higher one.
inline std::string kappa_band(double kappa) {
  require(std::isfinite(kappa) && kappa <= 1.0 + 1e-12, ErrorCode::kOutOfRange, "kappa must be finite and <= 1");
  if (kappa < 0.0) return "poor";
  if (kappa <= 0.20) return "slight";
  if (kappa <= 0.40) return "fair";
  if (kappa <= 0.60) return "moderate";
  if (kappa <= 0.80) return "substantial";
  return "almost perfect";
}

struct RankSumResult {
  double statistic = 0.0;  // rank sum of the first sample (midranks)
  double u = 0.0;          // statistic - n(n+1)/2
  double z = 0.0;          // continuity-corrected normal score (0 when exact)
  double p_value = 1.0;    // two-sided
  bool exact = false;
};

namespace detail {

struct Ranking {
  std::vector<double> ranks;  // midranks of a ++ b
  double tie_term = 0.0;      // sum of t^3 - t over tie groups
};

inline Ranking midranks(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() + b.size();
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return all[x] < all[y]; });
  Ranking out;
  out.ranks.resize(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && all[order[j + 1]] == all[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) out.ranks[order[k]] = rank;
    const double t = static_cast<double>(j - i + 1);
    out.tie_term += t * t * t - t;
    i = j + 1;
  }
  return out;
}

/// Number of size-k subsets of {1..n} per rank sum, index = sum.
inline std::vector<double> subset_sum_counts(std::size_t k, std::size_t n) {
  const std::size_t max_sum = n * (n + 1) / 2;
  std::vector<std::vector<double>> dp(k + 1, std::vector<double>(max_sum + 1, 0.0));
  dp[0][0] = 1.0;
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t c = std::min(k, v); c >= 1; --c) {
      for (std::size_t s = max_sum; s >= v; --s) dp[c][s] += dp[c - 1][s - v];
    }
  }
  return dp[k];
}

}  // namespace detail

/// Two-sided exact p of an untied rank sum `w` for a sample of size n against m.
inline double ranksum_exact_p(double w, std::size_t n, std::size_t m) {
  const auto counts = detail::subset_sum_counts(n, n + m);
  const auto wi = static_cast<std::size_t>(std::llround(w));
  double lo = 0.0, hi = 0.0, total = 0.0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    total += counts[s];
    if (s <= wi) lo += counts[s];
    if (s >= wi) hi += counts[s];
  }
  return std::min(1.0, 2.0 * std::min(lo, hi) / total);
}

/// Continuity-corrected normal approximation with tie-corrected variance.
inline std::pair<double, double> ranksum_normal(double u, std::size_t n, std::size_t m, double tie_term) {
  const double nn = static_cast<double>(n), mm = static_cast<double>(m), total = nn + mm;
  const double variance = nn * mm / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (variance <= 0.0) return {0.0, 1.0};
  const double z = std::max(0.0, std::abs(u - nn * mm / 2.0) - 0.5) / std::sqrt(variance);
  const double p = std::erfc(z / std::sqrt(2.0));
  return {z, std::clamp(p, std::numeric_limits<double>::min(), 1.0)};
}

inline RankSumResult wilcoxon_ranksum(std::span<const double> a, std::span<const double> b) {
  require(!a.empty() && !b.empty(), ErrorCode::kEmptyInput, "rank-sum test needs two nonempty samples");
  for (double v : a) require(std::isfinite(v), ErrorCode::kNonFiniteSample, "non-finite sample");
  for (double v : b) require(std::isfinite(v), ErrorCode::kNonFiniteSample, "non-finite sample");
  const std::size_t n = a.size(), m = b.size();
  const auto ranking = detail::midranks(a, b);
  RankSumResult r;
  r.statistic = std::accumulate(ranking.ranks.begin(), ranking.ranks.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  r.u = r.statistic - static_cast<double>(n) * static_cast<double>(n + 1) / 2.0;
  if (std::min(n, m) <= 8 && ranking.tie_term == 0.0) {
    r.exact = true;
    // Enumerate over the smaller sample; the two-sided p is symmetric.
    const double total = static_cast<double>(n + m) * static_cast<double>(n + m + 1) / 2.0;
    r.p_value = n <= m ? ranksum_exact_p(r.statistic, n, m) : ranksum_exact_p(total - r.statistic, m, n);
  } else {
    std::tie(r.z, r.p_value) = ranksum_normal(r.u, n, m, ranking.tie_term);
  }
  return r;
}

}  // namespace hsi
