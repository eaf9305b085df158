#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hsi/error.hpp"

namespace hsi {

/// Pixel indices (row-major within a patch) with a binary class per index.
struct LabeledSet {
  std::vector<std::size_t> indices;
  std::vector<std::uint8_t> labels;

  std::size_t size() const noexcept { return indices.size(); }

  std::size_t count(std::uint8_t label) const noexcept {
    std::size_t n = 0;
    for (auto l : labels) n += (l == label);
    return n;
  }

  /// Checks uniqueness, binary labels, bounds and (optionally) that both
  /// classes are present.
  void validate(std::size_t pixel_count, bool need_both_classes = true) const {
    require(indices.size() == labels.size(), ErrorCode::kSizeMismatch, "labeled set index/label count differ");
    std::unordered_set<std::size_t> seen;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      require(indices[i] < pixel_count, ErrorCode::kOutOfRange,
              "labeled pixel index " + std::to_string(indices[i]) + " out of range");
      require(seen.insert(indices[i]).second, ErrorCode::kInvalidArgument, "duplicate labeled pixel index");
      require(labels[i] <= 1, ErrorCode::kOutOfRange, "labels must be 0 or 1");
    }
    if (need_both_classes) {
      require(count(0) > 0 && count(1) > 0, ErrorCode::kMissingClass, "labeled set lacks one of the classes");
    }
  }
};

}  // namespace hsi
