#include "spinerl/label_volume.hpp"

#include <stdexcept>

namespace spinerl {

const std::array<std::string, kNumLabels>& label_names() {
  static const std::array<std::string, kNumLabels> names = {
      "Air", "Free", "Preserve", "Cortical", "Cancellous", "NoGo"};
  return names;
}

LabelVolume::LabelVolume(std::array<int, 3> dims, double spacing_mm, Vec3 origin_mm,
                         std::vector<std::uint8_t> labels)
    : dims_(dims), spacing_(spacing_mm), origin_(origin_mm), labels_(std::move(labels)) {
  if (dims_[0] < 1 || dims_[1] < 1 || dims_[2] < 1)
    throw std::invalid_argument("LabelVolume: dims must all be >= 1");
  if (!(spacing_ > 0.0)) throw std::invalid_argument("LabelVolume: spacing must be > 0");
  const std::int64_t n = static_cast<std::int64_t>(dims_[0]) * dims_[1] * dims_[2];
  if (static_cast<std::int64_t>(labels_.size()) != n)
    throw std::invalid_argument("LabelVolume: label payload size does not match dims");

  for (int l = 0; l < kNumLabels; ++l) {
    boxes_[l].lo = {dims_[0], dims_[1], dims_[2]};
    boxes_[l].hi = {-1, -1, -1};
  }
  std::int64_t idx = 0;
  for (int k = 0; k < dims_[2]; ++k) {
    for (int j = 0; j < dims_[1]; ++j) {
      for (int i = 0; i < dims_[0]; ++i, ++idx) {
        const std::uint8_t v = labels_[idx];
        if (v >= kNumLabels) throw std::invalid_argument("LabelVolume: unknown label value");
        ++counts_[v];
        IndexBox& b = boxes_[v];
        b.lo = {std::min(b.lo[0], i), std::min(b.lo[1], j), std::min(b.lo[2], k)};
        b.hi = {std::max(b.hi[0], i), std::max(b.hi[1], j), std::max(b.hi[2], k)};
      }
    }
  }
}

}  // namespace spinerl
