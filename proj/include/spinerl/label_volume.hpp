#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinerl/geometry.hpp"

namespace spinerl {

// Anatomy groups. Values 0-5 are the on-disk encoding.
enum class Label : std::uint8_t {
  Air = 0,
  Free = 1,        // dissectable tissue (skin)
  Preserve = 2,    // tissue whose damage is penalized (muscle)
  Cortical = 3,
  Cancellous = 4,
  NoGo = 5,        // spinal canal / nerves
};

inline constexpr int kNumLabels = 6;

const std::array<std::string, kNumLabels>& label_names();

inline bool is_bone(Label l) {
  return l == Label::Cortical || l == Label::Cancellous;
}

// Sorted, unique linear voxel indices into a LabelVolume.
using VoxelSet = std::vector<std::int64_t>;

// Integer axis-aligned voxel-index box, inclusive on both ends.
struct IndexBox {
  std::array<int, 3> lo{0, 0, 0};
  std::array<int, 3> hi{-1, -1, -1};
  bool empty() const { return hi[0] < lo[0] || hi[1] < lo[1] || hi[2] < lo[2]; }
};

// Immutable labeled voxel grid. Voxel (i,j,k) has its center at
// origin + spacing * (i,j,k); storage is x-fastest.
class LabelVolume {
 public:
  LabelVolume(std::array<int, 3> dims, double spacing_mm, Vec3 origin_mm,
              std::vector<std::uint8_t> labels);

  int nx() const { return dims_[0]; }
  int ny() const { return dims_[1]; }
  int nz() const { return dims_[2]; }
  const std::array<int, 3>& dims() const { return dims_; }
  double spacing() const { return spacing_; }
  const Vec3& origin() const { return origin_; }
  std::int64_t size() const { return static_cast<std::int64_t>(labels_.size()); }

  bool in_bounds(int i, int j, int k) const {
    return i >= 0 && j >= 0 && k >= 0 && i < dims_[0] && j < dims_[1] && k < dims_[2];
  }
  std::int64_t linear_index(int i, int j, int k) const {
    return static_cast<std::int64_t>(i) +
           static_cast<std::int64_t>(dims_[0]) *
               (static_cast<std::int64_t>(j) + static_cast<std::int64_t>(dims_[1]) * k);
  }
  Label at(int i, int j, int k) const {
    return static_cast<Label>(labels_[linear_index(i, j, k)]);
  }
  Label at_index(std::int64_t idx) const { return static_cast<Label>(labels_[idx]); }

  Vec3 voxel_center(int i, int j, int k) const {
    return origin_ + spacing_ * Vec3(i, j, k);
  }
  // Index of the voxel whose center is nearest to p; may be out of bounds.
  std::array<int, 3> voxel_of(const Vec3& p) const {
    return {static_cast<int>(std::llround((p.x() - origin_.x()) / spacing_)),
            static_cast<int>(std::llround((p.y() - origin_.y()) / spacing_)),
            static_cast<int>(std::llround((p.z() - origin_.z()) / spacing_))};
  }
  // Label at the voxel containing p; Air outside the grid.
  Label label_at_point(const Vec3& p) const {
    const auto v = voxel_of(p);
    if (!in_bounds(v[0], v[1], v[2])) return Label::Air;
    return at(v[0], v[1], v[2]);
  }

  const std::vector<std::uint8_t>& raw() const { return labels_; }
  const std::array<std::int64_t, kNumLabels>& label_counts() const { return counts_; }
  const IndexBox& label_box(Label l) const { return boxes_[static_cast<int>(l)]; }

 private:
  std::array<int, 3> dims_;
  double spacing_;
  Vec3 origin_;
  std::vector<std::uint8_t> labels_;
  std::array<std::int64_t, kNumLabels> counts_{};
  std::array<IndexBox, kNumLabels> boxes_{};
};

}  // namespace spinerl
