#include "spinerl/voxel_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinerl {

namespace {

// Voxel-index AABB of the cylinder, clamped to the volume. May be empty.
IndexBox cylinder_index_box(const DrillCylinder& cyl, const LabelVolume& vol) {
  const Vec3 a = cyl.pose.tip;
  const Vec3 b = cyl.pose.tip - cyl.length_mm * cyl.pose.forward();
  const double r = 0.5 * cyl.diameter_mm;
  IndexBox box;
  for (int ax = 0; ax < 3; ++ax) {
    const double lo = std::min(a[ax], b[ax]) - r;
    const double hi = std::max(a[ax], b[ax]) + r;
    const double o = vol.origin()[ax];
    const double h = vol.spacing();
    int ilo = static_cast<int>(std::floor((lo - o) / h));
    int ihi = static_cast<int>(std::ceil((hi - o) / h));
    box.lo[ax] = std::max(ilo, 0);
    box.hi[ax] = std::min(ihi, vol.dims()[ax] - 1);
  }
  return box;
}

IndexBox intersect(const IndexBox& a, const IndexBox& b) {
  IndexBox out;
  for (int ax = 0; ax < 3; ++ax) {
    out.lo[ax] = std::max(a.lo[ax], b.lo[ax]);
    out.hi[ax] = std::min(a.hi[ax], b.hi[ax]);
  }
  return out;
}

bool breakthrough(const DrillCylinder& cyl, const LabelVolume& vol) {
  const double dt = 0.5 * vol.spacing();
  const Vec3 f = cyl.pose.forward();
  if (is_bone(vol.label_at_point(cyl.pose.tip))) return false;
  const int n = static_cast<int>(std::floor(cyl.length_mm / dt));
  for (int k = 1; k <= n; ++k) {
    if (is_bone(vol.label_at_point(cyl.pose.tip - (k * dt) * f))) return true;
  }
  return false;
}

}  // namespace

VoxelSet rasterize_cylinder(const DrillCylinder& cyl, const LabelVolume& vol) {
  VoxelSet out;
  const IndexBox box = cylinder_index_box(cyl, vol);
  if (box.empty()) return out;
  for (int k = box.lo[2]; k <= box.hi[2]; ++k) {
    for (int j = box.lo[1]; j <= box.hi[1]; ++j) {
      for (int i = box.lo[0]; i <= box.hi[0]; ++i) {
        if (cylinder_contains(cyl, vol.voxel_center(i, j, k)))
          out.push_back(vol.linear_index(i, j, k));
      }
    }
  }
  return out;  // loop order yields ascending linear indices
}

double intersection_volume_mm3(const VoxelSet& set, const LabelVolume& vol, Label group) {
  std::int64_t count = 0;
  for (const std::int64_t idx : set) {
    if (vol.at_index(idx) == group) ++count;
  }
  const double h = vol.spacing();
  return static_cast<double>(count) * h * h * h;
}

bool is_safe(const DrillCylinder& cyl, const LabelVolume& vol) {
  // NoGo contact: only voxels inside both the cylinder AABB and the NoGo
  // bounding box can matter.
  const IndexBox& nogo = vol.label_box(Label::NoGo);
  if (!nogo.empty()) {
    const IndexBox box = intersect(cylinder_index_box(cyl, vol), nogo);
    if (!box.empty()) {
      for (int k = box.lo[2]; k <= box.hi[2]; ++k) {
        for (int j = box.lo[1]; j <= box.hi[1]; ++j) {
          for (int i = box.lo[0]; i <= box.hi[0]; ++i) {
            if (vol.at(i, j, k) == Label::NoGo &&
                cylinder_contains(cyl, vol.voxel_center(i, j, k)))
              return false;
          }
        }
      }
    }
  }
  return !breakthrough(cyl, vol);
}

double safe_distance_mm(const DrillPose& pose, double diameter_mm, const LabelVolume& vol,
                        double horizon_mm, double step_mm, double drill_length_mm) {
  if (!(horizon_mm > 0.0) || !(step_mm > 0.0))
    throw std::invalid_argument("safe_distance: horizon and step must be > 0");
  const int n = static_cast<int>(std::floor(horizon_mm / step_mm + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double t = i * step_mm;
    const DrillCylinder cyl{pose.translated(t), diameter_mm, drill_length_mm};
    if (!is_safe(cyl, vol)) return t;
  }
  return horizon_mm;
}

std::vector<Vec3> extract_dorsal_surface(const LabelVolume& vol) {
  if (vol.label_counts()[static_cast<int>(Label::Cortical)] == 0)
    throw std::runtime_error("extract_dorsal_surface: volume has no Cortical voxels");
  std::vector<Vec3> points;
  const IndexBox& cort = vol.label_box(Label::Cortical);
  for (int k = cort.lo[2]; k <= cort.hi[2]; ++k) {
    for (int j = cort.lo[1]; j <= cort.hi[1]; ++j) {
      for (int i = cort.lo[0]; i <= cort.hi[0]; ++i) {
        if (vol.at(i, j, k) == Label::Cortical) {
          points.push_back(vol.voxel_center(i, j, k));
          break;
        }
      }
    }
  }
  return points;
}

}  // namespace spinerl
