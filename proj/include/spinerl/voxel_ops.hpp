#pragma once

#include <vector>

#include "spinerl/drill.hpp"
#include "spinerl/label_volume.hpp"

namespace spinerl {

// True iff the point q lies inside the cylinder: axial coordinate measured
// from the tip backward in [0, L), perpendicular distance <= d/2.
inline bool cylinder_contains(const DrillCylinder& cyl, const Vec3& q) {
  const Vec3 f = cyl.pose.forward();
  const Vec3 v = q - cyl.pose.tip;
  const double s = -v.dot(f);  // distance behind the tip
  if (s < 0.0 || s >= cyl.length_mm) return false;
  const Vec3 perp = v + s * f;
  const double r = 0.5 * cyl.diameter_mm;
  return perp.squaredNorm() <= r * r;
}

// All voxels whose centers lie inside the cylinder, sorted by linear index.
// Portions outside the volume are clipped.
VoxelSet rasterize_cylinder(const DrillCylinder& cyl, const LabelVolume& vol);

// (count of set voxels carrying the label) * spacing^3.
double intersection_volume_mm3(const VoxelSet& set, const LabelVolume& vol, Label group);

// Safe status: no NoGo voxel inside the drill cylinder and no breakthrough.
// Breakthrough: sampling the drill axis from the tip backward at spacing/2
// steps, the tip sample is non-bone while at least one bone sample lies
// strictly behind the tip within the drill length.
bool is_safe(const DrillCylinder& cyl, const LabelVolume& vol);

// Smallest t in {0, step, 2*step, ..., horizon} for which the drill,
// translated t along its forward axis, is unsafe; horizon if none.
double safe_distance_mm(const DrillPose& pose, double diameter_mm, const LabelVolume& vol,
                        double horizon_mm = 150.0, double step_mm = 0.5,
                        double drill_length_mm = 120.0);

// For each (y,z) raster column, the center of the first Cortical voxel hit
// by a ray cast along world +x. Throws if the volume has no Cortical voxels.
std::vector<Vec3> extract_dorsal_surface(const LabelVolume& vol);

}  // namespace spinerl
