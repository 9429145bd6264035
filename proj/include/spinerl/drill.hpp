#pragma once

#include "spinerl/geometry.hpp"

namespace spinerl {

// Drill pose: tip position in world mm plus the world-from-drill rotation.
// The drill forward axis is the drill-frame +x axis.
struct DrillPose {
  Vec3 tip = Vec3::Zero();
  Mat3 rotation = Mat3::Identity();

  Vec3 forward() const { return rotation.col(0); }
  bool valid(double tol = 1e-9) const { return is_rotation(rotation, tol); }

  DrillPose translated(double t_mm) const {
    return DrillPose{tip + t_mm * forward(), rotation};
  }
};

// Cylinder of diameter d extending length_mm backward from the tip along
// the drill -x axis.
struct DrillCylinder {
  DrillPose pose;
  double diameter_mm = 5.0;
  double length_mm = 120.0;
};

}  // namespace spinerl
