#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace spinerl {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rotation about one of the local (body-frame) axes, applied on the right:
// R_world_from_body' = R_world_from_body * R(axis, angle).
inline Mat3 rotate_local(const Mat3& r, int axis, double angle_rad) {
  Vec3 u = Vec3::Zero();
  u[axis] = 1.0;
  return r * Eigen::AngleAxisd(angle_rad, u).toRotationMatrix();
}

inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
  return (r * r.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace spinerl
