#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "spinerl/label_volume.hpp"

namespace spinerl {

enum class Side { Left = 0, Right = 1 };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Ideal screw trajectory, annotated analytically by the generator.
struct GoldStandard {
  Side side = Side::Right;
  Vec3 entry_mm = Vec3::Zero();   // cancellous entry
  Vec3 exit_mm = Vec3::Zero();    // cancellous end of the ideal screw
  Vec3 direction = Vec3::UnitX(); // unit insertion direction
  double pw_mm = 8.0;             // pedicle width
  double d_mm = 5.6;              // screw (= drill) diameter, 0.7 * pw by default
};

// Shape parameters of the procedural vertebra phantom. World frame: +x
// posterior->anterior (nominal insertion direction), +y lateral (left pedicle
// at y < 0), +z caudal->cranial, canal axis in the plane y = 0.
struct PhantomParams {
  std::array<double, 3> body_half_axes_mm = {17.0, 20.0, 14.0};  // (x, y, z)
  double cortical_thickness_mm = 1.5;
  double pedicle_width_mm = 8.0;
  double pedicle_length_mm = 18.0;      // posterior extension from the canal plane
  double pedicle_inclination_rad = 0.25;  // toward midline
  double canal_radius_mm = 8.5;
  double muscle_thickness_mm = 30.0;
  double skin_thickness_mm = 5.0;
  std::uint64_t seed = 0;

  double canal_half_length_mm = 12.0;
  double arch_thickness_mm = 6.0;
  double spacing_mm = 1.0;
  double screw_diameter_fraction = 0.7;

  void validate() const;  // throws std::invalid_argument

  // L1-L5 analogues: inclination decreasing, pedicle width increasing.
  static PhantomParams preset(int lumbar_level /* 1..5 */, std::uint64_t seed);
};

// Builds the labeled volume plus the per-side gold standards. Deterministic
// given the seed; the seed smoothly perturbs the shape parameters by +-5%.
std::pair<LabelVolume, std::array<GoldStandard, 2>> generate_phantom(const PhantomParams& p);

// Nearest-neighbor resample onto the same grid with coordinates scaled about
// the volume center; gold standards are mapped through the same affine map.
std::pair<LabelVolume, std::array<GoldStandard, 2>> scale_anatomy(
    const LabelVolume& vol, const std::array<GoldStandard, 2>& gs, const Vec3& scale);

}  // namespace spinerl
