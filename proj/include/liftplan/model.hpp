#pragma once

// Domain types and the closed-form catenary relations for a sheet strip lifted
// by one edge. The hanging part AO is a catenary with its lowest point O where
// it leaves the support surface; the rest (length l2 = L - L1) lies flat and
// its friction caps the horizontal tension H.

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "liftplan/errors.hpp"

namespace liftplan {

using Vec2 = Eigen::Vector2d;
using Quat = Eigen::Quaterniond;

struct MaterialSpec {
  double length_L = 1.0;             // [m]
  double weight_q = 1.0;             // weight per unit length [N/m]
  double friction_k_covering = 0.2;  // material vs. support surface
  double friction_f_gripper = 0.0;   // material vs. gripper, informational
  std::string label;

  // Throws DomainError when an invariant is violated.
  void validate() const;
};

// Equilibrium of the strip with the grasped edge A at height z1.
struct CatenaryState {
  double z1 = 0.0;     // lift height of A [m]
  double u = 0.0;      // shape ratio l1 / a
  double a = 0.0;      // catenary parameter H / q [m]
  double l1 = 0.0;     // horizontal projection of AO [m]
  double L1 = 0.0;     // arc length of AO [m]
  double H = 0.0;      // horizontal tension at O [N]
  double alpha = 0.0;  // tangent angle at A [rad]
};

enum class LiftMode { dexterous, vertical_naive };

// Gripper pose in the lift plane. Origin at the far (non-grasped) end of the
// material, x toward the grasped edge, z up. `alpha` is the commanded gripper
// pitch and `quat` its rotation about +y, scalar-first. `edge_alpha` is the
// material's tangent angle at A, which equals `alpha` for dexterous lifting.
struct Waypoint {
  double z1 = 0.0;
  double x = 0.0;
  double z = 0.0;
  double alpha = 0.0;
  Quat quat = Quat::Identity();
  double edge_alpha = 0.0;
};

// z of a catenary with parameter a, measured from its lowest point.
template <typename Scalar>
Scalar catenary_height(Scalar x, Scalar a) {
  if (!(a > Scalar(0))) throw DomainError("catenary_height: a must be positive");
  using std::cosh;
  return a * (cosh(x / a) - Scalar(1));
}

// Arc length of a catenary from its lowest point to horizontal offset l1.
template <typename Scalar>
Scalar hanging_arc_length(Scalar l1, Scalar a) {
  if (!(a > Scalar(0))) throw DomainError("hanging_arc_length: a must be positive");
  if (l1 < Scalar(0)) throw DomainError("hanging_arc_length: l1 must be nonnegative");
  using std::sinh;
  return a * sinh(l1 / a);
}

// Horizontal tension the lying segment can hold: q * (L - L1) * k.
template <typename Scalar>
Scalar tension_from_friction(const MaterialSpec& material, Scalar L1) {
  const Scalar L = Scalar(material.length_L);
  if (L1 < Scalar(0) || L1 > L) {
    throw DomainError("tension_from_friction: L1 must lie in [0, L]");
  }
  return Scalar(material.weight_q) * (L - L1) * Scalar(material.friction_k_covering);
}

// Tangent angle at the grasped edge, atan(sinh(u)), in [0, pi/2).
template <typename Scalar>
Scalar tangent_angle(Scalar u) {
  if (u < Scalar(0)) throw DomainError("tangent_angle: u must be nonnegative");
  using std::atan;
  using std::sinh;
  return atan(sinh(u));
}

// Rotation by alpha about +y: (cos(alpha/2), 0, sin(alpha/2), 0). Applied to
// +x it yields (cos alpha, 0, -sin alpha).
template <typename Scalar>
Eigen::Quaternion<Scalar> quaternion_from_pitch(Scalar alpha) {
  return Eigen::Quaternion<Scalar>(
      Eigen::AngleAxis<Scalar>(alpha, Eigen::Matrix<Scalar, 3, 1>::UnitY()));
}

// Position of the grasped edge for slip-free lifting, far end at x = 0:
// x = L - L1 + l1, z = a (cosh(l1 / a) - 1).
Vec2 waypoint_coordinates(const CatenaryState& state, const MaterialSpec& material);

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

inline double to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }
inline double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace liftplan
