#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "liftplan/model.hpp"
#include "reference_oracle.hpp"

namespace liftplan {
namespace {

// Demo strip state at z1 = 0.5 (L = 1, q = 1, k = 0.2), from a 40-digit
// bisection on the reduced equation followed by back-substitution.
constexpr double kU = 2.6233873356991237;
constexpr double kA = 0.084353400337494641;
constexpr double kL1Hang = 0.22129164216854163;
constexpr double kArc = 0.57823299831252682;
constexpr double kAlpha = 1.4259368291875122;
constexpr double kX = 0.64305864385601481;

MaterialSpec demo() { return {1.0, 1.0, 0.2, 0.0, "demo"}; }

CatenaryState demo_state_at_half() {
  CatenaryState s;
  s.z1 = 0.5;
  s.u = kU;
  s.a = kA;
  s.l1 = kL1Hang;
  s.L1 = kArc;
  s.H = kA;
  s.alpha = kAlpha;
  return s;
}

TEST(MaterialSpecTest, ValidateRejectsBadFields) {
  EXPECT_NO_THROW(demo().validate());
  EXPECT_THROW((MaterialSpec{0.0, 1.0, 0.2, 0.0, ""}.validate()), DomainError);
  EXPECT_THROW((MaterialSpec{1.0, -1.0, 0.2, 0.0, ""}.validate()), DomainError);
  EXPECT_THROW((MaterialSpec{1.0, 1.0, 0.0, 0.0, ""}.validate()), DomainError);
  EXPECT_THROW((MaterialSpec{1.0, 1.0, 0.2, -0.1, ""}.validate()), DomainError);
  EXPECT_NO_THROW((MaterialSpec{1.0, 1.0, 0.2, 0.0, ""}.validate()));
}

TEST(CatenaryHeightTest, LowestPointIsZero) { EXPECT_EQ(catenary_height(0.0, 0.2), 0.0); }

TEST(CatenaryHeightTest, SolvedGraspPointReachesLiftHeight) {
  EXPECT_NEAR(catenary_height(kL1Hang, kA), 0.5, 1e-12);
  // Rounded inputs quoted for the demo setup.
  EXPECT_NEAR(catenary_height(0.2219, 0.0847), 0.5, 5e-3);
}

TEST(CatenaryHeightTest, EvenAndNonnegative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-2.0, 2.0), as(0.05, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = xs(rng), a = as(rng);
    EXPECT_EQ(catenary_height(x, a), catenary_height(-x, a));
    EXPECT_GE(catenary_height(x, a), 0.0);
  }
  EXPECT_EQ(catenary_height(-0.1, 0.3), catenary_height(0.1, 0.3));
}

TEST(CatenaryHeightTest, RejectsNonpositiveParameter) {
  EXPECT_THROW(catenary_height(0.1, 0.0), DomainError);
  EXPECT_THROW(catenary_height(0.1, -1.0), DomainError);
}

TEST(HangingArcLengthTest, MatchesQuadrature) {
  EXPECT_EQ(hanging_arc_length(0.0, 0.2), 0.0);
  const long double a = kA;
  const long double quad = reference::simpson(
      [a](long double x) {
        const long double s = std::sinh(x / a);
        return std::sqrt(1.0L + s * s);
      },
      0.0L, static_cast<long double>(kL1Hang), 20000);
  EXPECT_NEAR(hanging_arc_length(kL1Hang, kA), static_cast<double>(quad), 1e-10);
  EXPECT_NEAR(hanging_arc_length(kL1Hang, kA), kArc, 1e-12);
}

TEST(HangingArcLengthTest, BoundsChordAndIncreases) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ls(0.0, 1.0), as(0.01, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double l1 = ls(rng), a = as(rng);
    EXPECT_GE(hanging_arc_length(l1, a), l1);
    EXPECT_LT(hanging_arc_length(l1, a), hanging_arc_length(l1 + 1e-3, a));
  }
}

TEST(HangingArcLengthTest, RejectsBadArguments) {
  EXPECT_THROW(hanging_arc_length(0.1, 0.0), DomainError);
  EXPECT_THROW(hanging_arc_length(-0.1, 0.2), DomainError);
}

TEST(TensionFromFrictionTest, Cases) {
  const MaterialSpec m = demo();
  EXPECT_EQ(tension_from_friction(m, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(tension_from_friction(m, 0.0), 0.2);
  EXPECT_NEAR(tension_from_friction(m, kArc), kA, 1e-15);
  EXPECT_NEAR(tension_from_friction(m, 0.579), 0.0842, 1e-12);
  EXPECT_THROW(tension_from_friction(m, 1.0001), DomainError);
  EXPECT_THROW(tension_from_friction(m, -0.1), DomainError);
}

TEST(TangentAngleTest, Cases) {
  EXPECT_EQ(tangent_angle(0.0), 0.0);
  const double via_series = std::atan(static_cast<double>(reference::sinh_series(2.62L)));
  EXPECT_NEAR(tangent_angle(2.62), via_series, 1e-14);
  EXPECT_NEAR(tangent_angle(2.62), 1.4254470353798577, 1e-14);
  EXPECT_NEAR(to_degrees(tangent_angle(2.62)), 81.67, 0.01);
  EXPECT_THROW(tangent_angle(-1e-9), DomainError);
}

TEST(TangentAngleTest, StrictlyMonotoneTowardRightAngle) {
  double prev = tangent_angle(0.0);
  for (double u = 0.05; u < 18.0; u += 0.05) {
    const double cur = tangent_angle(u);
    EXPECT_GT(cur, prev) << "u = " << u;
    EXPECT_LT(cur, kHalfPi);
    prev = cur;
  }
  EXPECT_NEAR(tangent_angle(30.0), kHalfPi, 1e-12);
}

TEST(QuaternionFromPitchTest, Cases) {
  const Quat identity = quaternion_from_pitch(0.0);
  EXPECT_EQ(identity.w(), 1.0);
  EXPECT_EQ(identity.vec().norm(), 0.0);

  const Quat quarter = quaternion_from_pitch(kHalfPi);
  const double r = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(quarter.w(), r, 1e-15);
  EXPECT_EQ(quarter.x(), 0.0);
  EXPECT_NEAR(quarter.y(), r, 1e-15);
  EXPECT_EQ(quarter.z(), 0.0);
}

TEST(QuaternionFromPitchTest, UnitNormAndRotationConvention) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angles(0.0, kHalfPi);
  for (int i = 0; i < 200; ++i) {
    const double alpha = angles(rng);
    const Quat q = quaternion_from_pitch(alpha);
    EXPECT_NEAR(q.norm(), 1.0, 1e-12);
    const Eigen::Vector3d rotated = q * Eigen::Vector3d::UnitX();
    EXPECT_NEAR(rotated.x(), std::cos(alpha), 1e-14);
    EXPECT_NEAR(rotated.y(), 0.0, 1e-14);
    EXPECT_NEAR(rotated.z(), -std::sin(alpha), 1e-14);
  }
}

TEST(WaypointCoordinatesTest, FlatStateSitsAtGraspEdge) {
  CatenaryState flat;
  flat.a = 0.2;
  flat.H = 0.2;
  const Vec2 p = waypoint_coordinates(flat, demo());
  EXPECT_EQ(p.x(), 1.0);
  EXPECT_EQ(p.y(), 0.0);
}

TEST(WaypointCoordinatesTest, DemoStateAtHalfHeight) {
  const CatenaryState s = demo_state_at_half();
  const Vec2 p = waypoint_coordinates(s, demo());
  EXPECT_NEAR(p.x(), kX, 1e-12);
  EXPECT_NEAR(p.y(), 0.5, 1e-12);
  EXPECT_NEAR(p.x() + s.L1 - s.l1, 1.0, 1e-15);

  const auto ref = reference::reference_state(0.5L, 1.0L, 1.0L, 0.2L);
  EXPECT_NEAR(p.x(), static_cast<double>(ref.x), 1e-12);
}

TEST(WaypointCoordinatesTest, NearlyFullyHungApproachesFarEnd) {
  // State at z1 = 1 - 1e-6 of the demo strip.
  CatenaryState s;
  s.z1 = 1.0 - 1e-6;
  s.u = 16.300416360500933;
  s.a = 1.6666666898627609e-7;
  s.H = s.a;
  s.l1 = s.a * s.u;
  s.L1 = s.a * std::sinh(s.u);
  const Vec2 p = waypoint_coordinates(s, demo());
  EXPECT_LT(p.x(), 1e-5);
  EXPECT_NEAR(p.y(), 1.0, 1e-5);
}

TEST(WaypointCoordinatesTest, SingularStateThrows) {
  CatenaryState s;
  s.l1 = 0.1;
  s.H = 0.0;
  EXPECT_THROW(waypoint_coordinates(s, demo()), DomainError);
}

TEST(ModelTemplateTest, WorksForOtherScalars) {
  EXPECT_NEAR(static_cast<double>(hanging_arc_length<long double>(0.3L, 0.2L)),
              hanging_arc_length(0.3, 0.2), 1e-14);
  EXPECT_NEAR(catenary_height<float>(0.1f, 0.2f), catenary_height(0.1, 0.2), 1e-6);
  EXPECT_NEAR(quaternion_from_pitch<float>(0.3f).norm(), 1.0f, 1e-6f);
}

}  // namespace
}  // namespace liftplan
