#pragma once

#include <string_view>
#include <vector>

#include "liftplan/model.hpp"
#include "liftplan/solver.hpp"

namespace liftplan {

struct TrajectoryRequest {
  MaterialSpec material;
  double step_dz = 0.001;
  LiftMode mode = LiftMode::dexterous;
  bool include_terminal = true;
  SolverConfig solver;
};

struct Trajectory {
  MaterialSpec material;
  LiftMode mode = LiftMode::dexterous;
  double step_dz = 0.001;
  SolverConfig solver;
  std::vector<Waypoint> waypoints;
  bool terminal_appended = false;
};

// Lift-height grid {0, step, 2 step, ...} strictly below L (1 - kTerminalEps).
std::vector<double> height_grid(double length_L, double step_dz);

// Waypoint for one solved state. Dexterous mode places the grasp edge so the
// far end never moves; vertical-naive keeps it at x = L, pitched to pi/2 once
// lifting has started.
Waypoint make_waypoint(const CatenaryState& state, const MaterialSpec& material, LiftMode mode);

// Fully hung pose (x = 0, z = L, alpha = pi/2) that the solver cannot reach.
Waypoint terminal_waypoint(const MaterialSpec& material);

Trajectory generate_trajectory(const TrajectoryRequest& req);

// Distance the lying material slides when the edge rises vertically: L1 - l1.
double slip_distance_naive(double z1, const MaterialSpec& material, const SolverConfig& cfg = {});

// Uniform resampling at arc-length spacing ds along the (x, z) polyline.
// Positions interpolate linearly, orientations by slerp; endpoints are kept.
Trajectory resample_by_path_length(const Trajectory& traj, double ds);

double polyline_length(const std::vector<Waypoint>& waypoints);

std::string_view to_string(LiftMode mode);
LiftMode parse_lift_mode(std::string_view text);

}  // namespace liftplan
