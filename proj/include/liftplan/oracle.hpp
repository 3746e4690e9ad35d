#pragma once

// Discrete-chain check of the catenary solution. A chain of n rigid links
// carries half a link's weight at each end node and a full link's weight at
// every interior node, so link i (1-based from the bottom) has slope
// q (i - 1/2) h / H. Positions come from cumulative sums of link directions.
// Nothing here evaluates cosh/sinh.

#include <cstddef>
#include <vector>

#include "liftplan/model.hpp"
#include "liftplan/solver.hpp"
#include "liftplan/trajectory.hpp"

namespace liftplan {

struct ChainEquilibrium {
  std::size_t n_links = 0;
  double link_length = 0.0;
  std::vector<Vec2> node_positions;  // from O upward to A
  std::vector<double> link_angles;   // bottom to top
  double H_input = 0.0;
  Vec2 endpoint = Vec2::Zero();
  double endpoint_angle = 0.0;
};

ChainEquilibrium chain_hang(double H, double q, double L1, std::size_t n);

struct VerificationReport {
  double max_position_error = 0.0;  // [m]
  double angle_error = 0.0;         // [rad]
  double tension_error = 0.0;       // [N]
  std::size_t checked = 0;
  std::size_t skipped = 0;  // e.g. the analytic terminal waypoint

  bool passes(double pos_tol, double ang_tol, double tension_tol) const {
    return max_position_error < pos_tol && angle_error < ang_tol && tension_error < tension_tol;
  }
  // Worst-case merge.
  void absorb(const VerificationReport& other);
};

struct VerificationThresholds {
  double position = 0.0;
  double angle = 0.0;
  double tension = 0.0;

  // 1e-3 L position, 0.1 degree angle, round-off-level tension balance.
  static VerificationThresholds defaults_for(const MaterialSpec& material);
};

VerificationReport verify_state(const CatenaryState& state, const MaterialSpec& material,
                                std::size_t n);

// Checks every stride-th waypoint (and the last one) against a chain built
// from the re-solved state at that waypoint's lift height.
VerificationReport verify_trajectory(const Trajectory& traj, std::size_t n, std::size_t stride);

}  // namespace liftplan
